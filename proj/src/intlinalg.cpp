#include "latmon/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace latmon {

namespace {

struct SnfWork {
    IMat D, U, Uinv, V, Vinv;

    // row ops on D track U (left transform) and Uinv (inverse applied on the
    // right of U^-1, i.e. column ops with the opposite sign).
    void swap_rows(int i, int j) {
        for (int k = 0; k < D.cols(); ++k) std::swap(D(i, k), D(j, k));
        for (int k = 0; k < U.cols(); ++k) std::swap(U(i, k), U(j, k));
        for (int k = 0; k < Uinv.rows(); ++k) std::swap(Uinv(k, i), Uinv(k, j));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < D.rows(); ++k) std::swap(D(k, i), D(k, j));
        for (int k = 0; k < V.rows(); ++k) std::swap(V(k, i), V(k, j));
        for (int k = 0; k < Vinv.cols(); ++k) std::swap(Vinv(i, k), Vinv(j, k));
    }
    // row_i += f * row_j
    void add_row(int i, int j, const Int& f) {
        for (int k = 0; k < D.cols(); ++k) D(i, k) += f * D(j, k);
        for (int k = 0; k < U.cols(); ++k) U(i, k) += f * U(j, k);
        for (int k = 0; k < Uinv.rows(); ++k) Uinv(k, j) -= f * Uinv(k, i);
    }
    // col_i += f * col_j
    void add_col(int i, int j, const Int& f) {
        for (int k = 0; k < D.rows(); ++k) D(k, i) += f * D(k, j);
        for (int k = 0; k < V.rows(); ++k) V(k, i) += f * V(k, j);
        for (int k = 0; k < Vinv.cols(); ++k) Vinv(j, k) -= f * Vinv(i, k);
    }
    void negate_row(int i) {
        for (int k = 0; k < D.cols(); ++k) D(i, k) = -D(i, k);
        for (int k = 0; k < U.cols(); ++k) U(i, k) = -U(i, k);
        for (int k = 0; k < Uinv.rows(); ++k) Uinv(k, i) = -Uinv(k, i);
    }
};

} // namespace

SmithResult smith_normal_form(const IMat& M) {
    const int m = M.rows(), n = M.cols();
    SnfWork w;
    w.D = M;
    w.U = IMat::identity(m);
    w.Uinv = IMat::identity(m);
    w.V = IMat::identity(n);
    w.Vinv = IMat::identity(n);

    const int nmin = std::min(m, n);
    for (int s = 0; s < nmin; ++s) {
        // find the smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        Int best;
        for (int i = s; i < m; ++i)
            for (int j = s; j < n; ++j) {
                if (w.D(i, j) == 0) continue;
                Int a = abs_int(w.D(i, j));
                if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (pi < 0) break;   // trailing block is zero
        w.swap_rows(s, pi);
        w.swap_cols(s, pj);

        for (;;) {
            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (w.D(i, s) == 0) continue;
                Int q = floor_div(w.D(i, s), w.D(s, s));
                if (q != 0) w.add_row(i, s, -q);
                if (w.D(i, s) != 0) {
                    // remainder became the new, strictly smaller pivot
                    w.swap_rows(s, i);
                    clean = false;
                }
            }
            for (int j = s + 1; j < n; ++j) {
                if (w.D(s, j) == 0) continue;
                Int q = floor_div(w.D(s, j), w.D(s, s));
                if (q != 0) w.add_col(j, s, -q);
                if (w.D(s, j) != 0) {
                    w.swap_cols(s, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // pivot must divide every entry of the trailing block
            bool divides = true;
            for (int i = s + 1; i < m && divides; ++i)
                for (int j = s + 1; j < n && divides; ++j)
                    if (w.D(i, j) % w.D(s, s) != 0) {
                        w.add_row(s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.D(s, s) < 0) w.negate_row(s);
    }

    SmithResult out;
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    out.D = std::move(w.D);
    out.diag.resize(nmin);
    for (int i = 0; i < nmin; ++i) {
        out.diag[i] = out.D(i, i);
        if (out.diag[i] != 0) ++out.rank;
    }
    return out;
}

Int determinant(const IMat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = M.rows();
    if (n == 0) return 1;
    IMat a = M;
    Int prev(1);
    int swaps = 0;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            ++swaps;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    Int det = a(n - 1, n - 1);
    return (swaps % 2) ? Int(-det) : det;
}

QMat inverse(const QMat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = M.rows();
    QMat a = M, inv = QMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) { p = i; break; }
        if (p < 0) throw std::invalid_argument("singular matrix");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = a(k, k);
        for (int j = 0; j < n; ++j) { a(k, j) /= piv; inv(k, j) /= piv; }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IMat inverse_unimodular(const IMat& M) {
    auto inv = to_int(inverse(to_rat(M)));
    if (!inv) throw std::invalid_argument("matrix is not unimodular");
    return *inv;
}

QMat solve_full_col_rank(const QMat& A, const QMat& B) {
    QMat At = A.transpose();
    QMat X = inverse(At * A) * (At * B);
    if (!(A * X == B)) throw std::invalid_argument("linear system is inconsistent");
    return X;
}

IMat kernel_int(const IMat& M) {
    SmithResult s = smith_normal_form(M);
    const int n = M.cols();
    const int k = n - s.rank;
    IMat out(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) out(i, j) = s.V(i, s.rank + j);
    return out;
}

bool span_contains(const IMat& basis, const IVec& v) {
    QVec rhs = to_rat(v);
    QMat B(int(v.size()), 1);
    B.set_col(0, rhs);
    try {
        QMat x = solve_full_col_rank(to_rat(basis), B);
        return to_int(x).has_value();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool same_lattice(const IMat& A, const IMat& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (int j = 0; j < B.cols(); ++j)
        if (!span_contains(A, B.col(j))) return false;
    for (int j = 0; j < A.cols(); ++j)
        if (!span_contains(B, A.col(j))) return false;
    return true;
}

Int content(const IVec& v) {
    Int g(0);
    for (const auto& x : v) g = gcd_int(g, x);
    return g;
}

IVec primitive_part(const IVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IMat column_span_basis(const IMat& M) {
    SmithResult s = smith_normal_form(M);
    // M = Uinv D Vinv, so the column span is spanned by d_i * Uinv.col(i)
    IMat out(M.rows(), s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < M.rows(); ++i) out(i, j) = s.Uinv(i, j) * s.diag[j];
    return out;
}

} // namespace latmon
