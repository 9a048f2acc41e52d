#include "latmon/f2.hpp"

#include <stdexcept>

namespace latmon {

namespace {

// rows of the augmented system [B | I] as bitmasks over 2*dim columns
bool gauss_invert(const F2Mat& m, F2Mat* inv) {
    const int n = m.dim();
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (m.get(i, j)) rows[i] |= (std::uint64_t(1) << j);
        rows[i] |= (std::uint64_t(1) << (n + i));
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if ((rows[r] >> c) & 1) { p = r; break; }
        if (p < 0) return false;
        std::swap(rows[c], rows[p]);
        for (int r = 0; r < n; ++r)
            if (r != c && ((rows[r] >> c) & 1)) rows[r] ^= rows[c];
    }
    if (inv) {
        *inv = F2Mat(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv->set(i, j, (rows[i] >> (n + j)) & 1);
    }
    return true;
}

} // namespace

F2Mat F2Mat::inverse() const {
    F2Mat inv;
    if (!gauss_invert(*this, &inv)) throw std::invalid_argument("singular F2 matrix");
    return inv;
}

bool F2Mat::invertible() const { return gauss_invert(*this, nullptr); }

F2Mat F2Mat::from_int(const IMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("F2Mat::from_int needs a square matrix");
    F2Mat out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, (m(i, j) % 2) != 0);
    return out;
}

F2Vec f2_from_int(const IVec& v) {
    F2Vec out = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] % 2 != 0) out |= (F2Vec(1) << i);
    return out;
}

IVec f2_to_int(F2Vec v, int dim) {
    IVec out(dim, Int(0));
    for (int i = 0; i < dim; ++i)
        if ((v >> i) & 1) out[i] = 1;
    return out;
}

F2Vec f2_solve(const F2Mat& B, F2Vec rhs) {
    return B.inverse().apply(rhs);
}

F2Vec F2BilinearSpace::characteristic_vector() const {
    if (!is_nondegenerate())
        throw std::invalid_argument("characteristic vector needs a nondegenerate bilinear form");
    F2Vec diag = 0;
    for (int i = 0; i < dim; ++i)
        if (b.get(i, i)) diag |= (F2Vec(1) << i);
    // b(w, e_i) = b(e_i, e_i): solve B^T w = diag; B symmetric here
    return f2_solve(b, diag);
}

bool F2QuadraticSpace::q(F2Vec v) const {
    bool out = false;
    for (int i = 0; i < dim; ++i) {
        if (!((v >> i) & 1)) continue;
        for (int j = i; j < dim; ++j)
            if (((v >> j) & 1) && coeff.get(i, j)) out = !out;
    }
    return out;
}

F2BilinearSpace F2QuadraticSpace::polar() const {
    F2BilinearSpace out;
    out.dim = dim;
    out.b = F2Mat(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j) out.b.set(i, j, coeff.get(std::min(i, j), std::max(i, j)));
    return out;
}

} // namespace latmon
