#include "latmon/isometry.hpp"

#include <random>

namespace latmon {

Isometry::Isometry(Lattice L, IMat m) : lat_(std::move(L)), m_(std::move(m)) {
    if (m_.rows() != lat_.rank() || m_.cols() != lat_.rank())
        throw std::invalid_argument("isometry matrix has wrong shape");
    if (!(m_.transpose() * lat_.gram() * m_ == lat_.gram()))
        throw std::invalid_argument("matrix does not preserve the Gram matrix of " + lat_.label());
}

Isometry Isometry::compose(const Isometry& o) const {
    if (!(lat_ == o.lat_)) throw std::invalid_argument("isometry composition across different lattices");
    return Isometry(lat_, m_ * o.m_);
}

Isometry Isometry::inverse() const {
    return Isometry(lat_, inverse_unimodular(m_));
}

bool reflection_is_integral(const Lattice& L, const IVec& v, int* witness) {
    Int vv = inner(L, v, v);
    if (vv == 0) throw std::invalid_argument("reflection in an isotropic vector");
    IVec pair = L.gram() * v;   // (e_j, v)
    for (int j = 0; j < L.rank(); ++j) {
        if ((2 * pair[j]) % vv != 0) {
            if (witness) *witness = j;
            return false;
        }
    }
    return true;
}

Isometry reflection(const Lattice& L, const IVec& v) {
    if (int(v.size()) != L.rank())
        throw std::invalid_argument("reflection vector has wrong length");
    Int vv = inner(L, v, v);
    if (vv == 0) throw std::invalid_argument("reflection in an isotropic vector");
    int witness = -1;
    if (!reflection_is_integral(L, v, &witness))
        throw std::invalid_argument("reflection R_v is not integral on " + L.label() +
                                    ": fails on basis vector " + std::to_string(witness));
    IVec pair = L.gram() * v;
    IMat m = IMat::identity(L.rank());
    for (int j = 0; j < L.rank(); ++j) {
        Int c = (2 * pair[j]) / vv;
        for (int i = 0; i < L.rank(); ++i) m(i, j) -= c * v[i];
    }
    return Isometry(L, std::move(m));
}

namespace {

// Matrix with a common scalar denominator: value = num / den, den > 0.
// Keeps the Cartan-Dieudonne loop in integer arithmetic.
struct ScaledMat {
    IMat num;
    Int den;

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = den;
        for (int i = 0; i < num.rows() && g != 1; ++i)
            for (int j = 0; j < num.cols() && g != 1; ++j) g = gcd_int(g, num(i, j));
        if (g > 1) {
            den /= g;
            for (int i = 0; i < num.rows(); ++i)
                for (int j = 0; j < num.cols(); ++j) num(i, j) /= g;
        }
    }

    ScaledMat times(const ScaledMat& o) const {
        ScaledMat out{num * o.num, den * o.den};
        out.normalize();
        return out;
    }

    bool is_identity() const {
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j)
                if (num(i, j) != (i == j ? den : Int(0))) return false;
        return true;
    }

    // column j equals the vector v (integer)?
    bool col_equals(int j, const IVec& v) const {
        for (int i = 0; i < num.rows(); ++i)
            if (num(i, j) != den * v[size_t(i)]) return false;
        return true;
    }

    IVec apply_scaled(const IVec& v) const { return num * v; }   // = den * (value * v)
};

// reflection matrix in an integer vector u: (uu I - 2 u (Gu)^T) / uu
ScaledMat reflection_scaled(const IMat& G, const IVec& u) {
    const int n = G.rows();
    IVec gu = G * u;
    Int uu = dot(u, gu);
    IMat m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m(i, j) = (i == j ? uu : Int(0)) - 2 * u[size_t(i)] * gu[size_t(j)];
    }
    ScaledMat out{std::move(m), uu};
    out.normalize();
    return out;
}

// Deterministic anisotropic pivot scan: basis vectors first, then pairwise
// sums, then pairwise differences. Such vectors span the space, so a
// nondegenerate form always yields a pivot moved by F (or F is the identity).
// Returns (pivot, moved); `moved` is false exactly when F = id.
std::pair<IVec, bool> find_pivot(const IMat& G, const ScaledMat& F) {
    const int n = G.rows();
    IVec first_aniso;
    bool have_aniso = false;

    for (int i = 0; i < n; ++i) {
        if (G(i, i) == 0) continue;
        IVec v(size_t(n), Int(0));
        v[size_t(i)] = 1;
        if (!have_aniso) { first_aniso = v; have_aniso = true; }
        if (!F.col_equals(i, v)) return {v, true};
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int sgn = 1; sgn >= -1; sgn -= 2) {
                Int q = G(i, i) + G(j, j) + 2 * sgn * G(i, j);
                if (q == 0) continue;
                IVec v(size_t(n), Int(0));
                v[size_t(i)] = 1;
                v[size_t(j)] = sgn;
                if (!have_aniso) { first_aniso = v; have_aniso = true; }
                bool moved = false;
                for (int r = 0; r < n && !moved; ++r)
                    if (F.num(r, i) + sgn * F.num(r, j) != F.den * v[size_t(r)]) moved = true;
                if (moved) return {v, true};
            }
    if (!have_aniso) throw std::logic_error("no anisotropic vector in a nondegenerate space");
    return {first_aniso, false};
}

} // namespace

int spinor_norm_rational(const QMat& gram, const QMat& f) {
    // clear denominators: scaling the form by a positive integer does not
    // change any sign(v^2)
    Int gden(1), fden(1);
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) {
            Int d = denominator(gram(i, j));
            gden = gden / gcd_int(gden, d) * d;
            d = denominator(f(i, j));
            fden = fden / gcd_int(fden, d) * d;
        }
    IMat G(gram.rows(), gram.cols());
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            G(i, j) = numerator(gram(i, j)) * (gden / denominator(gram(i, j)));
    ScaledMat F{IMat(f.rows(), f.cols()), fden};
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            F.num(i, j) = numerator(f(i, j)) * (fden / denominator(f(i, j)));
    F.normalize();

    int sign_acc = 1;
    while (G.rows() > 0) {
        if (F.is_identity()) break;
        const int n = G.rows();

        auto [x, moved] = find_pivot(G, F);
        if (!moved) break;   // F fixes a spanning set of anisotropic vectors

        // u = F x - x, up to the positive scale F.den (irrelevant for R_u)
        IVec u = vec_sub(F.apply_scaled(x), vec_scale(F.den, x));
        u = primitive_part(u);
        Int uu = dot(u, G * u);
        if (uu != 0) {
            sign_acc *= -sign(uu);
            F = reflection_scaled(G, u).times(F);
        } else {
            // (Fx - x) isotropic: R_x . R_{Fx+x} sends Fx to x
            IVec w = primitive_part(vec_add(F.apply_scaled(x), vec_scale(F.den, x)));
            Int ww = dot(w, G * w);   // proportional to 4 x^2, nonzero
            sign_acc *= -sign(ww);
            F = reflection_scaled(G, w).times(F);
            Int xx = dot(x, G * x);
            sign_acc *= -sign(xx);
            F = reflection_scaled(G, x).times(F);
        }
        if (F.is_identity()) break;

        // restrict to the orthogonal complement of x
        IMat irow(1, n);
        IVec gx = G * x;
        gx = primitive_part(gx);
        for (int j = 0; j < n; ++j) irow(0, j) = gx[size_t(j)];
        IMat K = kernel_int(irow);
        IMat Gn = K.transpose() * G * K;

        // F preserves span(K); change to the basis P = [x | K] and keep the
        // block: F' = adj(P) F.num P / (det(P) F.den)
        IMat P(n, n);
        for (int i = 0; i < n; ++i) {
            P(i, 0) = x[size_t(i)];
            for (int j = 0; j + 1 < n; ++j) P(i, j + 1) = K(i, j);
        }
        Int detP = determinant(P);
        QMat adjq = inverse(to_rat(P)) * Rat(detP);
        auto adj = to_int(adjq);
        if (!adj) throw std::logic_error("adjugate computation failed");
        IMat B = (*adj) * F.num * P;
        ScaledMat Fn{IMat(n - 1, n - 1), detP * F.den};
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n; ++j) Fn.num(i, j) = B(i + 1, j + 1);
        Fn.normalize();

        G = std::move(Gn);
        F = std::move(Fn);
    }
    return sign_acc;
}

int spinor_norm(const Isometry& f) {
    return spinor_norm_rational(to_rat(f.lattice().gram()), to_rat(f.matrix()));
}

bool is_orientation_preserving(const Isometry& f) {
    return spinor_norm(f) == 1;
}

DiscriminantIsometry induced_discriminant_action(const Isometry& f, const FiniteQuadraticModule& A) {
    // On dual coordinates the pushforward [x] -> [f x] acts by (F^T)^{-1}.
    IMat act = inverse_unimodular(f.matrix().transpose());
    const int k = A.ngens();
    IMat m(k, k);
    for (int j = 0; j < k; ++j) {
        auto cls = A.class_of_dual(act * A.generator_dual_coords(j));
        for (int i = 0; i < k; ++i) m(i, j) = cls[i];
    }
    return DiscriminantIsometry(A, std::move(m));
}

Isometry random_word(const Lattice& L, std::span<const Isometry> generators, int length,
                     std::uint64_t seed) {
    if (generators.empty()) throw std::invalid_argument("random_word needs at least one generator");
    std::mt19937_64 rng(seed);
    Isometry acc = Isometry::identity(L);
    for (int i = 0; i < length; ++i) {
        const Isometry& g = generators[size_t(rng() % generators.size())];
        acc = acc.compose(g);
    }
    return acc;
}

} // namespace latmon
