#include "latmon/fqm.hpp"

namespace latmon {

FiniteQuadraticModule::FiniteQuadraticModule(const Lattice& L) : lattice_(L) {
    if (!L.is_even())
        throw std::invalid_argument(
            "discriminant module requires an even lattice (q would not be Q/2Z-valued): " + L.label());

    SmithResult s = smith_normal_form(L.gram());
    proj_ = s.U;
    for (int i = 0; i < int(s.diag.size()); ++i) {
        if (s.diag[i] > 1) {
            factors_.push_back(s.diag[i]);
            keep_.push_back(i);
        }
    }
    gens_dual_ = IMat(L.rank(), int(keep_.size()));
    for (int j = 0; j < int(keep_.size()); ++j)
        for (int i = 0; i < L.rank(); ++i) gens_dual_(i, j) = s.Uinv(i, keep_[j]);

    gram_inv_ = inverse(to_rat(L.gram()));

    const int k = ngens();
    q_gen_.resize(k);
    b_gen_ = QMat(k, k);
    for (int i = 0; i < k; ++i) {
        QVec gi = gram_inv_ * to_rat(gens_dual_.col(i));
        for (int j = i; j < k; ++j) {
            Rat pair = dot(to_rat(gens_dual_.col(j)), gi);
            if (i == j) q_gen_[i] = mod2z(pair);
            b_gen_(i, j) = b_gen_(j, i) = mod1z(pair);
        }
    }
}

Int FiniteQuadraticModule::order() const {
    Int n(1);
    for (const auto& d : factors_) n *= d;
    return n;
}

bool FiniteQuadraticModule::is_two_elementary() const {
    for (const auto& d : factors_)
        if (d != 2) return false;
    return true;
}

FiniteQuadraticModule::Elem FiniteQuadraticModule::class_of_dual(const IVec& a) const {
    if (int(a.size()) != lattice_.rank())
        throw std::invalid_argument("dual coordinate vector has wrong length");
    IVec u = proj_ * a;
    Elem c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        Int r = u[keep_[i]] % factors_[i];
        if (r < 0) r += factors_[i];
        c[i] = r;
    }
    return c;
}

FiniteQuadraticModule::Elem FiniteQuadraticModule::class_of_rational(const QVec& x) const {
    QVec ax = to_rat(lattice_.gram()) * x;
    auto a = to_int(ax);
    if (!a) throw std::invalid_argument("vector is not in the dual lattice");
    return class_of_dual(*a);
}

FiniteQuadraticModule::Elem FiniteQuadraticModule::add(const Elem& a, const Elem& b) const {
    Elem c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
    return c;
}

FiniteQuadraticModule::Elem FiniteQuadraticModule::neg(const Elem& a) const {
    Elem c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] == 0 ? Int(0) : factors_[i] - a[i];
    return c;
}

FiniteQuadraticModule::Elem FiniteQuadraticModule::scale(const Int& n, const Elem& a) const {
    Elem c(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Int r = (n * a[i]) % factors_[i];
        if (r < 0) r += factors_[i];
        c[i] = r;
    }
    return c;
}

bool FiniteQuadraticModule::is_zero(const Elem& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Rat FiniteQuadraticModule::q(const Elem& a) const {
    Rat s(0);
    const int k = ngens();
    for (int i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        s += Rat(a[i] * a[i]) * q_gen_[i];
        for (int j = i + 1; j < k; ++j)
            if (a[j] != 0) s += Rat(2 * a[i] * a[j]) * b_gen_(i, j);
    }
    return mod2z(s);
}

Rat FiniteQuadraticModule::b(const Elem& x, const Elem& y) const {
    Rat s(0);
    const int k = ngens();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (x[i] != 0 && y[j] != 0) s += Rat(x[i] * y[j]) * b_gen_(i, j);
    return mod1z(s);
}

std::vector<FiniteQuadraticModule::Elem> FiniteQuadraticModule::elements() const {
    std::vector<Elem> out;
    Elem cur = zero();
    const int k = ngens();
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < factors_[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

IVec FiniteQuadraticModule::representative_dual_coords(const Elem& a) const {
    IVec out(lattice_.rank(), Int(0));
    for (int i = 0; i < ngens(); ++i) {
        if (a[i] == 0) continue;
        IVec g = gens_dual_.col(i);
        for (int r = 0; r < lattice_.rank(); ++r) out[r] += a[i] * g[r];
    }
    return out;
}

FiniteQuadraticModule discriminant_module(const Lattice& L) {
    return FiniteQuadraticModule(L);
}

DiscriminantIsometry::DiscriminantIsometry(FiniteQuadraticModule A, IMat action)
    : A_(std::move(A)), m_(std::move(action)) {
    const int k = A_.ngens();
    if (m_.rows() != k || m_.cols() != k)
        throw std::invalid_argument("discriminant action has wrong shape");
    const auto& d = A_.invariant_factors();
    // normalize entries into [0, d_i) and check well-definedness:
    // d_j * m(i,j) must vanish mod d_i for the map on generators to descend.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int r = m_(i, j) % d[i];
            if (r < 0) r += d[i];
            m_(i, j) = r;
            if ((d[j] * m_(i, j)) % d[i] != 0)
                throw std::invalid_argument("discriminant action is not a well-defined homomorphism");
        }
    // q-preservation on generators and generator pairs (determines q-preservation
    // everywhere by bilinearity of b and the polarization identity).
    for (int j = 0; j < k; ++j) {
        FiniteQuadraticModule::Elem gj(A_.zero());
        gj[j] = 1;
        if (A_.q(apply(gj)) != A_.q(gj))
            throw std::invalid_argument("discriminant action does not preserve q");
        for (int i = 0; i < j; ++i) {
            FiniteQuadraticModule::Elem gi(A_.zero());
            gi[i] = 1;
            if (A_.b(apply(gi), apply(gj)) != A_.b(gi, gj))
                throw std::invalid_argument("discriminant action does not preserve b");
        }
    }
}

FiniteQuadraticModule::Elem DiscriminantIsometry::apply(const FiniteQuadraticModule::Elem& a) const {
    const auto& d = A_.invariant_factors();
    FiniteQuadraticModule::Elem out(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        Int s(0);
        for (size_t j = 0; j < a.size(); ++j) s += m_(int(i), int(j)) * a[j];
        Int r = s % d[i];
        if (r < 0) r += d[i];
        out[i] = r;
    }
    return out;
}

DiscriminantIsometry DiscriminantIsometry::compose(const DiscriminantIsometry& o) const {
    return DiscriminantIsometry(A_, m_ * o.m_);
}

} // namespace latmon
