#include "latmon/f2ortho.hpp"

#include <set>

namespace latmon {

const Lattice& e8_minus_two() {
    static const Lattice L = twist(Lattice::e8(), Int(-2));
    return L;
}

const E8ModTwo& e8_mod_two() {
    static const E8ModTwo data = [] {
        E8ModTwo d;
        const Lattice E8 = Lattice::e8();
        d.space.dim = 8;
        d.space.coeff = F2Mat(8);
        for (int i = 0; i < 8; ++i) {
            // q(e_i) = (alpha_i, alpha_i)/2 mod 2 = 1; b(e_i, e_j) = (alpha_i, alpha_j) mod 2
            d.space.coeff.set(i, i, (E8.gram()(i, i) / 2) % 2 != 0);
            for (int j = i + 1; j < 8; ++j)
                d.space.coeff.set(i, j, E8.gram()(i, j) % 2 != 0);
        }
        d.roots = &e8_positive_roots();
        for (const auto& rho : *d.roots) {
            Isometry r = reflection(E8, rho);
            d.transvections.push_back(F2Mat::from_int(r.matrix()));
        }
        return d;
    }();
    return data;
}

const BSGSGroup& e8_orthogonal_group_f2() {
    static const BSGSGroup group = BSGSGroup(e8_mod_two().transvections);
    return group;
}

ReducedVector reduce_mod2(const IVec& e) {
    static const Lattice E8 = Lattice::e8();
    Int n = inner(E8, e, e);
    Int half = n / 2;
    Int r = half % 2;
    if (r < 0) r += 2;
    return ReducedVector{f2_from_int(e), r != 0};
}

Int orthogonal_group_order_plus(int n) {
    Int order = 2;
    Int two(2);
    order *= boost::multiprecision::pow(two, unsigned(n * (n - 1)));
    order *= boost::multiprecision::pow(two, unsigned(n)) - 1;
    for (int i = 1; i <= n - 1; ++i)
        order *= boost::multiprecision::pow(two, unsigned(2 * i)) - 1;
    return order;
}

bool verify_e8_discriminant_isomorphism(int* checked) {
    const Lattice& E8m2 = e8_minus_two();
    FiniteQuadraticModule A(E8m2);
    if (A.order() != 256 || !A.is_two_elementary()) return false;

    const auto& mod2 = e8_mod_two();
    std::set<FiniteQuadraticModule::Elem> images;
    int count = 0;
    for (F2Vec v = 0; v < 256; ++v) {
        IVec e = f2_to_int(v, 8);
        // alpha(e) = [e/2] in A_{E8(-2)}
        QVec half(8);
        for (int i = 0; i < 8; ++i) half[i] = Rat(e[i]) / 2;
        auto cls = A.class_of_rational(half);
        images.insert(cls);

        // additivity: the image of e must be the sum of the single-bit images
        FiniteQuadraticModule::Elem sum = A.zero();
        for (int i = 0; i < 8; ++i) {
            if ((v >> i) & 1) {
                QVec hi(8, Rat(0));
                hi[i] = Rat(1) / 2;
                sum = A.add(sum, A.class_of_rational(hi));
            }
        }
        if (sum != cls) return false;

        // quadratic forms agree through the identification: q_A lands in
        // Z/2Z inside Q/2Z and matches the F2 value
        Rat qa = A.q(cls);
        Rat expected = mod2.space.q(v) ? Rat(1) : Rat(0);
        if (qa != expected) return false;
        ++count;
    }
    if (int(images.size()) != 256) return false;   // injective, hence bijective
    if (checked) *checked = count;
    return true;
}

Isometry lift_discriminant_isometry(const F2Mat& target) {
    const auto& mod2 = e8_mod_two();
    // pre: target preserves q
    for (F2Vec v = 0; v < 256; ++v)
        if (mod2.space.q(target.apply(v)) != mod2.space.q(v))
            throw std::invalid_argument("lift target does not preserve the quadratic form");

    const BSGSGroup& G = e8_orthogonal_group_f2();
    auto word = G.factor(target);   // throws on membership failure

    const Lattice& E8m2 = e8_minus_two();
    Isometry lift = Isometry::identity(E8m2);
    for (int label : word) {
        // root reflections of E8 and of E8(-2) have the same matrices
        lift = lift.compose(reflection(E8m2, (*mod2.roots)[size_t(label)]));
    }

    // round trip: in the generators [alpha_i/2] the induced action of an
    // integral isometry is its reduction mod 2
    if (!(F2Mat::from_int(lift.matrix()) == target))
        throw std::logic_error("lifted isometry does not induce the requested discriminant action");
    return lift;
}

Isometry lift_discriminant_isometry(const DiscriminantIsometry& target) {
    const auto& A = target.module();
    if (A.order() != 256 || !A.is_two_elementary())
        throw std::invalid_argument("lift expects the discriminant module of E8(-2)");

    // translate the action from the SNF generator basis to [alpha_i/2]
    F2Mat basis(8);   // columns: SNF coordinates of [alpha_i/2]
    for (int i = 0; i < 8; ++i) {
        QVec half(8, Rat(0));
        half[i] = Rat(1) / 2;
        auto cls = A.class_of_rational(half);
        F2Vec col = 0;
        for (int r = 0; r < 8; ++r)
            if (cls[size_t(r)] != 0) col |= (F2Vec(1) << r);
        basis.set_col(i, col);
    }
    F2Mat act(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) act.set(i, j, (target.matrix()(i, j) % 2) != 0);
    F2Mat in_alpha = basis.inverse() * act * basis;
    Isometry lift = lift_discriminant_isometry(in_alpha);

    // verify against the original module as well
    auto induced = induced_discriminant_action(lift, A);
    if (!(induced == target))
        throw std::logic_error("lifted isometry does not match the discriminant target");
    return lift;
}

} // namespace latmon
