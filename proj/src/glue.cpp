#include "latmon/glue.hpp"

#include <set>

namespace latmon {

GlueData glue_group(const Lattice& L, const IMat& T_basis,
                    const std::optional<IMat>& Tperp_basis) {
    if (!is_primitive(L, T_basis))
        throw std::invalid_argument("glue_group: T is not a primitive sublattice");

    IMat P = orthogonal_complement(L, T_basis);
    if (Tperp_basis) {
        if (!same_lattice(P, *Tperp_basis))
            throw std::invalid_argument("glue_group: supplied Tperp basis does not span the complement");
        P = *Tperp_basis;
    }
    Lattice T_lat(sublattice_gram(L, T_basis), L.label() + "|T");
    Lattice P_lat(sublattice_gram(L, P), L.label() + "|Tperp");

    GlueData gd{T_basis, P, T_lat, P_lat,
                FiniteQuadraticModule(T_lat), FiniteQuadraticModule(P_lat),
                {}, {}, Int(0)};

    // coset representatives of L mod (T + Tperp) from the SNF of the
    // inclusion matrix
    IMat C = IMat::hcat(T_basis, P);
    SmithResult s = smith_normal_form(C);
    if (s.rank != C.cols())
        throw std::logic_error("glue_group: T + Tperp does not have full rank");

    Int count(1);
    for (const auto& d : s.diag) count *= d;
    gd.index = count;

    IMat TtG = T_basis.transpose() * L.gram();
    IMat PtG = P.transpose() * L.gram();

    std::vector<Int> idx(s.diag.size(), Int(0));
    std::set<std::pair<GlueData::Elem, GlueData::Elem>> seen;
    for (Int n(0); n < count; ++n) {
        // rep = Uinv * idx
        IVec y(C.rows(), Int(0));
        for (size_t i = 0; i < idx.size(); ++i) y[i] = idx[i];
        IVec v = s.Uinv * y;

        GlueData::Elem mT = gd.A_T.class_of_dual(TtG * v);
        GlueData::Elem mP = gd.A_perp.class_of_dual(PtG * v);
        if (!seen.insert({mT, mP}).second)
            throw std::logic_error("glue_group: duplicate glue image (projection not injective on cosets)");
        gd.glue.emplace_back(mT, mP);

        // increment mixed-radix index
        for (size_t i = idx.size(); i-- > 0;) {
            idx[i] += 1;
            if (idx[i] < s.diag[i]) break;
            idx[i] = 0;
        }
    }

    // gamma and injectivity of both projections
    std::set<GlueData::Elem> barM, barMperp;
    for (const auto& [mT, mP] : gd.glue) {
        if (!barM.insert(mT).second)
            throw std::logic_error("glue_group: p is not injective on M");
        if (!barMperp.insert(mP).second)
            throw std::logic_error("glue_group: p_perp is not injective on M");
        gd.gamma[mP] = mT;
    }

    // overlattice index identity |M|^2 = |A_T| |A_Tperp| / |A_L|
    FiniteQuadraticModule A_L(L);
    if (gd.index * gd.index * A_L.order() != gd.A_T.order() * gd.A_perp.order())
        throw std::logic_error("glue_group: overlattice index identity fails");

    // gamma is an anti-isometry: q_T(gamma x) + q_perp(x) = 0 mod 2
    for (const auto& [mP, mT] : gd.gamma) {
        if (mod2z(gd.A_T.q(mT) + gd.A_perp.q(mP)) != 0)
            throw std::logic_error("glue_group: gamma is not an anti-isometry");
    }

    return gd;
}

bool glue_condition_holds(const GlueData& gd, const Isometry& phi, const Isometry& psi) {
    DiscriminantIsometry phibar = induced_discriminant_action(phi, gd.A_T);
    DiscriminantIsometry psibar = induced_discriminant_action(psi, gd.A_perp);
    for (const auto& [mT, mP] : gd.glue) {
        auto lhs_arg = psibar.apply(mP);
        auto it = gd.gamma.find(lhs_arg);
        if (it == gd.gamma.end()) return false;   // psibar leaves Mbar_perp
        if (it->second != phibar.apply(mT)) return false;
    }
    return true;
}

namespace {

Isometry assemble_extension(const Lattice& L, const GlueData& gd, const Isometry& phi,
                            const Isometry& psi) {
    QMat C = to_rat(IMat::hcat(gd.T_basis, gd.Tperp_basis));
    QMat bd = to_rat(IMat::block_diag({phi.matrix(), psi.matrix()}));
    QMat full = C * bd * inverse(C);
    auto m = to_int(full);
    if (!m)
        throw std::logic_error("extension is not integral although the glue condition holds");
    Isometry Phi(L, *m);
    // restriction identities, exact
    if (!(Phi.matrix() * gd.T_basis == gd.T_basis * phi.matrix()))
        throw std::logic_error("extension does not restrict to phi on T");
    if (!(Phi.matrix() * gd.Tperp_basis == gd.Tperp_basis * psi.matrix()))
        throw std::logic_error("extension does not restrict to psi on Tperp");
    return Phi;
}

} // namespace

std::optional<Extension> nikulin_extends(const Lattice& L, const GlueData& gd,
                                         const Isometry& phi, const PsiSolver& solver) {
    if (!(phi.lattice() == gd.T_lat))
        throw std::invalid_argument("nikulin_extends: phi is not an isometry of T");
    auto psi = solver(gd, phi);
    if (!psi) return std::nullopt;
    if (!(psi->lattice() == gd.Tperp_lat))
        throw std::invalid_argument("nikulin_extends: solver returned an isometry of the wrong lattice");
    if (!glue_condition_holds(gd, phi, *psi)) return std::nullopt;
    return Extension{assemble_extension(L, gd, phi, *psi), phi, *psi};
}

OrientationResult orientation_correct(const Lattice& L, const GlueData& gd, const Extension& ext) {
    OrientationResult out{std::nullopt, 0, 0, ext};
    out.spinor_original = spinor_norm(ext.Phi);

    Isometry psi_flipped = ext.psi.negate();
    Extension flipped{ext.Phi, ext.phi, psi_flipped};
    if (glue_condition_holds(gd, ext.phi, psi_flipped)) {
        flipped.Phi = assemble_extension(L, gd, ext.phi, psi_flipped);
        out.spinor_flipped = spinor_norm(flipped.Phi);
    } else {
        // -psi incompatible with the glue (cannot happen on 2-torsion)
        out.spinor_flipped = 0;
    }

    if (out.spinor_original == 1) {
        out.corrected = ext.Phi;
        out.chosen = ext;
    } else if (out.spinor_flipped == 1) {
        out.corrected = flipped.Phi;
        out.chosen = flipped;
    }
    return out;
}

} // namespace latmon
