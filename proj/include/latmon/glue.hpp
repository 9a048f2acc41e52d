#pragma once

#include "latmon/isometry.hpp"

#include <functional>
#include <map>

namespace latmon {

struct NikulinConstants;

// Gluing data of a primitive sublattice T in L: the glue group
// M = L/(T + Tperp) embedded in A_T + A_Tperp, its projections and the
// anti-isometry gamma = p . p_perp^{-1}.
struct GlueData {
    IMat T_basis;        // columns, L-coordinates
    IMat Tperp_basis;
    Lattice T_lat;       // abstract copies carrying the sublattice Grams
    Lattice Tperp_lat;
    FiniteQuadraticModule A_T;
    FiniteQuadraticModule A_perp;

    using Elem = FiniteQuadraticModule::Elem;
    std::vector<std::pair<Elem, Elem>> glue;   // (p(m), p_perp(m)), all of M
    std::map<Elem, Elem> gamma;                // Mbar_perp -> Mbar
    Int index;                                 // |M| = [L : T + Tperp]
};

// Enumerates the glue group from coset representatives obtained by the Smith
// normal form of the inclusion matrix [T | Tperp]. Checks the overlattice
// index identity |M|^2 = |A_T| |A_Tperp| / |A_L|, injectivity of both
// projections, and that gamma is an anti-isometry. A caller may pin the
// basis used for Tperp (it must span the computed complement); this keeps
// downstream identifications of Tperp in fixed coordinates.
GlueData glue_group(const Lattice& L, const IMat& T_basis,
                    const std::optional<IMat>& Tperp_basis = std::nullopt);

// An extension produced by the gluing criterion, with its (phi, psi) split
// retained so the psi slot can be flipped later.
struct Extension {
    Isometry Phi;    // on L
    Isometry phi;    // on T_lat
    Isometry psi;    // on Tperp_lat
};

// Callback solving for psi in O(Tperp) against the discriminant condition;
// returns nothing if it cannot produce one.
using PsiSolver = std::function<std::optional<Isometry>(const GlueData&, const Isometry&)>;

// Nikulin's criterion: phi in O(T) extends to O(L) iff some psi in O(Tperp)
// satisfies gamma . psibar = phibar . gamma. The returned Phi restricts to
// phi on T and psi on Tperp; integrality of the Q-linear extension is
// verified and a failure when the criterion holds is a logic error.
std::optional<Extension> nikulin_extends(const Lattice& L, const GlueData& gd,
                                         const Isometry& phi, const PsiSolver& solver);

// Checks the discriminant condition gamma . psibar = phibar . gamma.
bool glue_condition_holds(const GlueData& gd, const Isometry& phi, const Isometry& psi);

struct OrientationResult {
    std::optional<Isometry> corrected;   // variant with spinor norm +1, if any
    int spinor_original;
    int spinor_flipped;
    Extension chosen;                    // the variant behind `corrected` (if set)
};

// Evaluates the spinor norms of Phi and of its psi-negated variant and
// returns whichever lies in O^+. When T_perp is definite of even rank the
// flip provably never changes the spinor norm, so `corrected` is empty
// exactly when the original extension has spinor norm -1; both computed
// values are reported.
OrientationResult orientation_correct(const Lattice& L, const GlueData& gd, const Extension& ext);

// Extends phi in O(Lambda_fix) to a sigma-equivariant isometry of
// Lambda_K3 via the E8(-2) discriminant lifting oracle. Restriction and
// equivariance are verified exactly. Declared here, implemented with the
// paper-lattice constants.
Extension equivariant_extension(const NikulinConstants& pc, const Isometry& phi_fix);

} // namespace latmon
