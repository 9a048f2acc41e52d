#pragma once

#include "latmon/glue.hpp"

namespace latmon {

// The named lattices and distinguished data, built once:
//   lambda_nik = U(2)^3 + E8(-1) + <-2>^2         (rank 16)
//   lambda_k3  = U^3 + E8(-1)^2 + <-2>            (rank 23)
//   lambda_fix = U^3 + E8(-2) + <-2>              (rank 15)
//   lambda_1   = U^3 + E8(-2) + <-1>^2            (rank 16)
// Block order is fixed as listed; delta_Y = g1 + g2 and Sigma_Y = g1 - g2
// where g1, g2 generate the two <-2> summands (so (delta_Y +- Sigma_Y)/2
// are the generators), and likewise delta_1, Sigma_1 for the <-1> summands.
struct NikulinConstants {
    Lattice lambda_nik;
    Lattice lambda_k3;
    Lattice lambda_fix;
    Lattice lambda_1;

    IVec delta_X;    // in lambda_k3
    IVec delta_Y, sigma_Y;    // in lambda_nik
    IVec delta_1, sigma_1;    // in lambda_1

    Isometry sigma;  // involution of lambda_k3 exchanging the E8(-1) blocks

    IMat j_fix;      // 23x15: lambda_fix -> lambda_k3, u+e+k d_X -> u+e+e+k d_X
    IMat j_nik;      // 16x15: lambda_fix(2) -> lambda_nik, u+e+k -> u+2e+k g1+k g2
    IMat k3_perp;    // 23x8: fixed basis (0, a, -a, 0) identifying T_perp with E8(-2)

    GlueData glue_k3;          // T = j_fix image in lambda_k3

    IMat phi_matrix;           // 16x16 diag(1^6, 2^8, 1^2): lambda_1 -> lambda_nik
    IMat sigma_perp_basis;     // 16x15 basis of Sigma_Y^perp in lambda_nik
    IMat even_div_basis;       // 16x15 basis of the even-divisibility sublattice of Sigma_Y^perp

    static const NikulinConstants& get();

private:
    NikulinConstants();
};

// phi : lambda_1 -> lambda_nik, doubling the E8 block. Pairings double.
IVec phi_map(const NikulinConstants& pc, const IVec& v);

// Transfer f in O(lambda_nik) to phi^{-1} f phi in O(lambda_1); integrality
// is a theorem (the image of phi is the even-divisibility sublattice) and is
// verified, a failure being a logic error. `transfer_back` is the inverse
// group isomorphism.
Isometry transfer(const NikulinConstants& pc, const Isometry& f);
Isometry transfer_back(const NikulinConstants& pc, const Isometry& g);

// The operator induced on lambda_nik by a sigma-equivariant isometry of
// lambda_k3: fixes Sigma_Y, restricts through j_nik/j_fix to f|_fix, and is
// extended by Q-linearity over the finite-index sublattice.
Isometry induce_from_k3(const NikulinConstants& pc, const Isometry& f);

struct MonodromyGenerator {
    enum class Kind { InducedFromK3, Reflection };
    Kind kind;
    std::optional<Isometry> k3_source;   // InducedFromK3
    std::optional<IVec> vector;          // Reflection
    Isometry realized;                   // on lambda_nik
};

// Reflection generator: v primitive with v^2 in {-2,-4} and divisibility 2.
MonodromyGenerator monodromy_reflection(const NikulinConstants& pc, const IVec& v);

// Induced generator: f must be sigma-equivariant and orientation-preserving.
MonodromyGenerator monodromy_induced(const NikulinConstants& pc, const Isometry& f);

struct OrbitInvariants {
    Int square;
    Int div;
    bool lambda1_ray_div1;   // the ray of v meets phi(w) for a divisibility-1 w in lambda_1
    bool e8_mod4_zero;       // the E8(-1) component of v lies in 4 E8

    bool operator==(const OrbitInvariants&) const = default;
};

OrbitInvariants orbit_invariants(const NikulinConstants& pc, const IVec& v);

// Basis of {w in Sigma_Y^perp : divisibility of w in lambda_nik is even};
// computed from the mod-2 pairing kernel and checked to equal the j_nik
// image of lambda_fix(2).
IMat even_divisibility_sublattice(const NikulinConstants& pc);

struct Reconstruction {
    int eps;                                  // +1 or -1
    std::vector<MonodromyGenerator> word;     // certificate generators, in order
    Isometry realized;                        // their product, equals eps * f
};

// Main-theorem pipeline for f fixing Sigma_Y: restrict to the
// even-divisibility sublattice, extend sigma-equivariantly to lambda_k3,
// read the sign from the spinor norm, induce back and (for eps = -1)
// compose with R_{Sigma_Y}. The certificate product is verified to equal
// eps * f on all of lambda_nik.
Reconstruction reconstruct(const NikulinConstants& pc, const Isometry& f);

// Deterministic sampler of isometries of lambda_nik fixing Sigma_Y:
// products of monodromy reflections orthogonal to Sigma_Y, induced
// operators, and optionally the global flip -R_{Sigma_Y}.
Isometry sample_sigma_fixing_isometry(const NikulinConstants& pc, std::uint64_t seed, int length);

// Pools of integral reflection vectors for randomized suites.
std::vector<Isometry> reflection_pool(const Lattice& L, std::uint64_t seed, int count);

// Monodromy generator pool for G-words (all orientation-preserving).
std::vector<MonodromyGenerator> monodromy_generator_pool(const NikulinConstants& pc, std::uint64_t seed);

// Best-effort greedy descent moving v into the G-orbit representative
// Sigma_Y; experimental, excluded from the acceptance suites. On success the
// returned word w satisfies (prod w)(v) = Sigma_Y.
std::optional<std::vector<MonodromyGenerator>>
experimental_orbit_reduce(const NikulinConstants& pc, const IVec& v, std::uint64_t seed, int max_steps);

} // namespace latmon
