#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latmon/nikulin.hpp"

#include <random>

using namespace latmon;

namespace {
const NikulinConstants& pc() { return NikulinConstants::get(); }
} // namespace

TEST_CASE("phi doubles pairings and sends Sigma_1 to Sigma_Y") {
    CHECK(phi_map(pc(), pc().sigma_1) == pc().sigma_Y);
    CHECK(phi_map(pc(), pc().delta_1) == pc().delta_Y);
    CHECK(phi_map(pc(), IVec(16, Int(0))) == IVec(16, Int(0)));

    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        IVec v(16), w(16);
        for (int i = 0; i < 16; ++i) {
            v[size_t(i)] = Int(int(rng() % 7)) - 3;
            w[size_t(i)] = Int(int(rng() % 7)) - 3;
        }
        CHECK(inner(pc().lambda_nik, phi_map(pc(), v), phi_map(pc(), w)) ==
              2 * inner(pc().lambda_1, v, w));
    }
}

TEST_CASE("image of phi is the even-divisibility sublattice of lambda_nik") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        IVec x(16);
        for (int i = 0; i < 16; ++i) x[size_t(i)] = Int(int(rng() % 7)) - 3;
        if (vec_is_zero(x)) continue;
        bool even_div = (divisibility(pc().lambda_nik, x) % 2) == 0;
        CHECK(span_contains(pc().phi_matrix, x) == even_div);
    }
}

TEST_CASE("transfer is a group isomorphism intertwined by phi") {
    CHECK(transfer(pc(), Isometry::identity(pc().lambda_nik)).is_identity());

    // transfer(R_{Sigma_Y}) = R_{Sigma_1}
    Isometry r = transfer(pc(), reflection(pc().lambda_nik, pc().sigma_Y));
    CHECK(r == reflection(pc().lambda_1, pc().sigma_1));

    auto pool = reflection_pool(pc().lambda_nik, 606, 20);
    for (int t = 0; t < 20; ++t) {
        Isometry f = random_word(pc().lambda_nik, pool, 2 + t % 5, std::uint64_t(t));
        Isometry g = random_word(pc().lambda_nik, pool, 2 + (t + 1) % 5, 50 + std::uint64_t(t));
        Isometry tf = transfer(pc(), f);
        CHECK(f.matrix() * pc().phi_matrix == pc().phi_matrix * tf.matrix());
        CHECK(transfer(pc(), f.compose(g)) == tf.compose(transfer(pc(), g)));
        CHECK(transfer_back(pc(), tf) == f);
    }
}

TEST_CASE("induced operators from the K3 side") {
    CHECK(induce_from_k3(pc(), Isometry::identity(pc().lambda_k3)).is_identity());
    // sigma restricts to the identity on the fixed lattice, so it induces id
    CHECK(induce_from_k3(pc(), pc().sigma).is_identity());

    // non-equivariant input is rejected: a reflection in a root of one E8
    // block does not commute with the block swap
    IVec root(23, Int(0));
    for (int i = 0; i < 8; ++i) root[size_t(6 + i)] = e8_positive_roots()[3][size_t(i)];
    Isometry bad = reflection(pc().lambda_k3, root);
    CHECK_THROWS_AS(induce_from_k3(pc(), bad), std::invalid_argument);

    // induce(equivariant_extension(phi)) restricts back to phi
    auto pool = reflection_pool(pc().lambda_fix, 88, 15);
    for (int t = 0; t < 5; ++t) {
        Isometry phi = random_word(pc().lambda_fix, pool, 1 + t % 4, 900 + std::uint64_t(t));
        Extension ext = equivariant_extension(pc(), phi);
        Isometry fhat = induce_from_k3(pc(), ext.Phi);
        CHECK(fhat.apply(pc().sigma_Y) == pc().sigma_Y);
        CHECK(fhat.matrix() * pc().j_nik == pc().j_nik * phi.matrix());
    }
}

TEST_CASE("monodromy reflection preconditions") {
    CHECK_NOTHROW(monodromy_reflection(pc(), pc().sigma_Y));
    CHECK_NOTHROW(monodromy_reflection(pc(), pc().delta_Y));

    IVec g1(16, Int(0));
    g1[14] = 1;   // square -2, divisibility 2
    CHECK_NOTHROW(monodromy_reflection(pc(), g1));

    // divisibility 1 is rejected with a message naming the precondition
    IVec root(16, Int(0));
    for (int i = 0; i < 8; ++i) root[size_t(6 + i)] = e8_positive_roots()[0][size_t(i)];
    try {
        monodromy_reflection(pc(), root);
        FAIL("expected a precondition failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("divisibility") != std::string::npos);
    }

    // wrong square
    IVec u(16, Int(0));
    u[0] = 1;
    u[1] = 1;   // square +4
    CHECK_THROWS_AS(monodromy_reflection(pc(), u), std::invalid_argument);

    // non-primitive
    CHECK_THROWS_AS(monodromy_reflection(pc(), vec_scale(Int(2), pc().sigma_Y)),
                    std::invalid_argument);
}

TEST_CASE("orbit invariants") {
    OrbitInvariants sy = orbit_invariants(pc(), pc().sigma_Y);
    CHECK(sy.square == -4);
    CHECK(sy.div == 2);
    // phi(Sigma_1) = Sigma_Y and Sigma_1 pairs to -1 with a <-1> generator:
    // the ray does contain a divisibility-1 vector of lambda_1
    CHECK(sy.lambda1_ray_div1 == true);
    CHECK(sy.e8_mod4_zero == true);

    // U(2)-block vector: same invariant tuple
    IVec u(16, Int(0));
    u[0] = 1;
    u[1] = -1;
    CHECK(orbit_invariants(pc(), u) == sy);

    // mixed vector (e+f, 2 alpha_1, 0, 0): ray-div-1 true but e8_mod4 false
    IVec vm(16, Int(0));
    vm[0] = 1;
    vm[1] = 1;
    vm[6] = 2;
    OrbitInvariants mixed = orbit_invariants(pc(), vm);
    CHECK(mixed.square == -4);
    CHECK(mixed.div == 2);
    CHECK(mixed.lambda1_ray_div1 == true);
    CHECK(mixed.e8_mod4_zero == false);

    CHECK_THROWS_AS(orbit_invariants(pc(), IVec(16, Int(0))), std::invalid_argument);
}

TEST_CASE("even divisibility sublattice equals the j_nik image") {
    IMat ev = even_divisibility_sublattice(pc());
    CHECK(ev.cols() == 15);
    CHECK(same_lattice(ev, pc().j_nik));

    // delta_Y = j_nik(delta_X component) lies in it
    CHECK(span_contains(ev, pc().delta_Y));

    // an E8 root vector lies in Sigma_Y^perp but has odd divisibility
    IVec root(16, Int(0));
    for (int i = 0; i < 8; ++i) root[size_t(6 + i)] = e8_positive_roots()[0][size_t(i)];
    CHECK(inner(pc().lambda_nik, root, pc().sigma_Y) == 0);
    CHECK(divisibility(pc().lambda_nik, root) == 1);
    CHECK_FALSE(span_contains(ev, root));
}

TEST_CASE("reconstruct on the identity and simple cases") {
    Reconstruction rec = reconstruct(pc(), Isometry::identity(pc().lambda_nik));
    CHECK(rec.eps == 1);
    CHECK(rec.word.empty());
    CHECK(rec.realized.is_identity());

    // an induced operator reconstructs with eps = +1
    auto pool = reflection_pool(pc().lambda_fix, 3141, 15);
    Isometry phi = random_word(pc().lambda_fix, pool, 3, 271828);
    Extension ext = equivariant_extension(pc(), phi);
    Isometry Fop = spinor_norm(ext.Phi) == 1 ? ext.Phi : ext.Phi.negate();
    Isometry fhat = induce_from_k3(pc(), Fop);
    Reconstruction r1 = reconstruct(pc(), fhat);
    CHECK(r1.eps == 1);
    CHECK(r1.realized == fhat);

    // composing with tau = -R_{Sigma_Y} (which fixes Sigma_Y but negates its
    // complement) flips the reconstruction sign
    Isometry tau = reflection(pc().lambda_nik, pc().sigma_Y).negate();
    Isometry flipped = fhat.compose(tau);
    CHECK(flipped.apply(pc().sigma_Y) == pc().sigma_Y);
    Reconstruction r2 = reconstruct(pc(), flipped);
    CHECK(r2.eps == -1);
    CHECK(r2.realized.matrix() == -flipped.matrix());

    // moving Sigma_Y is rejected
    IVec u(16, Int(0));
    u[14] = 1;
    Isometry rg1 = reflection(pc().lambda_nik, u);   // sends Sigma_Y elsewhere
    CHECK_THROWS_AS(reconstruct(pc(), rg1), std::invalid_argument);
}

TEST_CASE("sigma-fixing sampler is deterministic and correct") {
    for (std::uint64_t seed : {1ull, 77ull, 31337ull}) {
        Isometry a = sample_sigma_fixing_isometry(pc(), seed, 5);
        Isometry b = sample_sigma_fixing_isometry(pc(), seed, 5);
        CHECK(a == b);
        CHECK(a.apply(pc().sigma_Y) == pc().sigma_Y);
    }
    CHECK(sample_sigma_fixing_isometry(pc(), 9, 0).is_identity());
}

TEST_CASE("experimental orbit reducer contract") {
    // moving Sigma_Y by a short G-word and reducing back must succeed for at
    // least a direct inverse application; on success the word is a certificate
    auto pool = monodromy_generator_pool(pc(), 2718);
    Isometry g = pool[0].realized.compose(pool[2].realized);
    IVec v = g.apply(pc().sigma_Y);
    auto word = experimental_orbit_reduce(pc(), v, 5, 400);
    if (word) {
        Isometry prod = Isometry::identity(pc().lambda_nik);
        for (const auto& gen : *word) prod = prod.compose(gen.realized);
        CHECK(prod.apply(v) == pc().sigma_Y);
    }
}
