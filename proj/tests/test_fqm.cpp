#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latmon/fqm.hpp"
#include "latmon/nikulin.hpp"

#include <random>

using namespace latmon;

namespace {

// random unimodular matrix as a product of elementary transvections
IMat random_unimodular(std::mt19937_64& rng, int n, int ops) {
    IMat m = IMat::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = int(rng() % std::uint64_t(n));
        int j = int(rng() % std::uint64_t(n));
        if (i == j) continue;
        Int c = Int(int(rng() % 3)) - 1;
        for (int r = 0; r < n; ++r) m(r, i) += c * m(r, j);
    }
    return m;
}

} // namespace

TEST_CASE("discriminant module of <-2>") {
    FiniteQuadraticModule A(Lattice::rank_one(-2));
    REQUIRE(A.invariant_factors() == std::vector<Int>{2});
    auto g = A.zero();
    g[0] = 1;
    // q(g) = -1/2 mod 2, normalized to 3/2
    CHECK(A.q(g) == Rat(3) / 2);
    CHECK(A.b(g, g) == Rat(1) / 2);
}

TEST_CASE("discriminant module orders match determinants") {
    const auto& pc = NikulinConstants::get();
    FiniteQuadraticModule A_nik(pc.lambda_nik);
    CHECK(A_nik.invariant_factors() == std::vector<Int>(8, Int(2)));
    CHECK(A_nik.order() == 256);

    FiniteQuadraticModule A_k3(pc.lambda_k3);
    CHECK(A_k3.invariant_factors() == std::vector<Int>{2});

    FiniteQuadraticModule A_fix(pc.lambda_fix);
    CHECK(A_fix.order() == 512);
    CHECK(A_fix.is_two_elementary());

    FiniteQuadraticModule A_e8m2(twist(Lattice::e8(), -2));
    CHECK(A_e8m2.invariant_factors() == std::vector<Int>(8, Int(2)));
}

TEST_CASE("odd lattices are rejected") {
    CHECK_THROWS_AS(FiniteQuadraticModule(NikulinConstants::get().lambda_1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteQuadraticModule(Lattice::rank_one(-1)), std::invalid_argument);
}

TEST_CASE("quadratic form identities") {
    const auto& pc = NikulinConstants::get();
    FiniteQuadraticModule A(pc.lambda_nik);
    std::mt19937_64 rng(99);
    auto elems = A.elements();
    REQUIRE(elems.size() == 256);
    for (int t = 0; t < 80; ++t) {
        const auto& x = elems[rng() % elems.size()];
        const auto& y = elems[rng() % elems.size()];
        // q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2
        Rat lhs = mod2z(A.q(A.add(x, y)) - A.q(x) - A.q(y));
        Rat rhs = mod2z(Rat(2) * A.b(x, y));
        CHECK(lhs == rhs);
        // q(n x) = n^2 q(x) mod 2
        Int n = Int(int(rng() % 5));
        CHECK(A.q(A.scale(n, x)) == mod2z(Rat(n * n) * A.q(x)));
    }
}

TEST_CASE("U(2) discriminant form is the hyperbolic F2 plane") {
    FiniteQuadraticModule A(twist(Lattice::hyperbolic(), 2));
    REQUIRE(A.invariant_factors() == std::vector<Int>(2, Int(2)));
    auto e = A.zero(), f = A.zero();
    e[0] = 1;
    f[1] = 1;
    CHECK(A.q(e) == 0);
    CHECK(A.q(f) == 0);
    CHECK(A.q(A.add(e, f)) == 1);
    CHECK(A.b(e, f) == Rat(1) / 2);
}

TEST_CASE("change of basis gives the canonical isomorphism of modules") {
    // under G -> P^T G P the class map transforms by dual coordinates a -> P^T a
    std::mt19937_64 rng(4242);
    const Lattice base = direct_sum({twist(Lattice::hyperbolic(), 2), Lattice::rank_one(-2)});
    for (int t = 0; t < 10; ++t) {
        IMat P = random_unimodular(rng, 3, 12);
        Lattice moved(P.transpose() * base.gram() * P, "moved");
        FiniteQuadraticModule A0(base), A1(moved);
        CHECK(A0.invariant_factors() == A1.invariant_factors());
        for (int k = 0; k < 20; ++k) {
            IVec a(3);
            for (int i = 0; i < 3; ++i) a[size_t(i)] = Int(int(rng() % 9)) - 4;
            auto c0 = A0.class_of_dual(a);
            auto c1 = A1.class_of_dual(P.transpose() * a);
            CHECK(A0.q(c0) == A1.q(c1));
        }
    }
}

TEST_CASE("discriminant isometry validation") {
    FiniteQuadraticModule A(twist(Lattice::hyperbolic(), 2));
    // swapping the two generators preserves the hyperbolic form
    IMat swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
    DiscriminantIsometry s(A, swap);
    auto e = A.zero();
    e[0] = 1;
    CHECK(s.apply(e) == FiniteQuadraticModule::Elem{Int(0), Int(1)});
    CHECK(s.compose(s).is_identity());

    // the map e -> e, f -> e+f does not preserve q
    IMat bad{{Int(1), Int(1)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(DiscriminantIsometry(A, bad), std::invalid_argument);
}

TEST_CASE("representative dual coordinates round trip") {
    const auto& pc = NikulinConstants::get();
    FiniteQuadraticModule A(pc.lambda_nik);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        IVec a(16);
        for (int i = 0; i < 16; ++i) a[size_t(i)] = Int(int(rng() % 11)) - 5;
        auto c = A.class_of_dual(a);
        CHECK(A.class_of_dual(A.representative_dual_coords(c)) == c);
    }
}
