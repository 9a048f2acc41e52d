#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latmon/nikulin.hpp"

#include <random>

using namespace latmon;

namespace {

const NikulinConstants& pc() { return NikulinConstants::get(); }

IMat cols(const std::vector<IVec>& vs) {
    IMat m(int(vs[0].size()), int(vs.size()));
    for (size_t j = 0; j < vs.size(); ++j) m.set_col(int(j), vs[j]);
    return m;
}

} // namespace

TEST_CASE("inner products on the standard models") {
    Lattice U = Lattice::hyperbolic();
    CHECK(inner(U, {Int(1), Int(0)}, {Int(0), Int(1)}) == 1);
    CHECK(inner(U, {Int(1), Int(0)}, {Int(1), Int(0)}) == 0);

    Lattice m2 = Lattice::rank_one(-2);
    CHECK(inner(m2, {Int(1)}, {Int(1)}) == -2);

    Lattice e8m1 = twist(Lattice::e8(), -1);
    for (const auto& r : e8_roots()) CHECK(inner(e8m1, r, r) == -2);

    CHECK_THROWS_AS(inner(U, {Int(1)}, {Int(0), Int(1)}), std::invalid_argument);
}

TEST_CASE("twist scales the Gram matrix") {
    Lattice U = Lattice::hyperbolic();
    Lattice U2 = twist(U, 2);
    CHECK(U2.gram() == IMat{{Int(0), Int(2)}, {Int(2), Int(0)}});
    CHECK(twist(Lattice::e8(), -2).gram() == Lattice::e8().gram() * Int(-2));
    CHECK(twist(U2, 1).gram() == U2.gram());
    CHECK_THROWS_AS(twist(U, 0), std::invalid_argument);

    // pairing identity: inner_twist = n * inner
    std::mt19937_64 rng(5);
    Lattice L = twist(Lattice::e8(), -1);
    for (int t = 0; t < 20; ++t) {
        IVec v(8), w(8);
        for (int i = 0; i < 8; ++i) {
            v[size_t(i)] = Int(int(rng() % 7)) - 3;
            w[size_t(i)] = Int(int(rng() % 7)) - 3;
        }
        CHECK(inner(twist(L, 3), v, w) == 3 * inner(L, v, w));
    }
}

TEST_CASE("direct sums and block bookkeeping") {
    Lattice U = Lattice::hyperbolic();
    Lattice UU = direct_sum({U, U});
    CHECK(UU.rank() == 4);
    CHECK(UU.det() == 1);

    CHECK(pc().lambda_nik.rank() == 16);
    CHECK(pc().lambda_nik.det() == -256);

    // components addressable by block
    const auto& blocks = pc().lambda_nik.blocks();
    REQUIRE(blocks.size() == 6);
    CHECK(blocks[3].offset == 6);
    CHECK(blocks[3].rank == 8);
    IVec v(16, Int(0));
    v[6] = 5;
    CHECK(pc().lambda_nik.block_component(v, blocks[3].name)[0] == 5);

    CHECK_THROWS_AS(direct_sum({}), std::invalid_argument);
}

TEST_CASE("determinants of the named lattices") {
    CHECK(Lattice::hyperbolic().det() == -1);
    CHECK(Lattice::e8().det() == 1);
    // U^3 + E8(-1)^2 + <-2> has signature (3,20): positive determinant
    CHECK(pc().lambda_k3.det() == 2);
    CHECK(pc().lambda_fix.det() == 512);
    CHECK(pc().lambda_1.det() == -256);
}

TEST_CASE("divisibility") {
    Lattice U = Lattice::hyperbolic();
    CHECK(divisibility(U, {Int(1), Int(0)}) == 1);
    CHECK(divisibility(pc().lambda_nik, pc().sigma_Y) == 2);

    Lattice e8m2 = twist(Lattice::e8(), -2);
    for (const auto& r : e8_positive_roots()) CHECK(divisibility(e8m2, r) == 2);

    CHECK_THROWS_AS(divisibility(U, IVec{Int(0), Int(0)}), std::invalid_argument);

    // divisibility(n v) = n divisibility(v) for primitive v
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        IVec v(16);
        for (int i = 0; i < 16; ++i) v[size_t(i)] = Int(int(rng() % 5)) - 2;
        if (vec_is_zero(v)) continue;
        v = primitive_part(v);
        Int d = divisibility(pc().lambda_nik, v);
        Int n = Int(1 + int(rng() % 4));
        CHECK(divisibility(pc().lambda_nik, vec_scale(n, v)) == n * d);
    }
}

TEST_CASE("lattice invariants of the constructors") {
    CHECK(Lattice::hyperbolic().is_even());
    CHECK(pc().lambda_nik.is_even());
    CHECK(pc().lambda_k3.is_even());
    CHECK(pc().lambda_fix.is_even());
    CHECK_FALSE(pc().lambda_1.is_even());

    CHECK_THROWS_AS(Lattice(IMat{{Int(0), Int(1)}, {Int(2), Int(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(IMat{{Int(1), Int(1)}, {Int(1), Int(1)}}), std::invalid_argument);
}

TEST_CASE("orthogonal complements") {
    Lattice U = Lattice::hyperbolic();
    // isotropic vector: complement contains the vector itself
    IMat span(2, 1);
    span.set_col(0, IVec{Int(1), Int(0)});
    IMat comp = orthogonal_complement(U, span);
    CHECK(comp.cols() == 1);
    CHECK(same_lattice(comp, span));

    // complement of the j_fix image in lambda_k3 is E8(-2)
    IMat perp = orthogonal_complement(pc().lambda_k3, pc().j_fix);
    CHECK(perp.cols() == 8);
    CHECK(same_lattice(perp, pc().k3_perp));
    IMat gram = sublattice_gram(pc().lambda_k3, pc().k3_perp);
    CHECK(gram == twist(Lattice::e8(), -2).gram());

    // complement of Sigma_Y: rank 15, determinant +256
    const IMat& sp = pc().sigma_perp_basis;
    CHECK(sp.cols() == 15);
    CHECK(determinant(sublattice_gram(pc().lambda_nik, sp)) == 256);
}

TEST_CASE("saturation and primitivity") {
    Lattice U = Lattice::hyperbolic();
    IMat doubled(2, 1);
    doubled.set_col(0, IVec{Int(2), Int(0)});
    CHECK_FALSE(is_primitive(U, doubled));
    IMat sat = saturate(U, doubled);
    CHECK(span_contains(sat, IVec{Int(1), Int(0)}));

    IMat sy(16, 1);
    sy.set_col(0, pc().sigma_Y);
    CHECK(is_primitive(pc().lambda_nik, sy));

    // The j_nik image is NOT primitive: its saturation is Sigma_Y^perp (the
    // SNF of the coordinate matrix has eight invariant factors equal to 2).
    CHECK_FALSE(is_primitive(pc().lambda_nik, pc().j_nik));
    IMat sat_jnik = saturate(pc().lambda_nik, pc().j_nik);
    CHECK(same_lattice(sat_jnik, pc().sigma_perp_basis));
    // ... while the j_fix image is primitive in lambda_k3.
    CHECK(is_primitive(pc().lambda_k3, pc().j_fix));

    // saturate is idempotent, and its output is primitive
    std::mt19937_64 rng(23);
    for (int t = 0; t < 15; ++t) {
        std::vector<IVec> vs;
        for (int k = 0; k < 3; ++k) {
            IVec v(16);
            for (int i = 0; i < 16; ++i) v[size_t(i)] = Int(int(rng() % 5)) - 2;
            vs.push_back(v);
        }
        IMat S = cols(vs);
        if (smith_normal_form(S).rank != 3) continue;
        IMat s1 = saturate(pc().lambda_nik, S);
        CHECK(is_primitive(pc().lambda_nik, s1));
        IMat s2 = saturate(pc().lambda_nik, s1);
        CHECK(same_lattice(s1, s2));
    }
}

TEST_CASE("E8 root system") {
    CHECK(e8_roots().size() == 240);
    CHECK(e8_positive_roots().size() == 120);
    const Lattice E8 = Lattice::e8();
    for (const auto& r : e8_positive_roots()) {
        CHECK(inner(E8, r, r) == 2);
        for (const auto& c : r) CHECK(c >= 0);
    }
    // roots span E8 with index 1
    IMat m(8, 240);
    for (size_t j = 0; j < e8_roots().size(); ++j) m.set_col(int(j), e8_roots()[j]);
    auto s = smith_normal_form(m);
    CHECK(s.rank == 8);
    for (int i = 0; i < 8; ++i) CHECK(s.diag[i] == 1);
    // highest root in the Bourbaki ordering
    IVec highest{Int(2), Int(3), Int(4), Int(6), Int(5), Int(4), Int(3), Int(2)};
    CHECK(inner(E8, highest, highest) == 2);
}
