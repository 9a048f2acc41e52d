#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latmon/intlinalg.hpp"

#include <random>

using namespace latmon;

namespace {

IMat random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
    IMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Int(lo + int(rng() % std::uint64_t(hi - lo + 1)));
    return m;
}

} // namespace

TEST_CASE("smith normal form on small fixed matrices") {
    SUBCASE("diag(2,2)") {
        IMat m{{Int(2), Int(0)}, {Int(0), Int(2)}};
        auto s = smith_normal_form(m);
        CHECK(s.diag == std::vector<Int>{2, 2});
        CHECK(s.U * m * s.V == s.D);
    }
    SUBCASE("hyperbolic twisted by 2") {
        IMat m{{Int(0), Int(2)}, {Int(2), Int(0)}};
        auto s = smith_normal_form(m);
        CHECK(s.diag == std::vector<Int>{2, 2});
    }
    SUBCASE("rank deficiency") {
        IMat m{{Int(2), Int(4)}, {Int(1), Int(2)}};
        auto s = smith_normal_form(m);
        CHECK(s.rank == 1);
        CHECK(s.diag[0] == 1);
        CHECK(s.diag[1] == 0);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        int r = 1 + int(rng() % 6), c = 1 + int(rng() % 6);
        IMat m = random_matrix(rng, r, c, -9, 9);
        auto s = smith_normal_form(m);

        CHECK(s.U * m * s.V == s.D);
        CHECK(abs_int(determinant(s.U)) == 1);
        CHECK(abs_int(determinant(s.V)) == 1);
        CHECK(s.U * s.Uinv == IMat::identity(r));
        CHECK(s.V * s.Vinv == IMat::identity(c));

        // divisibility chain and zero tail
        for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
            if (s.diag[i + 1] != 0) {
                REQUIRE(s.diag[i] != 0);
                CHECK(s.diag[i + 1] % s.diag[i] == 0);
            }
        }
        // off-diagonal zero
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
    }
}

TEST_CASE("bareiss determinant matches SNF magnitude and cofactor recursion") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + int(rng() % 6);
        IMat m = random_matrix(rng, n, n, -7, 7);
        Int d = determinant(m);
        auto s = smith_normal_form(m);
        Int prod(1);
        for (const auto& x : s.diag) prod *= x;
        CHECK(abs_int(d) == prod);
    }
    CHECK(determinant(IMat{{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
}

TEST_CASE("integer kernel is a saturated complement") {
    IMat m{{Int(2), Int(4), Int(0)}, {Int(1), Int(2), Int(0)}};
    IMat k = kernel_int(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    // kernel vectors are primitive as a sublattice: SNF all ones
    auto s = smith_normal_form(k);
    for (int i = 0; i < s.rank; ++i) CHECK(s.diag[i] == 1);
}

TEST_CASE("rational solve and unimodular inverse") {
    IMat u{{Int(1), Int(2)}, {Int(3), Int(7)}};   // det 1
    IMat uinv = inverse_unimodular(u);
    CHECK(u * uinv == IMat::identity(2));

    QMat a = to_rat(IMat{{Int(1), Int(0)}, {Int(2), Int(1)}, {Int(0), Int(3)}});
    QMat b = a * to_rat(IMat{{Int(4)}, {Int(-5)}});
    QMat x = solve_full_col_rank(a, b);
    CHECK(x(0, 0) == 4);
    CHECK(x(1, 0) == -5);
}

TEST_CASE("span membership and lattice equality") {
    IMat a{{Int(2), Int(0)}, {Int(0), Int(3)}};
    CHECK(span_contains(a, IVec{Int(4), Int(3)}));
    CHECK_FALSE(span_contains(a, IVec{Int(1), Int(0)}));

    IMat b{{Int(2), Int(2)}, {Int(0), Int(3)}};
    CHECK(same_lattice(a, b));
    IMat c{{Int(1), Int(0)}, {Int(0), Int(3)}};
    CHECK_FALSE(same_lattice(a, c));
}

TEST_CASE("column span basis") {
    IMat m{{Int(2), Int(4)}, {Int(0), Int(6)}};
    IMat b = column_span_basis(m);
    CHECK(b.cols() == 2);
    CHECK(same_lattice(b, m));
}

TEST_CASE("content and primitive part") {
    CHECK(content(IVec{Int(6), Int(-9), Int(3)}) == 3);
    CHECK(primitive_part(IVec{Int(6), Int(-9), Int(3)}) == IVec{Int(2), Int(-3), Int(1)});
    CHECK(content(IVec{Int(0), Int(0)}) == 0);
}
