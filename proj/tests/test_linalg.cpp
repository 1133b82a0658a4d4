#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prepro/errors.hpp"
#include "prepro/matrix.hpp"
#include "prepro/rational.hpp"
#include "prepro/subspace.hpp"

using namespace prepro;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo,
                             int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("rational parsing round-trips exactly") {
        for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789123456789/2"}) {
            Rat q = rat_from_string(s);
            CHECK(rat_to_string(q) == s);
            CHECK(rat_from_string(rat_to_string(q)) == q);
        }
        CHECK(rat_from_string("7/14") == rat_from_string("1/2"));
        CHECK(rat_from_string("-4/2") == Rat(-2));
        CHECK_THROWS_AS(rat_from_string(""), ParseError);
        CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
        CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
        CHECK_THROWS_AS(rat_from_string("x"), ParseError);
    }

    TEST_CASE("rref of the identity is the identity") {
        auto [m, rank] = rref(RationalMatrix::identity(2));
        CHECK(rank == 2);
        CHECK(m == RationalMatrix::identity(2));
    }

    TEST_CASE("rref collapses dependent rows") {
        RationalMatrix m = RationalMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
        auto [red, rank] = rref(std::move(m));
        CHECK(rank == 1);
        CHECK(red.at(0, 0) == 1);
        CHECK(red.at(0, 1) == 2);
        CHECK(red.at(1, 0) == 0);
        CHECK(red.at(1, 1) == 0);
    }

    TEST_CASE("rref rank matches the fraction-free elimination oracle") {
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<int> dist(-2, 2);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::vector<std::int64_t>> ints(6, std::vector<std::int64_t>(6));
            RationalMatrix m(6, 6);
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) {
                    int v = dist(rng);
                    ints[i][j] = v;
                    m.at(i, j) = v;
                }
            auto [red, rank] = rref(std::move(m));
            CHECK(rank == testing::bareiss_rank(ints));
        }
    }

    TEST_CASE("rref is idempotent") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_matrix(rng, 5, 7, -3, 3);
            auto [r1, k1] = rref(m);
            auto [r2, k2] = rref(r1);
            CHECK(r1 == r2);
            CHECK(k1 == k2);
        }
    }

    TEST_CASE("kernel of the zero matrix is everything") {
        Subspace k = kernel(RationalMatrix(3, 3));
        CHECK(k.dim() == 3);
        CHECK(k == Subspace::full(3));
    }

    TEST_CASE("kernel of the identity is zero") {
        CHECK(kernel(RationalMatrix::identity(4)).dim() == 0);
    }

    TEST_CASE("kernel vectors are annihilated exactly") {
        RationalMatrix m = RationalMatrix::from_rows({{Rat(1), Rat(1), Rat(0)}});
        Subspace k = kernel(m);
        CHECK(k.dim() == 2);
        for (std::size_t i = 0; i < k.dim(); ++i)
            for (const Rat& x : matvec(m, k.basis().row(i))) CHECK(prepro::is_zero(x));
    }

    TEST_CASE("kernel dimension complements the rank") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_matrix(rng, 4, 6, -2, 2);
            auto rank = rref(m).second;
            CHECK(kernel(m).dim() + rank == 6);
        }
    }

    TEST_CASE("sum and intersection of coordinate lines") {
        Subspace a = Subspace::span_of(2, {{Rat(1), Rat(0)}});
        Subspace b = Subspace::span_of(2, {{Rat(0), Rat(1)}});
        CHECK(subspace_sum(a, b).dim() == 2);
        CHECK(subspace_intersect(a, b).dim() == 0);
    }

    TEST_CASE("sum and intersection of equal subspaces") {
        Subspace a = Subspace::span_of(3, {{Rat(1), Rat(2), Rat(3)}, {Rat(0), Rat(1), Rat(1)}});
        CHECK(subspace_sum(a, a) == a);
        CHECK(subspace_intersect(a, a) == a);
    }

    TEST_CASE("modular dimension law holds for random pairs in dimension 8") {
        std::mt19937 rng(20240812);
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<std::size_t> nrows(0, 5);
            Subspace a(8), b(8);
            {
                auto ra = random_matrix(rng, nrows(rng), 8, -2, 2);
                auto rb = random_matrix(rng, nrows(rng), 8, -2, 2);
                a = Subspace(8, std::move(ra));
                b = Subspace(8, std::move(rb));
            }
            Subspace s = subspace_sum(a, b);
            Subspace i = subspace_intersect(a, b);
            CHECK(s.dim() + i.dim() == a.dim() + b.dim());
            CHECK(s.contains(a));
            CHECK(s.contains(b));
            CHECK(a.contains(i));
            CHECK(b.contains(i));
        }
    }

    TEST_CASE("contains is exact membership") {
        Subspace a = Subspace::span_of(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
        CHECK(a.contains({Rat(1), Rat(1), Rat(2)}));
        CHECK(!a.contains({Rat(1), Rat(1), Rat(1)}));
        CHECK(a.contains(std::vector<Rat>(3)));
    }

    TEST_CASE("ambient mismatch is rejected") {
        Subspace a = Subspace::full(2);
        Subspace b = Subspace::full(3);
        CHECK_THROWS_AS(subspace_sum(a, b), InvalidArgument);
        CHECK_THROWS_AS(subspace_intersect(a, b), InvalidArgument);
    }

    TEST_CASE("express_in_rows recovers combinations") {
        RationalMatrix rows = RationalMatrix::from_rows(
            {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(2), Rat(0)}, {Rat(1), Rat(2), Rat(1)}});
        auto c = express_in_rows(rows, {Rat(2), Rat(2), Rat(2)});
        REQUIRE(c.has_value());
        std::vector<Rat> recovered(3);
        for (std::size_t i = 0; i < rows.rows(); ++i)
            for (std::size_t j = 0; j < 3; ++j) recovered[j] += (*c)[i] * rows.at(i, j);
        CHECK(recovered == std::vector<Rat>{Rat(2), Rat(2), Rat(2)});
        CHECK(!express_in_rows(rows, {Rat(0), Rat(0), Rat(1)}).has_value());
    }
}
