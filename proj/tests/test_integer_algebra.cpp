#include "gaut/errors.hpp"
#include "gaut/integer_matrix.hpp"
#include "gaut/rational_linalg.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gaut;

TEST_CASE("smith form reproduces the input under its transforms")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = entry(rng);
        SmithForm s = smithNormalForm(m);
        CHECK(s.left * m * s.right == s.diagonal);
        CHECK(abs(determinant(s.left)) == 1);
        CHECK(abs(determinant(s.right)) == 1);
        auto f = s.invariantFactors();
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            CHECK(f[i + 1] % f[i] == 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j)
                    CHECK(s.diagonal(i, j) == 0);
    }
}

TEST_CASE("determinant agrees with cofactor expansion")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        IntMatrix m(n, n);
        std::vector<std::vector<mpz_class>> dense(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dense[i][j] = m(i, j) = entry(rng);
        CHECK(determinant(m) == testing_support::cofactorDeterminant(dense));
    }
}

TEST_CASE("unimodular inverse")
{
    IntMatrix m = IntMatrix::fromRows({{2, 1}, {1, 1}}, 2);
    auto inv = unimodularInverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == IntMatrix::identity(2));
    CHECK_FALSE(unimodularInverse(IntMatrix::fromRows({{2, 0}, {0, 1}}, 2)));
}

TEST_CASE("integer solving")
{
    IntMatrix m = IntMatrix::fromRows({{2, 0}, {0, 3}}, 2);
    auto x = solveInteger(m, {4, 9});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(solveInteger(m, {1, 0}));
}

TEST_CASE("reduceMod lands in [0, m)")
{
    CHECK(reduceMod(-1, 2) == 1);
    CHECK(reduceMod(7, 3) == 1);
    CHECK(reduceMod(-9, 3) == 0);
}

TEST_CASE("toInt64 guards overflow")
{
    mpz_class big = 1;
    big <<= 70;
    CHECK_THROWS_AS(toInt64(big), ResourceGuardError);
    CHECK(toInt64(mpz_class(-5)) == -5);
}

TEST_CASE("kernel basis annihilates rows and completes the rank")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = rng() % 4, cols = 1 + rng() % 5;
        RatRows m(rows, RatVec(cols));
        for (auto& row : m)
            for (auto& x : row)
                x = entry(rng);
        RatRows ker = kernelBasis(m, cols);
        CHECK(rank(m, cols) + ker.size() == cols);
        for (const auto& k : ker)
            for (const auto& row : m)
                CHECK(dot(k, row) == 0);
    }
}

TEST_CASE("rref drops zero rows and normalizes pivots")
{
    EchelonForm e = reducedRowEchelon({{2, 4}, {1, 2}, {0, 0}}, 2);
    REQUIRE(e.rows.size() == 1);
    CHECK(e.rows[0][0] == 1);
    CHECK(e.rows[0][1] == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0});
}
