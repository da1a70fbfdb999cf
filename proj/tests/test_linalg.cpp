#include "pellcirc/circulant.hpp"
#include "pellcirc/errors.hpp"
#include "pellcirc/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace pellcirc;

namespace {

Rational frac(long num, long den) { return Rational(BigInteger(num), BigInteger(den)); }

DenseMatrix random_rational(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = frac(num(rng), den(rng));
    return m;
}

DenseMatrix random_integer(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> v(-20, 20);
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v(rng);
    return m;
}

// Sign of a permutation from its inversion count.
int permutation_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    return inversions % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("mat_mul") {
    const DenseMatrix x{{1, 2, 3}, {frac(1, 2), 0, -1}, {4, 5, 6}};
    CHECK(mat_mul(DenseMatrix::identity(3), x) == x);
    CHECK(mat_mul(x, DenseMatrix::identity(3)) == x);
    CHECK(mat_mul(DenseMatrix{{2}}, DenseMatrix{{3}}) == DenseMatrix{{6}});
    CHECK(mat_mul(DenseMatrix{{1, 2}}, DenseMatrix{{3}, {4}}) == DenseMatrix{{11}});
    CHECK_THROWS_AS(mat_mul(DenseMatrix(2, 3), DenseMatrix(2, 3)), ShapeError);
}

TEST_CASE("matrices reject empty shapes") {
    CHECK_THROWS_AS(DenseMatrix(0, 3), ShapeError);
    CHECK_THROWS_AS((DenseMatrix{{1, 2}, {3}}), ShapeError);
}

TEST_CASE("oracle_det examples") {
    CHECK(oracle_det(DenseMatrix::identity(5)) == 1);
    CHECK(oracle_det(circ_expand(Circulant::from_integers({1, 2, 5}))) == 104);
    CHECK(oracle_det(circ_expand(Circulant::from_integers({2, 6, 14}))) == 2464);
    CHECK(oracle_det(DenseMatrix{{frac(1, 2), frac(1, 3)}, {frac(1, 4), frac(1, 5)}}) == frac(1, 60));
    CHECK(oracle_det(DenseMatrix{{1, 1, 1}, {1, 1, 1}, {2, 3, 4}}) == 0);
    CHECK_THROWS_AS(oracle_det(DenseMatrix(2, 3)), ShapeError);
    CHECK_THROWS_AS(oracle_det_rational(DenseMatrix(3, 2)), ShapeError);
}

TEST_CASE("determinant sign follows row swaps on permutation matrices") {
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        DenseMatrix m(5, 5);
        for (std::size_t i = 0; i < 5; ++i) m(i, perm[i]) = 1;
        const Rational want = permutation_sign(perm);
        REQUIRE(oracle_det(m) == want);
        REQUIRE(oracle_det_rational(m) == want);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("oracle_inverse examples") {
    CHECK(oracle_inverse(DenseMatrix::identity(4)) == DenseMatrix::identity(4));

    const DenseMatrix expected =
        circ_expand(Circulant({frac(-9, 104), frac(23, 104), frac(-1, 104)}));
    CHECK(oracle_inverse(circ_expand(Circulant::from_integers({1, 2, 5}))) == expected);

    const DenseMatrix ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    try {
        oracle_inverse(ones);
        FAIL("expected a singularity error");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot() == 1);
    }
    CHECK_THROWS_AS(oracle_inverse(DenseMatrix(2, 1)), ShapeError);
}

TEST_CASE("oracle_inverse needs a row swap when the leading entry is zero") {
    const DenseMatrix m{{0, 1}, {1, 0}};
    CHECK(oracle_inverse(m) == m);
}

TEST_CASE("direct_sum") {
    CHECK(direct_sum(DenseMatrix{{1}}, DenseMatrix{{1}}) == DenseMatrix::identity(2));
    const DenseMatrix s = direct_sum(DenseMatrix{{1, 2}, {3, 4}}, DenseMatrix::identity(3));
    CHECK(s.rows() == 5);
    CHECK(s.cols() == 5);
    CHECK(s(1, 0) == 3);
    CHECK(s(4, 4) == 1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 2; j < 5; ++j) {
            CHECK(s(i, j).is_zero());
            CHECK(s(j, i).is_zero());
        }
    const DenseMatrix h = direct_sum(DenseMatrix{{1, 0}, {0, frac(-104, 11)}}, DenseMatrix{{-11}});
    CHECK(h.rows() == 3);
    CHECK(h(1, 1) == frac(-104, 11));
}

TEST_CASE("determinant is multiplicative on random rational matrices") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const DenseMatrix a = random_rational(rng, n, n), b = random_rational(rng, n, n);
            REQUIRE(oracle_det(mat_mul(a, b)) == oracle_det(a) * oracle_det(b));
            REQUIRE(oracle_det(direct_sum(a, b)) == oracle_det(a) * oracle_det(b));
        }
    }
}

TEST_CASE("inverse is two-sided whenever it exists") {
    std::mt19937_64 rng(12);
    int inverted = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const DenseMatrix a = random_rational(rng, n, n);
            try {
                const DenseMatrix inv = oracle_inverse(a);
                REQUIRE(mat_mul(inv, a) == DenseMatrix::identity(n));
                REQUIRE(mat_mul(a, inv) == DenseMatrix::identity(n));
                ++inverted;
            } catch (const SingularMatrixError&) {
                REQUIRE(oracle_det(a) == 0);
            }
        }
    }
    CHECK(inverted > 20);
}

TEST_CASE("Bareiss and rational elimination agree on random integer matrices") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
        const DenseMatrix m = random_integer(rng, size(rng));
        REQUIRE(oracle_det(m) == oracle_det_rational(m));
    }
}
