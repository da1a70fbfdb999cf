#include "pellcirc/closed_forms.hpp"
#include "pellcirc/errors.hpp"
#include "pellcirc/linalg.hpp"

#include <doctest.h>

#include <cmath>

using namespace pellcirc;

namespace {

Rational frac(long num, long den) { return Rational(BigInteger(num), BigInteger(den)); }

Rational oracle_det_of(SequenceKind kind, std::size_t n) {
    return oracle_det(circ_expand(sequence_circulant(kind, n)));
}

Circulant oracle_inverse_of(SequenceKind kind, std::size_t n) {
    return circ_from_matrix(oracle_inverse(circ_expand(sequence_circulant(kind, n))));
}

std::vector<Rational> row_of(const DenseMatrix& m, std::size_t i) {
    auto r = m.row(i);
    return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("determinant closed forms reproduce the published values") {
    CHECK(det_pell_closed(3) == 104);
    CHECK(det_pell_closed(4) == -18560);
    CHECK(det_pell_lucas_closed(3) == 2464);
    CHECK(det_pell_lucas_closed(4) == -1247232);
}

TEST_CASE("determinant closed forms match Bareiss") {
    CHECK(Rational(det_pell_closed(5)) == oracle_det_of(SequenceKind::Pell, 5));
    CHECK(det_pell_closed(5) == 19323689);
    CHECK(Rational(det_pell_lucas_closed(6)) == oracle_det_of(SequenceKind::PellLucas, 6));
    CHECK(det_pell_lucas_closed(6).get_str() == "-59055951790080");
    for (std::size_t n = 3; n <= 25; ++n) {
        REQUIRE(Rational(det_pell_closed(n)) == oracle_det_of(SequenceKind::Pell, n));
        REQUIRE(Rational(det_pell_lucas_closed(n)) == oracle_det_of(SequenceKind::PellLucas, n));
    }
}

TEST_CASE("closed forms reject n < 3") {
    CHECK_THROWS_AS(det_pell_closed(2), DomainError);
    CHECK_THROWS_AS(det_pell_lucas_closed(0), DomainError);
    CHECK_THROWS_AS(pell_scalars(2), DomainError);
    CHECK_THROWS_AS(pell_lucas_scalars(1), DomainError);
    CHECK_THROWS_AS(inv_pell_closed(2), DomainError);
    CHECK_THROWS_AS(inv_pell_lucas_closed(2), DomainError);
}

TEST_CASE("Pell scalars") {
    const auto s3 = pell_scalars(3);
    CHECK(s3.g == frac(-104, 11));
    CHECK(s3.ratio == frac(-5, 11));
    CHECK(s3.g * Rational(pell(1) - pell(4)) == 104);

    const auto s4 = pell_scalars(4);
    CHECK(s4.g == Rational(det_pell_closed(4)) / Rational(pell(1) - pell(5)).pow(2));
    CHECK(s4.g_prime == frac(501, 49));
}

TEST_CASE("Pell-Lucas scalars") {
    const auto s3 = pell_lucas_scalars(3);
    CHECK(s3.u == frac(-77, 2));
    CHECK(s3.ratio == frac(-3, 8));
    CHECK(Rational(2) * Rational(2 - pell_lucas(4)) * s3.u == 2464);

    const auto s4 = pell_lucas_scalars(4);
    CHECK(s4.u == Rational(det_pell_lucas_closed(4)) / (Rational(2) * Rational(2 - pell_lucas(5)).pow(2)));
    CHECK(s4.u_prime == frac(734, 25));
}

TEST_CASE("scalars tie back to the determinants for n <= 25") {
    for (std::size_t n = 3; n <= 25; ++n) {
        const Rational dp(pell(1) - pell(n + 1));
        REQUIRE(dp.pow(n - 2) * pell_scalars(n).g == Rational(det_pell_closed(n)));
        const Rational dq(pell_lucas(1) - pell_lucas(n + 1));
        REQUIRE(Rational(2) * dq.pow(n - 2) * pell_lucas_scalars(n).u == Rational(det_pell_lucas_closed(n)));
    }
}

TEST_CASE("inverse closed forms at n = 3") {
    CHECK(inv_pell_closed(3) == Circulant({frac(-9, 104), frac(23, 104), frac(-1, 104)}));
    CHECK(inv_pell_closed(3).first_row()[2] == frac(-1, 104));
    CHECK(inv_pell_lucas_closed(3) == Circulant({frac(-5, 154), frac(23, 308), frac(1, 308)}));
    CHECK(inv_pell_lucas_closed(3).first_row()[2] == frac(1, 308));
}

TEST_CASE("inverse closed forms match Gauss-Jordan") {
    CHECK(inv_pell_closed(4) == oracle_inverse_of(SequenceKind::Pell, 4));
    CHECK(inv_pell_lucas_closed(5) == oracle_inverse_of(SequenceKind::PellLucas, 5));
    for (std::size_t n = 3; n <= 15; ++n) {
        for (auto kind : {SequenceKind::Pell, SequenceKind::PellLucas}) {
            const DenseMatrix m = circ_expand(sequence_circulant(kind, n));
            REQUIRE(mat_mul(circ_expand(inv_closed(kind, n)), m) == DenseMatrix::identity(n));
        }
    }
}

TEST_CASE("inverse tail is geometric") {
    for (std::size_t n = 4; n <= 15; ++n) {
        const auto p = inv_pell_closed(n).first_row();
        const auto q = inv_pell_lucas_closed(n).first_row();
        for (std::size_t i = 3; i < n; ++i) {
            REQUIRE(p[i] == p[i - 1] * pell_scalars(n).ratio);
            REQUIRE(q[i] == q[i - 1] * pell_lucas_scalars(n).ratio);
        }
    }
}

TEST_CASE("partial sums and their recurrences") {
    CHECK(partial_sum_S(3, 1) == frac(-1, 11));

    const Rational d5(pell(1) - pell(6));
    CHECK(partial_sum_S(5, 2) - Rational(2) * partial_sum_S(5, 1) == Rational(pell(5)) / d5.pow(2));

    const Rational d6(pell(1) - pell(7));
    CHECK(partial_sum_S(6, 4) - Rational(2) * partial_sum_S(6, 3) - partial_sum_S(6, 2) ==
          Rational(pell(6)).pow(3) / d6.pow(4));

    for (std::size_t n = 5; n <= 15; ++n) {
        const Rational pn(pell(n)), d(pell(1) - pell(n + 1));
        REQUIRE(partial_sum_S(n, 2) - Rational(2) * partial_sum_S(n, 1) == pn / d.pow(2));
        for (std::size_t r = 1; r + 4 <= n; ++r) {
            REQUIRE(partial_sum_S(n, r + 2) - Rational(2) * partial_sum_S(n, r + 1) - partial_sum_S(n, r) ==
                    pn.pow(r + 1) / d.pow(r + 2));
        }
    }

    CHECK_THROWS_AS(partial_sum_S(5, 0), DomainError);
    CHECK_THROWS_AS(partial_sum_S(5, 4), DomainError);
}

TEST_CASE("symbol functions equal the DFT eigenvalues") {
    const ComplexValue u31 = symbol_u(3, 1);
    CHECK(u31.real() == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(u31.imag() == doctest::Approx(-1.5 * std::sqrt(3.0)).epsilon(1e-12));

    const auto lambda = circ_eigenvalues(sequence_circulant(SequenceKind::PellLucas, 3));
    CHECK(std::abs(symbol_v(3, 1) - lambda[1]) / std::abs(lambda[1]) < 1e-12);

    // ω^3 = -1 at n = 6.
    const ComplexValue v63 = symbol_v(6, 3);
    const double want = BigInteger(pell_lucas(6) - pell_lucas(7)).get_d() / 2.0;
    CHECK(want == -140.0);
    CHECK(v63.real() == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(v63.imag()) < 1e-9);

    double smallest = INFINITY;
    for (std::size_t k = 1; k <= 4; ++k) smallest = std::min(smallest, std::abs(symbol_u(5, k)));
    MESSAGE("min |symbol_u(5, k)| = " << smallest);
    CHECK(smallest > 0.0);

    for (std::size_t n = 3; n <= 12; ++n) {
        const auto lp = circ_eigenvalues(sequence_circulant(SequenceKind::Pell, n));
        const auto lq = circ_eigenvalues(sequence_circulant(SequenceKind::PellLucas, n));
        for (std::size_t k = 1; k < n; ++k) {
            REQUIRE(std::abs(symbol_u(n, k) - lp[k]) / std::abs(lp[k]) < 1e-9);
            REQUIRE(std::abs(symbol_v(n, k) - lq[k]) / std::abs(lq[k]) < 1e-9);
            if (n >= 5) {
                REQUIRE(std::abs(symbol_u(n, k)) > 1e-6);
                REQUIRE(std::abs(symbol_v(n, k)) > 1e-6);
            }
        }
    }

    CHECK_THROWS_AS(symbol_u(5, 0), DomainError);
    CHECK_THROWS_AS(symbol_v(5, 5), DomainError);
}

TEST_CASE("transform matrices M and K") {
    using Row = std::vector<Rational>;
    CHECK(row_of(build_M(4), 1) == Row{-2, 0, 0, 1});
    CHECK(row_of(build_M(5), 2) == Row{-1, 0, 0, 1, -2});
    CHECK(row_of(build_M(5), 4) == Row{0, 1, -2, -1, 0});
    CHECK(row_of(build_K(4), 1) == Row{-3, 0, 0, 1});
    CHECK_THROWS_AS(build_M(3), DomainError);
    CHECK_THROWS_AS(build_K(3), DomainError);
}

TEST_CASE("transform matrices N and L") {
    using Row = std::vector<Rational>;
    CHECK(row_of(build_N(4), 3) == Row{0, 1, 0, 0});
    CHECK(build_N(5)(1, 1) == frac(29, -69).pow(3));
    CHECK(build_N(5)(1, 4) == 1);
    CHECK(build_L(4)(2, 1) == frac(-2, 5));
    CHECK_THROWS_AS(build_N(3), DomainError);
    CHECK_THROWS_AS(build_L(2), DomainError);
}

TEST_CASE("transform determinants follow n mod 4") {
    for (std::size_t n = 4; n <= 12; ++n) {
        const Rational want = (n % 4 == 1 || n % 4 == 2) ? 1 : -1;
        REQUIRE(oracle_det(build_M(n)) == want);
        REQUIRE(oracle_det(build_N(n)) == want);
        REQUIRE(oracle_det(build_K(n)) == want);
        REQUIRE(oracle_det(build_L(n)) == want);
    }
}

TEST_CASE("bidiagonal closed-form inverses") {
    CHECK(bidiagonal_inverse_pell(5)(1, 0) == frac(29, 4761));
    CHECK(bidiagonal_inverse_pell(5)(0, 0) == frac(-1, 69));
    CHECK(bidiagonal_inverse_pell(6)(0, 2).is_zero());
    CHECK(bidiagonal_inverse_pell_lucas(5)(1, 0) == frac(80, 38416));
    CHECK(bidiagonal_inverse_pell_lucas(5)(2, 2) == frac(-1, 196));
    CHECK(bidiagonal_inverse_pell_lucas(7)(1, 3).is_zero());
    CHECK(bidiagonal_pell(3).rows() == 1);
    CHECK_THROWS_AS(bidiagonal_pell(2), DomainError);

    for (std::size_t n = 3; n <= 20; ++n) {
        REQUIRE(bidiagonal_inverse_pell(n) == oracle_inverse(bidiagonal_pell(n)));
        REQUIRE(bidiagonal_inverse_pell_lucas(n) == oracle_inverse(bidiagonal_pell_lucas(n)));
        REQUIRE(mat_mul(bidiagonal_pell(n), bidiagonal_inverse_pell(n)) == DenseMatrix::identity(n - 2));
    }
}

TEST_CASE("Hankel block inverses of M and K") {
    const DenseMatrix m4 = hankel_block_inverse_M(4);
    using Row = std::vector<Rational>;
    CHECK(Row{m4(1, 0), m4(2, 0), m4(3, 0)} == Row{12, 5, 2});
    CHECK(Row{m4(1, 1), m4(1, 2), m4(1, 3)} == Row{5, 2, 1});
    CHECK(Row{m4(1, 3), m4(2, 3), m4(3, 3)} == Row{1, 0, 0});
    CHECK(mat_mul(m4, build_M(4)) == DenseMatrix::identity(4));

    const DenseMatrix k4 = hankel_block_inverse_K(4);
    CHECK(Row{k4(1, 0), k4(2, 0), k4(3, 0)} == Row{17, 7, 3});

    for (std::size_t n = 4; n <= 12; ++n) {
        const DenseMatrix h = hankel_block_inverse_M(n);
        // Lower-right block is constant along anti-diagonals.
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t j = 1; j + 1 < n; ++j) REQUIRE(h(i, j) == h(i - 1, j + 1));
        REQUIRE(h == oracle_inverse(build_M(n)));
        REQUIRE(hankel_block_inverse_K(n) == oracle_inverse(build_K(n)));
    }
}
