#include "pellcirc/closed_forms.hpp"

#include "pellcirc/errors.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace pellcirc {

namespace {

void require_order(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        throw DomainError(std::string(what) + " requires n >= " + std::to_string(min) +
                          ", got " + std::to_string(n));
    }
}

// base^0 .. base^count, built by repeated multiplication.
template <typename T>
std::vector<T> powers(const T& base, std::size_t count) {
    std::vector<T> out;
    out.reserve(count + 1);
    out.emplace_back(1);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(out.back() * base);
    return out;
}

// Q_{k+1} - 3Q_k, the coefficient that recurs through the ℚ formulas.
BigInteger lucas_step(const std::vector<BigInteger>& q, std::size_t k) {
    return q[k + 1] - 3 * q[k];
}

}  // namespace

Circulant sequence_circulant(SequenceKind kind, std::size_t n) {
    return Circulant::from_integers(sequence_prefix(kind, n));
}

BigInteger det_pell_closed(std::size_t n) {
    require_order(n, 3, "det_pell_closed");
    const auto p = sequence_table(SequenceKind::Pell, n + 1);
    const BigInteger d = p[1] - p[n + 1];
    const auto d_pow = powers(d, n);
    const auto pn_pow = powers(p[n], n);

    BigInteger det = d_pow[n - 2] * (p[1] - 2 * p[n]);
    for (std::size_t k = 2; k <= n - 1; ++k) det += p[k - 1] * pn_pow[n - k] * d_pow[k - 2];
    return det;
}

BigInteger det_pell_lucas_closed(std::size_t n) {
    require_order(n, 3, "det_pell_lucas_closed");
    const auto q = sequence_table(SequenceKind::PellLucas, n + 1);
    const BigInteger d = 2 - q[n + 1];
    const auto d_pow = powers(d, n);
    const auto c_pow = powers(BigInteger(q[n] - 2), n);

    BigInteger sum = 0;
    for (std::size_t k = 2; k <= n - 1; ++k) sum += lucas_step(q, k) * c_pow[n - k] * d_pow[k - 2];
    return 2 * d_pow[n - 2] * (2 - 3 * q[n]) + 2 * sum;
}

BigInteger det_closed(SequenceKind kind, std::size_t n) {
    return kind == SequenceKind::Pell ? det_pell_closed(n) : det_pell_lucas_closed(n);
}

PellScalars pell_scalars(std::size_t n) {
    require_order(n, 3, "pell_scalars");
    const auto p = sequence_table(SequenceKind::Pell, n + 1);
    const Rational ratio(p[n], p[1] - p[n + 1]);
    const auto r_pow = powers(ratio, n);

    Rational g = Rational(p[1] - 2 * p[n]);
    Rational g_prime = Rational(p[n]);
    for (std::size_t k = 2; k <= n - 1; ++k) {
        g += Rational(p[k - 1]) * r_pow[n - k];
        g_prime += Rational(p[k]) * r_pow[n - k];
    }
    return {n, g, g_prime, ratio};
}

PellLucasScalars pell_lucas_scalars(std::size_t n) {
    require_order(n, 3, "pell_lucas_scalars");
    const auto q = sequence_table(SequenceKind::PellLucas, n + 1);
    const Rational ratio(q[n] - 2, q[1] - q[n + 1]);
    const auto r_pow = powers(ratio, n);

    Rational u = Rational(q[1] - 3 * q[n]);
    for (std::size_t k = 2; k <= n - 1; ++k) u += Rational(lucas_step(q, k)) * r_pow[n - k];
    Rational u_prime = 0;
    for (std::size_t k = 2; k <= n; ++k) u_prime += Rational(q[k]) * r_pow[n - k];
    return {n, u, u_prime, ratio};
}

Circulant inv_pell_closed(std::size_t n) {
    require_order(n, 3, "inv_pell_closed");
    const auto p = sequence_table(SequenceKind::Pell, n + 1);
    const Rational d(p[1] - p[n + 1]);
    const Rational g = pell_scalars(n).g;
    const auto d_pow = powers(d, n);
    const auto pn_pow = powers(Rational(p[n]), n);

    // p_1 and p_2 carry the partial sums; p_3.. form a geometric tail.
    Rational first = 1 + Rational(2) * pn_pow[n - 3] / d_pow[n - 2];
    for (std::size_t k = 1; k <= n - 3; ++k) first += Rational(p[n - k]) * pn_pow[k - 1] / d_pow[k];

    Rational second = -2;
    for (std::size_t k = 1; k <= n - 2; ++k)
        second += Rational(p[n - k - 1]) * pn_pow[k - 1] / d_pow[k];

    std::vector<Rational> row;
    row.reserve(n);
    row.push_back(first / g);
    row.push_back(second / g);
    for (std::size_t i = 3; i <= n; ++i) row.push_back(-pn_pow[i - 3] / (g * d_pow[i - 2]));
    return Circulant(std::move(row));
}

Circulant inv_pell_lucas_closed(std::size_t n) {
    require_order(n, 3, "inv_pell_lucas_closed");
    const auto q = sequence_table(SequenceKind::PellLucas, n + 1);
    const Rational d(q[1] - q[n + 1]);
    const Rational u = pell_lucas_scalars(n).u;
    const auto d_pow = powers(d, n);
    const auto c_pow = powers(Rational(q[n] - 2), n);

    Rational first = 1 - Rational(8) * c_pow[n - 3] / d_pow[n - 2];
    for (std::size_t k = 1; k <= n - 3; ++k)
        first += Rational(lucas_step(q, n - k + 1)) * c_pow[k - 1] / d_pow[k];

    Rational second = -3;
    for (std::size_t k = 1; k <= n - 2; ++k)
        second += Rational(lucas_step(q, n - k)) * c_pow[k - 1] / d_pow[k];

    std::vector<Rational> row;
    row.reserve(n);
    row.push_back(first / u);
    row.push_back(second / u);
    for (std::size_t m = 3; m <= n; ++m) row.push_back(Rational(4) * c_pow[m - 3] / (u * d_pow[m - 2]));
    return Circulant(std::move(row));
}

Circulant inv_closed(SequenceKind kind, std::size_t n) {
    return kind == SequenceKind::Pell ? inv_pell_closed(n) : inv_pell_lucas_closed(n);
}

Rational partial_sum_S(std::size_t n, std::size_t r) {
    require_order(n, 3, "partial_sum_S");
    if (r < 1 || r > n - 2) {
        throw DomainError("partial_sum_S: r must lie in 1..n-2, got r=" + std::to_string(r) +
                          " for n=" + std::to_string(n));
    }
    const auto p = sequence_table(SequenceKind::Pell, n + 1);
    const Rational d(p[1] - p[n + 1]);
    Rational sum = 0;
    Rational pn_pow = 1;
    Rational d_pow = d;
    for (std::size_t k = 1; k <= r; ++k) {
        sum += Rational(p[r - k + 1]) * pn_pow / d_pow;
        pn_pow *= Rational(p[n]);
        d_pow *= d;
    }
    return sum;
}

namespace {

void require_symbol_index(std::size_t n, std::size_t k, const char* what) {
    require_order(n, 3, what);
    if (k < 1 || k > n - 1) {
        throw DomainError(std::string(what) + ": k must lie in 1..n-1, got k=" +
                          std::to_string(k) + " for n=" + std::to_string(n));
    }
}

ComplexValue root_of_unity(std::size_t n, std::size_t k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * double(k % n) / double(n));
}

}  // namespace

ComplexValue symbol_u(std::size_t n, std::size_t k) {
    require_symbol_index(n, k, "symbol_u");
    const double pn = Rational(pell(n)).to_double();
    const double pn1 = Rational(pell(n + 1)).to_double();
    const ComplexValue w = root_of_unity(n, k);
    return (1.0 - pn1 - pn * w) / (1.0 - 2.0 * w - w * w);
}

ComplexValue symbol_v(std::size_t n, std::size_t k) {
    require_symbol_index(n, k, "symbol_v");
    const double qn = Rational(pell_lucas(n)).to_double();
    const double qn1 = Rational(pell_lucas(n + 1)).to_double();
    const ComplexValue w = root_of_unity(n, k);
    return (2.0 - qn1 + (2.0 - qn) * w) / (1.0 - 2.0 * w - w * w);
}

namespace {

DenseMatrix build_band(std::size_t n, long entry21, const char* what) {
    require_order(n, 4, what);
    DenseMatrix m(n, n);
    m(0, 0) = 1;
    m(1, 0) = entry21;
    m(1, n - 1) = 1;
    // 1-based row i: +1, -2, -1 in columns n+2-i, n+3-i, n+4-i; column n+1 wraps to 1.
    for (std::size_t i = 3; i <= n; ++i) {
        const std::size_t cols[] = {n + 2 - i, n + 3 - i, n + 4 - i};
        const long values[] = {1, -2, -1};
        for (int t = 0; t < 3; ++t) {
            std::size_t c = cols[t] == n + 1 ? 1 : cols[t];
            m(i - 1, c - 1) = values[t];
        }
    }
    return m;
}

DenseMatrix build_anti(std::size_t n, const Rational& ratio, const char* what) {
    require_order(n, 4, what);
    DenseMatrix m(n, n);
    m(0, 0) = 1;
    const auto r_pow = powers(ratio, n);
    for (std::size_t i = 2; i <= n; ++i) m(i - 1, 1) = r_pow[n - i];
    for (std::size_t i = 2; i <= n - 1; ++i) m(i - 1, n + 1 - i) = 1;
    return m;
}

DenseMatrix lower_bidiagonal(std::size_t order, const Rational& diag, const Rational& sub) {
    DenseMatrix m(order, order);
    for (std::size_t i = 0; i < order; ++i) {
        m(i, i) = diag;
        if (i > 0) m(i, i - 1) = sub;
    }
    return m;
}

// Inverse of lower_bidiagonal(order, d, -c): entry (i, j) = c^{i-j} / d^{i-j+1}, i >= j.
DenseMatrix lower_bidiagonal_inverse(std::size_t order, const Rational& d, const Rational& c) {
    DenseMatrix m(order, order);
    const auto c_pow = powers(c, order);
    const auto d_pow = powers(d, order + 1);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = c_pow[i - j] / d_pow[i - j + 1];
    return m;
}

DenseMatrix hankel_inverse(std::size_t n, const std::vector<Rational>& column) {
    const auto p = sequence_table(SequenceKind::Pell, n);
    DenseMatrix m(n, n);
    m(0, 0) = 1;
    for (std::size_t i = 1; i < n; ++i) m(i, 0) = column[i - 1];
    // Lower-right block: constant along anti-diagonals, first row P_{n-1}, ..., P_1.
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = 0; b + 1 < n; ++b)
            if (a + b + 1 < n) m(a + 1, b + 1) = Rational(p[n - 1 - a - b]);
    return m;
}

}  // namespace

DenseMatrix build_M(std::size_t n) { return build_band(n, -2, "build_M"); }

DenseMatrix build_K(std::size_t n) { return build_band(n, -3, "build_K"); }

DenseMatrix build_N(std::size_t n) {
    require_order(n, 4, "build_N");
    return build_anti(n, Rational(pell(n), pell(1) - pell(n + 1)), "build_N");
}

DenseMatrix build_L(std::size_t n) {
    require_order(n, 4, "build_L");
    return build_anti(n, Rational(pell_lucas(n) - 2, pell_lucas(1) - pell_lucas(n + 1)), "build_L");
}

DenseMatrix bidiagonal_pell(std::size_t n) {
    require_order(n, 3, "bidiagonal_pell");
    return lower_bidiagonal(n - 2, Rational(pell(1) - pell(n + 1)), Rational(-pell(n)));
}

DenseMatrix bidiagonal_pell_lucas(std::size_t n) {
    require_order(n, 3, "bidiagonal_pell_lucas");
    return lower_bidiagonal(n - 2, Rational(pell_lucas(1) - pell_lucas(n + 1)),
                            Rational(2 - pell_lucas(n)));
}

DenseMatrix bidiagonal_inverse_pell(std::size_t n) {
    require_order(n, 3, "bidiagonal_inverse_pell");
    return lower_bidiagonal_inverse(n - 2, Rational(pell(1) - pell(n + 1)), Rational(pell(n)));
}

DenseMatrix bidiagonal_inverse_pell_lucas(std::size_t n) {
    require_order(n, 3, "bidiagonal_inverse_pell_lucas");
    return lower_bidiagonal_inverse(n - 2, Rational(pell_lucas(1) - pell_lucas(n + 1)),
                                    Rational(pell_lucas(n) - 2));
}

DenseMatrix hankel_block_inverse_M(std::size_t n) {
    require_order(n, 4, "hankel_block_inverse_M");
    const auto p = sequence_table(SequenceKind::Pell, n);
    std::vector<Rational> column;
    for (std::size_t k = n; k >= 2; --k) column.emplace_back(p[k]);
    return hankel_inverse(n, column);
}

DenseMatrix hankel_block_inverse_K(std::size_t n) {
    require_order(n, 4, "hankel_block_inverse_K");
    const auto q = sequence_table(SequenceKind::PellLucas, n);
    std::vector<Rational> column;
    for (std::size_t k = n; k >= 2; --k) column.push_back(Rational(q[k], 2));
    return hankel_inverse(n, column);
}

}  // namespace pellcirc
