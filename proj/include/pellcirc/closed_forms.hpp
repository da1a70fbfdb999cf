#pragma once

// Closed-form determinants, inverses and auxiliary matrices for the circulants
//   ℙ = circ(P_1, ..., P_n)   and   ℚ = circ(Q_1, ..., Q_n).
// Everything here is exact; only symbol_u/symbol_v evaluate in double.

#include "pellcirc/circulant.hpp"
#include "pellcirc/sequences.hpp"

#include <cstddef>

namespace pellcirc {

/// circ(X_1, ..., X_n) for the chosen sequence.
Circulant sequence_circulant(SequenceKind kind, std::size_t n);

/// det ℙ for n >= 3:
///   (P_1 - P_{n+1})^{n-2} (P_1 - 2P_n) + Σ_{k=2}^{n-1} P_{k-1} P_n^{n-k} (P_1 - P_{n+1})^{k-2}
BigInteger det_pell_closed(std::size_t n);

/// det ℚ for n >= 3:
///   2(2 - Q_{n+1})^{n-2}(2 - 3Q_n) + 2 Σ_{k=2}^{n-1} (Q_{k+1} - 3Q_k)(Q_n - 2)^{n-k}(2 - Q_{n+1})^{k-2}
BigInteger det_pell_lucas_closed(std::size_t n);

BigInteger det_closed(SequenceKind kind, std::size_t n);

struct PellScalars {
    std::size_t n;
    Rational g;
    Rational g_prime;
    Rational ratio;  // P_n / (P_1 - P_{n+1})
};

struct PellLucasScalars {
    std::size_t n;
    Rational u;
    Rational u_prime;
    Rational ratio;  // (Q_n - 2) / (Q_1 - Q_{n+1})
};

PellScalars pell_scalars(std::size_t n);
PellLucasScalars pell_lucas_scalars(std::size_t n);

/// First row of ℙ⁻¹ from the closed form. Throws DomainError for n < 3.
Circulant inv_pell_closed(std::size_t n);

/// First row of ℚ⁻¹ from the closed form. Throws DomainError for n < 3.
Circulant inv_pell_lucas_closed(std::size_t n);

Circulant inv_closed(SequenceKind kind, std::size_t n);

/// S_n^{(r)} = Σ_{k=1}^{r} P_{r-k+1} P_n^{k-1} / (P_1 - P_{n+1})^k, for 1 <= r <= n-2.
Rational partial_sum_S(std::size_t n, std::size_t r);

/// k-th eigenvalue of ℙ as the rational symbol
///   (1 - P_{n+1} - P_n ω^k) / (1 - 2ω^k - ω^{2k}),  1 <= k <= n-1.
ComplexValue symbol_u(std::size_t n, std::size_t k);

/// k-th eigenvalue of ℚ:
///   (2 - Q_{n+1} + (2 - Q_n) ω^k) / (1 - 2ω^k - ω^{2k}),  1 <= k <= n-1.
ComplexValue symbol_v(std::size_t n, std::size_t k);

// Transform matrices, n >= 4. M ℙ N and K ℚ L are Hessenberg.
DenseMatrix build_M(std::size_t n);
DenseMatrix build_K(std::size_t n);
DenseMatrix build_N(std::size_t n);
DenseMatrix build_L(std::size_t n);

/// (n-2)×(n-2) lower bidiagonal: P_1 - P_{n+1} on the diagonal, -P_n below it.
DenseMatrix bidiagonal_pell(std::size_t n);
/// (n-2)×(n-2) lower bidiagonal: Q_1 - Q_{n+1} on the diagonal, 2 - Q_n below it.
DenseMatrix bidiagonal_pell_lucas(std::size_t n);

/// Closed-form inverse of bidiagonal_pell(n): P_n^{i-j} / (P_1 - P_{n+1})^{i-j+1} for i >= j.
DenseMatrix bidiagonal_inverse_pell(std::size_t n);
/// Closed-form inverse of bidiagonal_pell_lucas(n): (Q_n - 2)^{i-j} / (Q_1 - Q_{n+1})^{i-j+1}.
DenseMatrix bidiagonal_inverse_pell_lucas(std::size_t n);

/// M⁻¹ assembled as [[1, 0], [B, H]] with B = (P_n, ..., P_2)ᵀ and H the
/// Hankel matrix with first row [P_{n-1}, ..., P_1].
DenseMatrix hankel_block_inverse_M(std::size_t n);
/// K⁻¹: same Hankel block, column D = (Q_n/2, ..., Q_2/2)ᵀ.
DenseMatrix hankel_block_inverse_K(std::size_t n);

}  // namespace pellcirc
