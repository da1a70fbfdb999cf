#pragma once

#include "pellcirc/quad_int.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace pellcirc {

enum class SequenceKind { Pell, PellLucas };

std::string_view to_string(SequenceKind kind);

/// P_n: 0, 1, 2, 5, 12, 29, ... with P_n = 2P_{n-1} + P_{n-2}.
BigInteger pell(std::size_t n);

/// Q_n: 2, 2, 6, 14, 34, 82, ... with the Pell recurrence.
BigInteger pell_lucas(std::size_t n);

/// (1 + √2)^n by square-and-multiply. The result (a, b) has b = P_n and 2a = Q_n.
QuadInt alpha_power(std::size_t n);

/// First row of the circulant: [X_1, ..., X_n].
std::vector<BigInteger> sequence_prefix(SequenceKind kind, std::size_t n);

/// [X_0, ..., X_last], index-aligned with the sequence.
std::vector<BigInteger> sequence_table(SequenceKind kind, std::size_t last);

}  // namespace pellcirc
