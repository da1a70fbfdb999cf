#include "pellcirc/sequences.hpp"

#include <utility>

namespace pellcirc {

namespace {

BigInteger initial(SequenceKind kind, int index) {
    if (kind == SequenceKind::Pell) return index == 0 ? 0 : 1;
    return 2;
}

BigInteger nth(SequenceKind kind, std::size_t n) {
    BigInteger prev = initial(kind, 0);
    BigInteger cur = initial(kind, 1);
    if (n == 0) return prev;
    for (std::size_t i = 1; i < n; ++i) {
        BigInteger next = 2 * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::string_view to_string(SequenceKind kind) {
    return kind == SequenceKind::Pell ? "pell" : "pell-lucas";
}

BigInteger pell(std::size_t n) { return nth(SequenceKind::Pell, n); }

BigInteger pell_lucas(std::size_t n) { return nth(SequenceKind::PellLucas, n); }

QuadInt alpha_power(std::size_t n) { return QuadInt{1, 1}.pow(n); }

std::vector<BigInteger> sequence_table(SequenceKind kind, std::size_t last) {
    std::vector<BigInteger> values;
    values.reserve(last + 1);
    values.push_back(initial(kind, 0));
    if (last >= 1) values.push_back(initial(kind, 1));
    for (std::size_t i = 2; i <= last; ++i) values.push_back(2 * values[i - 1] + values[i - 2]);
    return values;
}

std::vector<BigInteger> sequence_prefix(SequenceKind kind, std::size_t n) {
    auto table = sequence_table(kind, n);
    return {table.begin() + 1, table.end()};
}

}  // namespace pellcirc
