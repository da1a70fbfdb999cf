#pragma once

#include "pellcirc/cli/records.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pellcirc::cli {

// Bad arguments; the front end maps this to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultNCap = 10000;
inline constexpr std::size_t kDefaultOracleCutoff = 256;

enum ExitStatus : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

OutputRecord cmd_det(SequenceKind seq, std::size_t n, Method method, std::size_t n_cap = kDefaultNCap);
OutputRecord cmd_inv(SequenceKind seq, std::size_t n, Method method, std::size_t n_cap = kDefaultNCap);

struct BenchResult {
    std::vector<OutputRecord> records;
    // Orders where closed and oracle both ran and disagreed.
    std::vector<std::size_t> mismatches;
};

BenchResult cmd_bench(SequenceKind seq, const std::vector<std::size_t>& orders, std::size_t reps,
                      std::size_t oracle_cutoff, std::size_t n_cap = kDefaultNCap);

/// Parses "8,16,32"; empty text gives an empty list. Throws UsageError.
std::vector<std::size_t> parse_order_list(const std::string& text);

/// Reads PELLCIRC_N_CAP, falling back to kDefaultNCap. Throws UsageError on junk.
std::size_t n_cap_from_env();

/// Full command-line front end. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellcirc::cli
