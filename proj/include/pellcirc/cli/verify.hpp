#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pellcirc::cli {

enum class CheckStatus { Pass, Fail };

struct CheckResult {
    std::string name;
    std::string n_range;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
};

// Oracle-bound checks stop at these orders regardless of n_max.
inline constexpr std::size_t kDetOracleCap = 25;
inline constexpr std::size_t kInverseOracleCap = 15;
inline constexpr std::size_t kEigenCap = 12;
inline constexpr std::size_t kStructureCap = 12;
inline constexpr std::size_t kPartialSumCap = 15;
inline constexpr std::size_t kBidiagonalOrderCap = 50;
inline constexpr std::size_t kSequenceFloor = 200;

/// Runs every named check up to n_max (n_max >= 3). Checks are independent and
/// are spread over a pool of `workers` threads; 0 picks the hardware count.
VerifyReport run_verify(std::size_t n_max, unsigned workers = 0);

std::string report_json(const VerifyReport& report);
std::string report_plain(const VerifyReport& report);

}  // namespace pellcirc::cli
