#pragma once

#include "pellcirc/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pellcirc::cli {

enum class Method { Closed, Oracle, Eigen };
enum class Format { Json, Csv, Plain };

std::string_view to_string(Method method);
std::string_view to_string(Format format);
std::optional<SequenceKind> parse_sequence(std::string_view text);
std::optional<Method> parse_method(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

/// One result line. Determinants are exact decimal text, inverse entries are
/// "num/den" in lowest terms.
struct OutputRecord {
    SequenceKind seq = SequenceKind::Pell;
    std::size_t n = 0;
    Method method = Method::Closed;
    std::optional<std::string> det;
    std::optional<std::vector<std::string>> inverse_first_row;
    std::optional<std::int64_t> elapsed_ns;
    bool skipped = false;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Single-line JSON, fields in the order seq, n, method, det,
/// inverse_first_row, elapsed_ns, skipped; absent fields are omitted.
std::string to_json(const OutputRecord& record);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
OutputRecord record_from_json(std::string_view text);

inline constexpr std::string_view kCsvHeader = "seq,n,method,det,elapsed_ns";

/// Row matching kCsvHeader. A skipped run has an empty det and elapsed_ns "skipped".
std::string to_csv(const OutputRecord& record);

/// The determinant, or the inverse row separated by spaces.
std::string to_plain(const OutputRecord& record);

}  // namespace pellcirc::cli
