#include "pellcirc/cli/records.hpp"

#include <json.hpp>

#include <stdexcept>

namespace pellcirc::cli {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Closed: return "closed";
        case Method::Oracle: return "oracle";
        case Method::Eigen: return "eigen";
    }
    return "closed";
}

std::string_view to_string(Format format) {
    switch (format) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Plain: return "plain";
    }
    return "plain";
}

std::optional<SequenceKind> parse_sequence(std::string_view text) {
    if (text == "pell") return SequenceKind::Pell;
    if (text == "pell-lucas") return SequenceKind::PellLucas;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
    if (text == "closed") return Method::Closed;
    if (text == "oracle") return Method::Oracle;
    if (text == "eigen") return Method::Eigen;
    return std::nullopt;
}

std::optional<Format> parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "plain") return Format::Plain;
    return std::nullopt;
}

std::string to_json(const OutputRecord& record) {
    ordered_json j;
    j["seq"] = to_string(record.seq);
    j["n"] = record.n;
    j["method"] = to_string(record.method);
    if (record.det) j["det"] = *record.det;
    if (record.inverse_first_row) j["inverse_first_row"] = *record.inverse_first_row;
    if (record.elapsed_ns) j["elapsed_ns"] = *record.elapsed_ns;
    if (record.skipped) j["skipped"] = true;
    return j.dump();
}

OutputRecord record_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
    OutputRecord record;
    try {
        auto seq = parse_sequence(j.at("seq").get<std::string>());
        auto method = parse_method(j.at("method").get<std::string>());
        if (!seq || !method) throw std::invalid_argument("unknown seq or method");
        record.seq = *seq;
        record.method = *method;
        record.n = j.at("n").get<std::size_t>();
        if (j.contains("det")) record.det = j["det"].get<std::string>();
        if (j.contains("inverse_first_row"))
            record.inverse_first_row = j["inverse_first_row"].get<std::vector<std::string>>();
        if (j.contains("elapsed_ns")) record.elapsed_ns = j["elapsed_ns"].get<std::int64_t>();
        if (j.contains("skipped")) record.skipped = j["skipped"].get<bool>();
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
    return record;
}

std::string to_csv(const OutputRecord& record) {
    std::string line;
    line += to_string(record.seq);
    line += ',' + std::to_string(record.n);
    line += ',';
    line += to_string(record.method);
    line += ',' + record.det.value_or("");
    line += ',';
    if (record.skipped) {
        line += "skipped";
    } else if (record.elapsed_ns) {
        line += std::to_string(*record.elapsed_ns);
    }
    return line;
}

std::string to_plain(const OutputRecord& record) {
    if (record.inverse_first_row) {
        std::string line;
        for (const auto& entry : *record.inverse_first_row) {
            if (!line.empty()) line += ' ';
            line += entry;
        }
        return line;
    }
    return record.det.value_or("");
}

}  // namespace pellcirc::cli
