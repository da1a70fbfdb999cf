#include "pellcirc/cli/commands.hpp"

#include "pellcirc/cli/verify.hpp"
#include "pellcirc/closed_forms.hpp"
#include "pellcirc/errors.hpp"
#include "pellcirc/linalg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>

namespace pellcirc::cli {

namespace {

void check_order(std::size_t n, std::size_t min, std::size_t n_cap, std::string_view what) {
    if (n < min) {
        throw UsageError(std::string(what) + " requires n >= " + std::to_string(min) + ", got " +
                         std::to_string(n));
    }
    if (n > n_cap) {
        throw UsageError("n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(n_cap) +
                         " (raise it with --n-cap or PELLCIRC_N_CAP)");
    }
}

std::string det_text(SequenceKind seq, std::size_t n, Method method) {
    switch (method) {
        case Method::Closed: return det_closed(seq, n).get_str();
        case Method::Oracle: return oracle_det(circ_expand(sequence_circulant(seq, n))).to_string();
        case Method::Eigen: {
            const ComplexValue det = circ_det_via_eigen(sequence_circulant(seq, n));
            if (!std::isfinite(det.real())) throw RangeError("eigenvalue product overflows a double");
            char buffer[400];
            std::snprintf(buffer, sizeof buffer, "%.0f", det.real());
            std::string text = buffer;
            return text == "-0" ? "0" : text;
        }
    }
    return {};
}

template <typename F>
std::int64_t median_ns(std::size_t reps, F&& body) {
    std::vector<std::int64_t> samples;
    samples.reserve(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError(std::string(what) + ": not a non-negative integer: '" + std::string(text) + "'");
    }
    return value;
}

OutputRecord make_record(SequenceKind seq, std::size_t n, Method method) {
    OutputRecord record;
    record.seq = seq;
    record.n = n;
    record.method = method;
    return record;
}

}  // namespace

OutputRecord cmd_det(SequenceKind seq, std::size_t n, Method method, std::size_t n_cap) {
    check_order(n, method == Method::Closed ? 3 : 1, n_cap, "det");
    OutputRecord record = make_record(seq, n, method);
    record.det = det_text(seq, n, method);
    return record;
}

OutputRecord cmd_inv(SequenceKind seq, std::size_t n, Method method, std::size_t n_cap) {
    if (method == Method::Eigen) throw UsageError("inv supports --method closed|oracle");
    check_order(n, 3, n_cap, "inv");
    const Circulant inverse = method == Method::Closed
                                  ? inv_closed(seq, n)
                                  : circ_from_matrix(oracle_inverse(circ_expand(sequence_circulant(seq, n))));
    OutputRecord record = make_record(seq, n, method);
    std::vector<std::string> row;
    for (const auto& x : inverse.first_row()) row.push_back(x.to_fraction_string());
    record.inverse_first_row = std::move(row);
    return record;
}

BenchResult cmd_bench(SequenceKind seq, const std::vector<std::size_t>& orders, std::size_t reps,
                      std::size_t oracle_cutoff, std::size_t n_cap) {
    if (reps < 1) throw UsageError("bench requires --reps >= 1");
    for (auto n : orders) check_order(n, 3, n_cap, "bench");

    BenchResult result;
    for (auto n : orders) {
        OutputRecord closed = make_record(seq, n, Method::Closed);
        closed.elapsed_ns = median_ns(reps, [&] { closed.det = det_closed(seq, n).get_str(); });
        result.records.push_back(closed);

        OutputRecord oracle = make_record(seq, n, Method::Oracle);
        if (n > oracle_cutoff) {
            oracle.skipped = true;
        } else {
            oracle.elapsed_ns = median_ns(reps, [&] {
                oracle.det = oracle_det(circ_expand(sequence_circulant(seq, n))).to_string();
            });
            if (oracle.det != closed.det) result.mismatches.push_back(n);
        }
        result.records.push_back(oracle);
    }
    return result;
}

std::vector<std::size_t> parse_order_list(const std::string& text) {
    std::vector<std::size_t> orders;
    if (text.empty()) return orders;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        orders.push_back(parse_size(rest.substr(0, comma), "--n"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return orders;
}

std::size_t n_cap_from_env() {
    const char* value = std::getenv("PELLCIRC_N_CAP");
    if (value == nullptr || *value == '\0') return kDefaultNCap;
    return parse_size(value, "PELLCIRC_N_CAP");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact determinants and inverses of Pell and Pell-Lucas circulant matrices"};
    app.require_subcommand(1);

    std::string n_cap_text;
    app.add_option("--n-cap", n_cap_text, "Largest accepted order (default 10000, env PELLCIRC_N_CAP)");

    std::string seq_text = "pell", method_text = "closed", format_text;
    std::size_t n = 0;

    auto* det = app.add_subcommand("det", "Determinant of circ(X_1, ..., X_n)");
    det->add_option("--seq", seq_text, "pell | pell-lucas")->required();
    det->add_option("--n", n, "Matrix order")->required();
    det->add_option("--method", method_text, "closed | oracle | eigen");
    det->add_option("--format", format_text, "json | csv | plain");

    auto* inv = app.add_subcommand("inv", "First row of the inverse circulant");
    inv->add_option("--seq", seq_text, "pell | pell-lucas")->required();
    inv->add_option("--n", n, "Matrix order")->required();
    inv->add_option("--method", method_text, "closed | oracle");
    inv->add_option("--format", format_text, "json | plain");

    std::size_t n_max = 12;
    auto* verify = app.add_subcommand("verify", "Check every closed form against the oracles");
    verify->add_option("--n-max", n_max, "Largest order to check (default 12)");
    verify->add_option("--format", format_text, "json | plain");

    std::string order_list;
    std::size_t reps = 5;
    std::size_t cutoff = kDefaultOracleCutoff;
    auto* bench = app.add_subcommand("bench", "Time closed forms against Bareiss elimination");
    bench->add_option("--n", order_list, "Comma-separated orders");
    bench->add_option("--reps", reps, "Repetitions per measurement (median reported)");
    bench->add_option("--oracle-cutoff", cutoff, "Skip the oracle above this order (default 256)");
    bench->add_option("--seq", seq_text, "pell | pell-lucas (default pell)");
    bench->add_option("--format", format_text, "csv | json");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "pellcirc: " << e.what() << '\n';
        return kExitUsage;
    }

    auto pick_format = [&](Format fallback, std::initializer_list<Format> allowed) {
        if (format_text.empty()) return fallback;
        auto f = parse_format(format_text);
        if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end())
            throw UsageError("unsupported --format '" + format_text + "'");
        return *f;
    };
    auto pick_seq = [&] {
        auto s = parse_sequence(seq_text);
        if (!s) throw UsageError("unknown --seq '" + seq_text + "' (pell | pell-lucas)");
        return *s;
    };
    auto pick_method = [&] {
        auto m = parse_method(method_text);
        if (!m) throw UsageError("unknown --method '" + method_text + "'");
        return *m;
    };

    try {
        const std::size_t n_cap = n_cap_text.empty() ? n_cap_from_env() : parse_size(n_cap_text, "--n-cap");

        if (det->parsed()) {
            const Format format = pick_format(Format::Plain, {Format::Json, Format::Csv, Format::Plain});
            const OutputRecord record = cmd_det(pick_seq(), n, pick_method(), n_cap);
            if (format == Format::Json) out << to_json(record) << '\n';
            if (format == Format::Csv) out << kCsvHeader << '\n' << to_csv(record) << '\n';
            if (format == Format::Plain) out << to_plain(record) << '\n';
            return kExitOk;
        }
        if (inv->parsed()) {
            const Format format = pick_format(Format::Plain, {Format::Json, Format::Plain});
            const OutputRecord record = cmd_inv(pick_seq(), n, pick_method(), n_cap);
            out << (format == Format::Json ? to_json(record) : to_plain(record)) << '\n';
            return kExitOk;
        }
        if (verify->parsed()) {
            const Format format = pick_format(Format::Plain, {Format::Json, Format::Plain});
            if (n_max < 3) throw UsageError("verify requires --n-max >= 3");
            if (n_max > n_cap) throw UsageError("--n-max exceeds the cap of " + std::to_string(n_cap));
            const VerifyReport report = run_verify(n_max);
            out << (format == Format::Json ? report_json(report) + "\n" : report_plain(report));
            return report.passed() ? kExitOk : kExitFailure;
        }
        if (bench->parsed()) {
            const Format format = pick_format(Format::Csv, {Format::Csv, Format::Json});
            const BenchResult result = cmd_bench(pick_seq(), parse_order_list(order_list), reps, cutoff, n_cap);
            if (format == Format::Csv && !result.records.empty()) out << kCsvHeader << '\n';
            for (const auto& record : result.records)
                out << (format == Format::Csv ? to_csv(record) : to_json(record)) << '\n';
            for (auto bad : result.mismatches)
                err << "pellcirc: closed and oracle determinants differ at n=" << bad << '\n';
            return result.mismatches.empty() ? kExitOk : kExitFailure;
        }
    } catch (const UsageError& e) {
        err << "pellcirc: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "pellcirc: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "pellcirc: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pellcirc::cli
