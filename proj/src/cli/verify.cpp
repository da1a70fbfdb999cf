#include "pellcirc/cli/verify.hpp"

#include "pellcirc/closed_forms.hpp"
#include "pellcirc/errors.hpp"
#include "pellcirc/factorization.hpp"
#include "pellcirc/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace pellcirc::cli {

namespace {

constexpr SequenceKind kBoth[] = {SequenceKind::Pell, SequenceKind::PellLucas};

struct Range {
    std::size_t lo;
    std::size_t hi;

    bool empty() const { return hi < lo; }
    std::string text() const {
        return empty() ? "n/a" : std::to_string(lo) + ".." + std::to_string(hi);
    }
};

// A failed expectation inside a check body.
struct CheckFailure {
    std::string detail;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure{what};
}

std::string at(SequenceKind kind, std::size_t n) {
    return std::string(to_string(kind)) + " n=" + std::to_string(n);
}

struct CheckSpec {
    std::string name;
    Range range;
    std::string summary;
    std::function<void(const Range&)> body;
};

CheckResult run_check(const CheckSpec& spec) {
    CheckResult result{spec.name, spec.range.text(), CheckStatus::Pass, spec.summary};
    if (spec.range.empty()) {
        result.detail = "skipped: not applicable below the minimum order";
        return result;
    }
    try {
        spec.body(spec.range);
    } catch (const CheckFailure& f) {
        result.status = CheckStatus::Fail;
        result.detail = f.detail;
    } catch (const std::exception& e) {
        result.status = CheckStatus::Fail;
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

double relative_error(ComplexValue got, ComplexValue want) {
    return std::abs(got - want) / std::abs(want);
}

void check_published_values(const Range&) {
    expect(det_pell_closed(3) == 104, "det P(3) != 104");
    expect(det_pell_closed(4) == -18560, "det P(4) != -18560");
    expect(det_pell_lucas_closed(3) == 2464, "det Q(3) != 2464");
    expect(det_pell_lucas_closed(4) == -1247232, "det Q(4) != -1247232");
}

void check_sequences(const Range& r) {
    const auto p = sequence_table(SequenceKind::Pell, r.hi);
    const auto q = sequence_table(SequenceKind::PellLucas, r.hi);
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const QuadInt a = alpha_power(n);
        expect(a.b() == p[n], "alpha^n coefficient of sqrt2 != P_n at n=" + std::to_string(n));
        expect(2 * a.a() == q[n], "2 * rational part of alpha^n != Q_n at n=" + std::to_string(n));
        if (n >= 2) {
            expect(p[n] == 2 * p[n - 1] + p[n - 2], "Pell recurrence fails at n=" + std::to_string(n));
            expect(q[n] == 2 * q[n - 1] + q[n - 2], "Pell-Lucas recurrence fails at n=" + std::to_string(n));
        }
        if (n <= kSequenceFloor) {
            expect(pell(n) == p[n] && pell_lucas(n) == q[n],
                   "direct generator disagrees with table at n=" + std::to_string(n));
        }
    }
}

void check_det_oracle(SequenceKind kind, const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const Rational oracle = oracle_det(circ_expand(sequence_circulant(kind, n)));
        expect(Rational(det_closed(kind, n)) == oracle, "closed != oracle at " + at(kind, n));
    }
}

void check_scalars(const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const auto p = sequence_table(SequenceKind::Pell, n + 1);
        const auto s = pell_scalars(n);
        expect(Rational(p[1] - p[n + 1]).pow(n - 2) * s.g == Rational(det_pell_closed(n)),
               "(P1-P_{n+1})^{n-2} g_n != det at n=" + std::to_string(n));
        const auto q = sequence_table(SequenceKind::PellLucas, n + 1);
        const auto t = pell_lucas_scalars(n);
        expect(Rational(2) * Rational(q[1] - q[n + 1]).pow(n - 2) * t.u ==
                   Rational(det_pell_lucas_closed(n)),
               "2 (Q1-Q_{n+1})^{n-2} u_n != det at n=" + std::to_string(n));
    }
}

void check_inverse(SequenceKind kind, const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const DenseMatrix m = circ_expand(sequence_circulant(kind, n));
        const Circulant closed = inv_closed(kind, n);
        expect(mat_mul(circ_expand(closed), m) == DenseMatrix::identity(n),
               "closed inverse times matrix != I at " + at(kind, n));
        const DenseMatrix oracle = oracle_inverse(m);
        expect(is_circulant(oracle), "oracle inverse not circulant at " + at(kind, n));
        expect(circ_from_matrix(oracle) == closed, "closed row != oracle row at " + at(kind, n));
    }
}

void check_geometric_tail(const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const auto ps = pell_scalars(n);
        const auto qs = pell_lucas_scalars(n);
        const auto p_row = inv_pell_closed(n).first_row();
        const auto q_row = inv_pell_lucas_closed(n).first_row();
        for (std::size_t i = 3; i < n; ++i) {
            expect(p_row[i] == p_row[i - 1] * ps.ratio, "Pell tail not geometric at " + at(SequenceKind::Pell, n));
            expect(q_row[i] == q_row[i - 1] * qs.ratio,
                   "Pell-Lucas tail not geometric at " + at(SequenceKind::PellLucas, n));
        }
    }
}

void check_eigen_det(const Range& r) {
    for (auto kind : kBoth) {
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            const Circulant c = sequence_circulant(kind, n);
            const double exact = Rational(det_closed(kind, n)).to_double();
            const ComplexValue eig = circ_det_via_eigen(c);
            expect(std::abs(eig.real() - exact) / std::abs(exact) < 1e-9,
                   "eigen product real part off at " + at(kind, n));
            expect(std::abs(eig.imag()) / std::abs(exact) < 1e-9,
                   "eigen product imaginary part too large at " + at(kind, n));
        }
    }
}

void check_symbols(const Range& r) {
    for (auto kind : kBoth) {
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            const auto lambda = circ_eigenvalues(sequence_circulant(kind, n));
            for (std::size_t k = 1; k < n; ++k) {
                const ComplexValue s = kind == SequenceKind::Pell ? symbol_u(n, k) : symbol_v(n, k);
                expect(relative_error(s, lambda[k]) < 1e-9,
                       "symbol disagrees with DFT at " + at(kind, n) + " k=" + std::to_string(k));
                if (n >= 5) {
                    expect(std::abs(s) > 1e-6,
                           "symbol vanishes at " + at(kind, n) + " k=" + std::to_string(k));
                }
            }
        }
    }
}

void check_hessenberg(const Range& r) {
    for (auto kind : kBoth) {
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            const auto bundle = hessenberg_factorization(kind, n);
            const auto& h = bundle.hessenberg;
            const auto q = sequence_table(kind, n + 1);
            const Rational diag(q[1] - q[n + 1]);
            const Rational sub = kind == SequenceKind::Pell ? Rational(-q[n]) : Rational(2 - q[n]);
            for (std::size_t i = 2; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j + 1 != i && j != i) expect(h(i, j).is_zero(), "nonzero outside band at " + at(kind, n));
                }
                expect(h(i, i) == diag, "diagonal entry wrong at " + at(kind, n));
                if (i >= 3) expect(h(i, i - 1) == sub, "subdiagonal entry wrong at " + at(kind, n));
            }
        }
    }
}

void check_direct_sum(const Range& r) {
    for (auto kind : kBoth) {
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            const auto bundle = hessenberg_factorization(kind, n);
            const DenseMatrix product = mat_mul(
                mat_mul(mat_mul(bundle.left, circ_expand(sequence_circulant(kind, n))), bundle.right),
                bundle.column_op);
            DenseMatrix head(2, 2);
            if (kind == SequenceKind::Pell) {
                head(0, 0) = 1;
                head(1, 1) = pell_scalars(n).g;
            } else {
                head(0, 0) = 2;
                head(1, 1) = pell_lucas_scalars(n).u;
            }
            const DenseMatrix tail = kind == SequenceKind::Pell ? bidiagonal_pell(n) : bidiagonal_pell_lucas(n);
            expect(product == direct_sum(head, tail), "product != block diagonal at " + at(kind, n));
        }
    }
}

void check_parity(const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const Rational want = (n % 4 == 1 || n % 4 == 2) ? 1 : -1;
        const std::pair<const char*, DenseMatrix> mats[] = {
            {"M", build_M(n)}, {"N", build_N(n)}, {"K", build_K(n)}, {"L", build_L(n)}};
        for (const auto& [name, m] : mats) {
            expect(oracle_det(m) == want, std::string("det ") + name + " has wrong sign at n=" + std::to_string(n));
        }
        expect(oracle_det(build_M(n)) * oracle_det(build_N(n)) == 1, "det M det N != 1");
        expect(oracle_det(build_K(n)) * oracle_det(build_L(n)) == 1, "det K det L != 1");
    }
}

void check_bidiagonal(const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        expect(bidiagonal_inverse_pell(n) == oracle_inverse(bidiagonal_pell(n)),
               "Pell bidiagonal inverse differs at n=" + std::to_string(n));
        expect(bidiagonal_inverse_pell_lucas(n) == oracle_inverse(bidiagonal_pell_lucas(n)),
               "Pell-Lucas bidiagonal inverse differs at n=" + std::to_string(n));
    }
}

void check_hankel(const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        expect(hankel_block_inverse_M(n) == oracle_inverse(build_M(n)),
               "M inverse block form differs at n=" + std::to_string(n));
        expect(hankel_block_inverse_K(n) == oracle_inverse(build_K(n)),
               "K inverse block form differs at n=" + std::to_string(n));
    }
}

void check_partial_sums(const Range& r) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const Rational pn(pell(n));
        const Rational d(pell(1) - pell(n + 1));
        expect(partial_sum_S(n, 2) - Rational(2) * partial_sum_S(n, 1) == pn / d.pow(2),
               "S2 - 2 S1 identity fails at n=" + std::to_string(n));
        for (std::size_t s = 1; s + 4 <= n; ++s) {
            expect(partial_sum_S(n, s + 2) - Rational(2) * partial_sum_S(n, s + 1) - partial_sum_S(n, s) ==
                       pn.pow(s + 1) / d.pow(s + 2),
                   "three-term identity fails at n=" + std::to_string(n) + " r=" + std::to_string(s));
        }
    }
}

Range capped(std::size_t lo, std::size_t n_max, std::size_t cap) {
    return {lo, std::min(n_max, cap)};
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
}

VerifyReport run_verify(std::size_t n_max, unsigned workers) {
    if (n_max < 3) throw DomainError("verify requires n_max >= 3");

    const std::vector<CheckSpec> specs = {
        {"published-determinant-values", {3, 4}, "det P = 104, -18560; det Q = 2464, -1247232", check_published_values},
        {"sequence-binet-recurrence", {0, std::max(n_max + 1, kSequenceFloor)},
         "exact Binet in Z[sqrt2] matches recurrence", check_sequences},
        {"det-closed-vs-oracle-pell", capped(3, n_max, kDetOracleCap), "closed form == Bareiss",
         [](const Range& r) { check_det_oracle(SequenceKind::Pell, r); }},
        {"det-closed-vs-oracle-pell-lucas", capped(3, n_max, kDetOracleCap), "closed form == Bareiss",
         [](const Range& r) { check_det_oracle(SequenceKind::PellLucas, r); }},
        {"scalar-determinant-consistency", capped(3, n_max, kDetOracleCap),
         "g_n and u_n reproduce the determinants", check_scalars},
        {"inverse-closed-pell", capped(3, n_max, kInverseOracleCap),
         "closed inverse * P == I and matches Gauss-Jordan", [](const Range& r) { check_inverse(SequenceKind::Pell, r); }},
        {"inverse-closed-pell-lucas", capped(3, n_max, kInverseOracleCap),
         "closed inverse * Q == I and matches Gauss-Jordan",
         [](const Range& r) { check_inverse(SequenceKind::PellLucas, r); }},
        {"inverse-geometric-tail", capped(3, n_max, kInverseOracleCap),
         "inverse entries 3..n form a geometric progression", check_geometric_tail},
        {"eigen-determinant", capped(3, n_max, kEigenCap), "DFT eigenproduct within 1e-9 relative",
         check_eigen_det},
        {"symbol-functions", capped(3, n_max, kEigenCap),
         "symbols match DFT eigenvalues, nonvanishing for n >= 5", check_symbols},
        {"hessenberg-structure", capped(4, n_max, kStructureCap), "M P N and K Q L are Hessenberg",
         check_hessenberg},
        {"direct-sum-factorization", capped(4, n_max, kStructureCap),
         "M P N U == H + C and K Q L S == G + A", check_direct_sum},
        {"transform-parity", capped(4, n_max, kStructureCap), "det M, N, K, L follow n mod 4",
         check_parity},
        {"bidiagonal-inverses", capped(3, n_max, kBidiagonalOrderCap + 2),
         "closed bidiagonal inverses == Gauss-Jordan", check_bidiagonal},
        {"hankel-block-inverses", capped(4, n_max, kStructureCap),
         "block Hankel forms of M^-1, K^-1 == Gauss-Jordan", check_hankel},
        {"partial-sum-recurrences", capped(5, n_max, kPartialSumCap),
         "S_n^(r) recurrences hold exactly", check_partial_sums},
    };

    VerifyReport report;
    report.checks.resize(specs.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, specs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) report.checks[i] = run_check(specs[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    return report;
}

std::string report_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"n_range", c.n_range},
                               {"status", c.status == CheckStatus::Pass ? "pass" : "fail"},
                               {"detail", c.detail}});
    }
    j["overall"] = report.passed() ? "pass" : "fail";
    return j.dump();
}

std::string report_plain(const VerifyReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << (c.status == CheckStatus::Pass ? "PASS " : "FAIL ") << c.name << " [" << c.n_range
           << "] " << c.detail << '\n';
    }
    os << "overall: " << (report.passed() ? "pass" : "fail") << '\n';
    return os.str();
}

}  // namespace pellcirc::cli
