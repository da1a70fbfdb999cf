#include "pellcirc/factorization.hpp"

#include "pellcirc/closed_forms.hpp"
#include "pellcirc/errors.hpp"
#include "pellcirc/linalg.hpp"

#include <string>
#include <vector>

namespace pellcirc {

namespace {

// Expected shape of the Hessenberg product. Row 1 is [lead, scalar_prime, top...],
// row 2 is [0, scalar, second...]; below that only the diagonal and, from row 4,
// the subdiagonal are nonzero.
struct HessenbergShape {
    Rational lead;
    Rational scalar_prime;
    Rational scalar;
    std::vector<Rational> top;     // columns 3..n
    std::vector<Rational> second;  // columns 3..n
    Rational diag;
    Rational sub;
};

void expect_entry(const DenseMatrix& m, std::size_t i, std::size_t j, const Rational& want,
                  const char* name) {
    if (m(i, j) != want) {
        throw IntegrityError(std::string(name) + " entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "): expected " + want.to_string() + ", got " +
                             m(i, j).to_string());
    }
}

void check_hessenberg(const DenseMatrix& h, const HessenbergShape& shape) {
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational want = 0;
            if (i == 0) {
                want = j == 0 ? shape.lead : j == 1 ? shape.scalar_prime : shape.top[j - 2];
            } else if (i == 1) {
                want = j == 0 ? Rational(0) : j == 1 ? shape.scalar : shape.second[j - 2];
            } else if (j == i) {
                want = shape.diag;
            } else if (i >= 3 && j + 1 == i) {
                want = shape.sub;
            }
            expect_entry(h, i, j, want, "hessenberg");
        }
    }
}

void check_equal(const DenseMatrix& got, const DenseMatrix& want, const char* name) {
    for (std::size_t i = 0; i < want.rows(); ++i)
        for (std::size_t j = 0; j < want.cols(); ++j) expect_entry(got, i, j, want(i, j), name);
}

FactorizationBundle pell_bundle(std::size_t n) {
    const auto p = sequence_table(SequenceKind::Pell, n + 1);
    const auto s = pell_scalars(n);

    HessenbergShape shape{1, s.g_prime, s.g, {}, {}, Rational(p[1] - p[n + 1]), Rational(-p[n])};
    for (std::size_t j = 3; j <= n; ++j) {
        shape.top.emplace_back(p[n + 2 - j]);
        shape.second.emplace_back(p[n + 1 - j]);
    }

    // Column operations clearing rows 1-2 right of the diagonal.
    DenseMatrix column_op = DenseMatrix::identity(n);
    column_op(0, 1) = -s.g_prime;
    for (std::size_t j = 3; j <= n; ++j) {
        column_op(0, j - 1) = s.g_prime / s.g * Rational(p[n + 1 - j]) - Rational(p[n + 2 - j]);
        column_op(1, j - 1) = -Rational(p[n + 1 - j]) / s.g;
    }

    DenseMatrix head(2, 2);
    head(0, 0) = 1;
    head(1, 1) = s.g;

    DenseMatrix left = build_M(n);
    DenseMatrix right = build_N(n);
    DenseMatrix hessenberg = mat_mul(mat_mul(left, circ_expand(sequence_circulant(SequenceKind::Pell, n))), right);
    check_hessenberg(hessenberg, shape);
    DenseMatrix block = mat_mul(hessenberg, column_op);
    check_equal(block, direct_sum(head, bidiagonal_pell(n)), "block");
    return {std::move(left), std::move(right), std::move(hessenberg), std::move(column_op),
            std::move(block)};
}

FactorizationBundle pell_lucas_bundle(std::size_t n) {
    const auto q = sequence_table(SequenceKind::PellLucas, n + 1);
    const auto s = pell_lucas_scalars(n);
    auto step = [&](std::size_t k) { return Rational(q[k + 1] - 3 * q[k]); };

    HessenbergShape shape{Rational(q[1]), s.u_prime, s.u, {}, {}, Rational(q[1] - q[n + 1]),
                          Rational(2 - q[n])};
    for (std::size_t j = 3; j <= n; ++j) {
        shape.top.emplace_back(q[n + 2 - j]);
        shape.second.push_back(step(n + 2 - j));
    }

    DenseMatrix column_op = DenseMatrix::identity(n);
    column_op(0, 1) = -s.u_prime / 2;
    for (std::size_t j = 3; j <= n; ++j) {
        const Rational t = step(n + 2 - j);
        column_op(0, j - 1) = s.u_prime * t / (Rational(2) * s.u) - Rational(q[n + 2 - j], 2);
        column_op(1, j - 1) = -t / s.u;
    }

    DenseMatrix head(2, 2);
    head(0, 0) = 2;
    head(1, 1) = s.u;

    DenseMatrix left = build_K(n);
    DenseMatrix right = build_L(n);
    DenseMatrix hessenberg =
        mat_mul(mat_mul(left, circ_expand(sequence_circulant(SequenceKind::PellLucas, n))), right);
    check_hessenberg(hessenberg, shape);
    DenseMatrix block = mat_mul(hessenberg, column_op);
    check_equal(block, direct_sum(head, bidiagonal_pell_lucas(n)), "block");
    return {std::move(left), std::move(right), std::move(hessenberg), std::move(column_op),
            std::move(block)};
}

}  // namespace

FactorizationBundle hessenberg_factorization(SequenceKind kind, std::size_t n) {
    if (n < 4) {
        throw DomainError("hessenberg_factorization requires n >= 4, got " + std::to_string(n));
    }
    return kind == SequenceKind::Pell ? pell_bundle(n) : pell_lucas_bundle(n);
}

}  // namespace pellcirc
