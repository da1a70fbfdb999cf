#include "pellcirc/linalg.hpp"

#include "pellcirc/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pellcirc {

namespace {

void require_square(const DenseMatrix& m, const char* what) {
    if (!m.is_square()) {
        throw ShapeError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
    }
}

}  // namespace

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("mat_mul: incompatible shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

Rational oracle_det(const DenseMatrix& m) {
    require_square(m, "oracle_det");
    const std::size_t n = m.rows();

    // det(m) = det(D m) / det(D) with D = diag(lcm of row denominators).
    std::vector<BigInteger> work(n * n);
    BigInteger scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInteger row_lcm = 1;
        for (const auto& x : m.row(i)) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m(i, j);
            work[i * n + j] = x.num() * (row_lcm / x.den());
        }
        scale *= row_lcm;
    }
    auto at = [&](std::size_t i, std::size_t j) -> BigInteger& { return work[i * n + j]; };

    int sign = 1;
    BigInteger prev_pivot = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && at(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) return Rational(0);
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInteger t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev_pivot = at(k, k);
    }
    BigInteger det = sign * at(n - 1, n - 1);
    return Rational(det, scale);
}

Rational oracle_det_rational(const DenseMatrix& m) {
    require_square(m, "oracle_det_rational");
    const std::size_t n = m.rows();
    DenseMatrix a = m;
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            a.swap_rows(p, k);
            det = -det;
        }
        det *= a(k, k);
        const Rational inv = a(k, k).reciprocal();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Rational factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

DenseMatrix oracle_inverse(const DenseMatrix& m) {
    require_square(m, "oracle_inverse");
    const std::size_t n = m.rows();
    DenseMatrix a = m;
    DenseMatrix inv = DenseMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw SingularMatrixError(k);
        a.swap_rows(p, k);
        inv.swap_rows(p, k);

        const Rational pivot_inv = a(k, k).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= pivot_inv;
            inv(k, j) *= pivot_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            const Rational factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace pellcirc
