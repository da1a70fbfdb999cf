#include "pellcirc/circulant.hpp"

#include "pellcirc/errors.hpp"

#include <numbers>

namespace pellcirc {

Circulant::Circulant(std::vector<Rational> first_row) : first_row_(std::move(first_row)) {
    if (first_row_.empty()) throw DomainError("circulant needs at least one entry");
}

Circulant Circulant::from_integers(const std::vector<BigInteger>& first_row) {
    return Circulant(std::vector<Rational>(first_row.begin(), first_row.end()));
}

DenseMatrix circ_expand(const Circulant& c) {
    const std::size_t n = c.order();
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c.first_row()[(j + n - i) % n];
    return m;
}

bool is_circulant(const DenseMatrix& m) {
    if (!m.is_square()) throw ShapeError("is_circulant: matrix is not square");
    const std::size_t n = m.rows();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) != m(i - 1, (j + n - 1) % n)) return false;
    return true;
}

Circulant circ_from_matrix(const DenseMatrix& m) {
    if (!is_circulant(m)) throw ShapeError("circ_from_matrix: matrix is not circulant");
    auto row = m.row(0);
    return Circulant(std::vector<Rational>(row.begin(), row.end()));
}

std::vector<ComplexValue> circ_eigenvalues(const Circulant& c) {
    const std::size_t n = c.order();
    std::vector<double> coeffs;
    coeffs.reserve(n);
    for (const auto& x : c.first_row()) coeffs.push_back(x.to_double());

    std::vector<ComplexValue> lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
        ComplexValue sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            // Reduce jk mod n before forming the angle to keep it small.
            const double angle = 2.0 * std::numbers::pi * double((j * k) % n) / double(n);
            sum += coeffs[k] * std::polar(1.0, angle);
        }
        lambda[j] = sum;
    }
    return lambda;
}

ComplexValue circ_det_via_eigen(const Circulant& c) {
    ComplexValue det = 1.0;
    for (const auto& lambda : circ_eigenvalues(c)) det *= lambda;
    return det;
}

}  // namespace pellcirc
