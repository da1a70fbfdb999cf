#pragma once

#include "pellcirc/dense_matrix.hpp"

#include <complex>
#include <vector>

namespace pellcirc {

using ComplexValue = std::complex<double>;

/// Circulant matrix determined by its first row c_0, ..., c_{n-1}. Row i of the
/// expansion is row i-1 shifted cyclically one place to the right.
class Circulant {
public:
    /// Throws DomainError on an empty row.
    explicit Circulant(std::vector<Rational> first_row);

    static Circulant from_integers(const std::vector<BigInteger>& first_row);

    std::size_t order() const noexcept { return first_row_.size(); }
    const std::vector<Rational>& first_row() const noexcept { return first_row_; }

    friend bool operator==(const Circulant&, const Circulant&) = default;

private:
    std::vector<Rational> first_row_;
};

/// Entry (i, j) = first_row[(j - i) mod n].
DenseMatrix circ_expand(const Circulant& c);

/// Reads the first row back. Throws ShapeError unless is_circulant(m).
Circulant circ_from_matrix(const DenseMatrix& m);

/// λ_j = Σ_k c_k ω^{jk}, ω = exp(2πi/n), by direct O(n²) summation.
/// Throws RangeError if an entry does not fit in a double.
std::vector<ComplexValue> circ_eigenvalues(const Circulant& c);

/// Product of circ_eigenvalues. Floating-point cross-check only.
ComplexValue circ_det_via_eigen(const Circulant& c);

/// Exact test that every row is the cyclic right-shift of the previous one.
/// Throws ShapeError for non-square input.
bool is_circulant(const DenseMatrix& m);

}  // namespace pellcirc
