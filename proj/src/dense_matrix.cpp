#include "pellcirc/dense_matrix.hpp"

#include "pellcirc/errors.hpp"

#include <algorithm>

namespace pellcirc {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(entries_.begin() + a * cols_, entries_.begin() + (a + 1) * cols_,
                     entries_.begin() + b * cols_);
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "]\n";
    }
    return os;
}

}  // namespace pellcirc
