#pragma once

#include "pellcirc/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace pellcirc {

/// Row-major dense matrix of exact rationals. Always at least 1×1.
class DenseMatrix {
public:
    /// Zero matrix. Throws ShapeError if rows or cols is 0.
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Throws ShapeError if the rows are ragged or empty.
    DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::span<const Rational> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    std::span<const Rational> entries() const noexcept { return entries_; }

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
    friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

}  // namespace pellcirc
