#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pellcirc {

// Argument outside the range a formula is stated for (e.g. n < 3).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Incompatible or non-square matrix shapes.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A value that does not fit in a double.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t pivot)
        : std::runtime_error("matrix is singular: no nonzero pivot in column " +
                             std::to_string(pivot)),
          pivot_(pivot) {}

    // 0-based column where rank deficiency was detected.
    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

// A structural identity that must hold by construction failed. Indicates a bug.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pellcirc
