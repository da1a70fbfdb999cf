#pragma once

#include "pellcirc/quad_int.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace pellcirc {

/// Exact fraction in lowest terms with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInteger& value) : value_(value) {}
    /// Throws std::domain_error when den == 0.
    Rational(const BigInteger& num, const BigInteger& den);

    BigInteger num() const { return value_.get_num(); }
    BigInteger den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    /// Throws std::domain_error on zero.
    Rational reciprocal() const;
    Rational pow(std::uint64_t exponent) const;

    /// Throws RangeError when the magnitude is 1e300 or more.
    double to_double() const;

    /// "num/den"; integers render without the denominator.
    std::string to_string() const;
    /// Always "num/den", sign on the numerator.
    std::string to_fraction_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
    Rational operator-() const;

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.value_, y.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct FromMpq {};
    Rational(FromMpq, mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_{0};
};

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

}  // namespace pellcirc
