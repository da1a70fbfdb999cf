#include "pellcirc/rational.hpp"

#include "pellcirc/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace pellcirc {

Rational::Rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::abs() const { return Rational(FromMpq{}, mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(FromMpq{}, mpq_class(value_.get_den(), value_.get_num()));
}

Rational Rational::pow(std::uint64_t exponent) const {
    if (exponent == 0) return Rational(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime; the sign is carried by num.
    mpq_class result;
    result.get_num() = num;
    result.get_den() = den;
    Rational r;
    r.value_ = std::move(result);
    return r;
}

double Rational::to_double() const {
    static const mpq_class limit = mpq_class(mpz_class("1" + std::string(300, '0')));
    if (::abs(value_) >= limit) throw RangeError("rational magnitude exceeds 1e300");
    return value_.get_d();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(FromMpq{}, mpq_class(-value_)); }

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInteger(text));
        return Rational(BigInteger(text.substr(0, slash)), BigInteger(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

}  // namespace pellcirc
