#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>

namespace pellcirc {

using BigInteger = mpz_class;

/// Exact element a + b·√2 of the ring ℤ[√2].
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(BigInteger a, BigInteger b) : a_(std::move(a)), b_(std::move(b)) {}

    const BigInteger& a() const noexcept { return a_; }
    const BigInteger& b() const noexcept { return b_; }

    QuadInt conjugate() const { return {a_, -b_}; }

    /// a² − 2b², multiplicative over ℤ[√2].
    BigInteger norm() const { return a_ * a_ - 2 * b_ * b_; }

    QuadInt pow(std::uint64_t exponent) const;

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_};
    }
    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& x);

private:
    BigInteger a_{0};
    BigInteger b_{0};
};

}  // namespace pellcirc
