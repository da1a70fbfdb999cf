#include "pellcirc/quad_int.hpp"

namespace pellcirc {

QuadInt QuadInt::pow(std::uint64_t exponent) const {
    QuadInt result{1, 0};
    QuadInt base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << "(" << x.a_.get_str() << ", " << x.b_.get_str() << ")";
}

}  // namespace pellcirc
