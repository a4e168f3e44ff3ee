#include "cdgsym/modulus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cdgsym {

Modulus::Modulus(std::int64_t p_value) : p(p_value), inv2((p_value + 1) / 2) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("modulus must be odd and >= 3, got " + std::to_string(p));
    }
    if (p > (std::int64_t{1} << 31)) {
        throw std::invalid_argument("modulus too large for 64-bit products");
    }
}

std::int64_t Modulus::pow(std::int64_t base, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    std::int64_t acc = 1, b = reduce(base);
    while (e > 0) {
        if (e & 1) acc = (acc * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return acc;
}

std::int64_t Modulus::pow2(std::int64_t e) const {
    return e >= 0 ? pow(2, e) : pow(inv2, -e);
}

std::int64_t Modulus::inverse(std::int64_t a) const {
    std::int64_t r0 = p, r1 = reduce(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) {
        throw std::invalid_argument("inverse: " + std::to_string(a) + " is not a unit mod " +
                                    std::to_string(p));
    }
    return reduce(t0);
}

double log2_of(std::int64_t p) { return std::log2(static_cast<double>(p)); }

}  // namespace cdgsym
