#pragma once

#include <cstdint>

namespace cdgsym {

/// Odd modulus p >= 3 together with the inverse of 2, which is (p+1)/2.
/// All residues are kept in canonical form [0, p-1]; signed values are
/// reduced on entry.
struct Modulus {
    std::int64_t p;
    std::int64_t inv2;

    explicit Modulus(std::int64_t p_value);

    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % p;
        return r < 0 ? r + p : r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return (reduce(a) * reduce(b)) % p;  // p < 2^31, no overflow
    }

    // b^e mod p, e >= 0
    std::int64_t pow(std::int64_t base, std::int64_t e) const;

    // 2^e mod p; negative e means powers of inv2
    std::int64_t pow2(std::int64_t e) const;

    // multiplicative inverse via extended Euclid; requires gcd(a, p) = 1
    std::int64_t inverse(std::int64_t a) const;

    bool operator==(const Modulus& other) const { return p == other.p; }
};

// log base 2 of p as a double; the artifact measures everything in bits
double log2_of(std::int64_t p);

}  // namespace cdgsym
