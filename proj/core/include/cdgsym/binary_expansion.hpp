#pragma once

#include <cstdint>
#include <vector>

#include "cdgsym/modulus.hpp"

namespace cdgsym {

/// Consecutive binary digits of m/p. Digit i is the leading bit of the
/// fractional part {2^{start+i} m/p}, i.e. 1 iff that fractional part is
/// >= 1/2. Computed with integer arithmetic only, so arbitrary start offsets
/// are exact.
struct BinaryWindow {
    std::int64_t m;
    std::int64_t p;
    std::int64_t start;
    std::vector<std::uint8_t> digits;
};

struct AlternationProfile {
    std::int64_t count;
    std::vector<std::int64_t> positions;  // indices i with digit i != digit i+1
};

BinaryWindow binary_window(std::int64_t m, const Modulus& mod, std::int64_t start,
                           std::int64_t length);

AlternationProfile alternation_count(const BinaryWindow& w);

// The position-l factor of the Fourier product is small exactly when
// 1/4 <= {2^l m / p} < 3/4, i.e. p <= 4 (2^l m mod p) < 3p.
bool in_alternation_band(std::int64_t ell, std::int64_t m, const Modulus& mod);
bool residue_in_band(std::int64_t residue, std::int64_t p);

}  // namespace cdgsym
