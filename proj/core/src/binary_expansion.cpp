#include "cdgsym/binary_expansion.hpp"

#include <stdexcept>

namespace cdgsym {

BinaryWindow binary_window(std::int64_t m, const Modulus& mod, std::int64_t start,
                           std::int64_t length) {
    if (m < 1 || m > mod.p - 1) throw std::invalid_argument("binary_window: m out of [1, p-1]");
    if (start < 0) throw std::invalid_argument("binary_window: start must be >= 0");
    if (length < 1) throw std::invalid_argument("binary_window: length must be >= 1");
    BinaryWindow w{m, mod.p, start, {}};
    w.digits.reserve(static_cast<std::size_t>(length));
    // r = (2^{start+i} m) mod p; digit = [2r >= p] = leading bit of {2^{start+i} m/p}
    std::int64_t r = mod.mul(mod.pow2(start), m);
    for (std::int64_t i = 0; i < length; ++i) {
        w.digits.push_back(2 * r >= mod.p ? 1 : 0);
        r *= 2;
        if (r >= mod.p) r -= mod.p;
    }
    return w;
}

AlternationProfile alternation_count(const BinaryWindow& w) {
    if (w.digits.size() < 2) throw std::invalid_argument("alternation_count: window shorter than 2");
    AlternationProfile profile{0, {}};
    for (std::size_t i = 0; i + 1 < w.digits.size(); ++i) {
        if (w.digits[i] != w.digits[i + 1]) {
            ++profile.count;
            profile.positions.push_back(static_cast<std::int64_t>(i));
        }
    }
    return profile;
}

bool residue_in_band(std::int64_t residue, std::int64_t p) {
    return p <= 4 * residue && 4 * residue < 3 * p;
}

bool in_alternation_band(std::int64_t ell, std::int64_t m, const Modulus& mod) {
    return residue_in_band(mod.mul(mod.pow2(ell), m), mod.p);
}

}  // namespace cdgsym
