#include "cdgsym/walk_laws.hpp"

#include <stdexcept>

namespace cdgsym {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact: prefix products of consecutive integers
    }
    return acc;
}

namespace {

// C(j, (j+l)/2) 2^{-j}, zero unless (j+l)/2 is an integer in [0, j]
BigRat reflection_term(std::int64_t j, std::int64_t l) {
    if ((j + l) % 2 != 0) return 0;
    std::int64_t half = (j + l) / 2;
    if (half < 0 || half > j) return 0;
    return BigRat(binomial(j, half), BigInt(1) << j);
}

}  // namespace

BigRat max_law(std::int64_t j, std::int64_t level) {
    if (j < 0) throw std::invalid_argument("max_law: j must be >= 0");
    if (level < 0 || level > j) return 0;
    return reflection_term(j, level) + reflection_term(j, level + 1);
}

BigRat returns_law(std::int64_t r, std::int64_t two_n) {
    if (two_n < 0 || two_n % 2 != 0) throw std::invalid_argument("returns_law: need even two_n >= 0");
    if (r < 0) throw std::invalid_argument("returns_law: r must be >= 0");
    std::int64_t n = two_n / 2;
    if (r > n) return 0;
    return BigRat(binomial(two_n - r, n), BigInt(1) << (two_n - r));
}

double to_double(const BigRat& x) { return x.convert_to<double>(); }

}  // namespace cdgsym
