#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdgsym {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);

// P(M_j = level) for the j-step walk maximum: p_{j,l} + p_{j,l+1} with
// p_{j,l} = C(j, (j+l)/2) 2^{-j}, the binomial read as 0 when (j+l)/2 is not
// an integer in [0, j]. Zero for level < 0 or level > j.
BigRat max_law(std::int64_t j, std::int64_t level);

// z_{r,2n} = 2^{-(2n-r)} C(2n-r, n): probability of exactly r returns to the
// origin in the first 2n steps. Zero for r > n; throws on odd two_n.
BigRat returns_law(std::int64_t r, std::int64_t two_n);

double to_double(const BigRat& x);

}  // namespace cdgsym
