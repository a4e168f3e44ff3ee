#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cdgsym/distribution.hpp"

namespace cdgsym {

/// One Fourier coefficient P^(k) = sum_j P(j) e^{2 pi i j k / p}.
/// |value| <= 1 for any probability; value at k = 0 is exactly 1.
struct FourierValue {
    std::int64_t frequency;
    std::complex<double> value;
};

FourierValue dft(const DistributionModP& d, std::int64_t k);

// |P^(k)|^2 for k = 0..p-1, by direct summation against a precomputed root
// table (O(p) per frequency). Real input gives conjugate symmetry, so only
// k <= p/2 is actually summed.
std::vector<double> power_spectrum(const DistributionModP& d);

// 1/4 sum_{k=1}^{p-1} |P^(k)|^2; TV(d, U)^2 never exceeds this.
double ub_lemma_bound(const DistributionModP& d);
double ub_lemma_bound(const std::vector<double>& spectrum);

// sum_k |P^(k)|^2 and p * sum_s P(s)^2, equal by Parseval
std::pair<double, double> parseval_sides(const DistributionModP& d);

}  // namespace cdgsym
