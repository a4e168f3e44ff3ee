#pragma once

#include <cstdint>
#include <vector>

#include "cdgsym/modulus.hpp"

namespace cdgsym {

/// Dense probability vector over the residues 0..p-1.
/// Valid when every entry >= -1e-12 and the total mass is within 1e-9 of 1.
struct DistributionModP {
    Modulus modulus;
    std::vector<double> mass;

    DistributionModP(Modulus m, std::vector<double> values);

    static DistributionModP point_mass(const Modulus& m, std::int64_t site);
    static DistributionModP uniform(const Modulus& m);

    std::int64_t p() const { return modulus.p; }
    double operator[](std::int64_t s) const { return mass[static_cast<std::size_t>(s)]; }

    // throws InvariantViolation when negativity/normalization tolerances are broken
    void validate() const;
};

// 1/2 sum_s |d(s) - 1/p|
double tv_distance(const DistributionModP& d);

// max over all 2^p subsets A of |P(A) - |A|/p|. Test oracle; requires p <= 20.
double tv_subset_oracle(const DistributionModP& d);

}  // namespace cdgsym
