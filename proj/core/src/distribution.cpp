#include "cdgsym/distribution.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cdgsym/errors.hpp"

namespace cdgsym {

DistributionModP::DistributionModP(Modulus m, std::vector<double> values)
    : modulus(m), mass(std::move(values)) {
    if (mass.size() != static_cast<std::size_t>(modulus.p)) {
        throw std::invalid_argument("distribution length does not match modulus");
    }
}

DistributionModP DistributionModP::point_mass(const Modulus& m, std::int64_t site) {
    std::vector<double> v(static_cast<std::size_t>(m.p), 0.0);
    v[static_cast<std::size_t>(m.reduce(site))] = 1.0;
    return DistributionModP(m, std::move(v));
}

DistributionModP DistributionModP::uniform(const Modulus& m) {
    return DistributionModP(m,
        std::vector<double>(static_cast<std::size_t>(m.p), 1.0 / static_cast<double>(m.p)));
}

void DistributionModP::validate() const {
    double sum = 0.0;
    for (double x : mass) {
        if (x < -1e-12) {
            throw InvariantViolation("distribution entry below -1e-12: " + std::to_string(x));
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw InvariantViolation("distribution mass " + std::to_string(sum) + " not within 1e-9 of 1");
    }
}

double tv_distance(const DistributionModP& d) {
    const double u = 1.0 / static_cast<double>(d.p());
    double acc = 0.0;
    for (double x : d.mass) acc += std::abs(x - u);
    return 0.5 * acc;
}

double tv_subset_oracle(const DistributionModP& d) {
    const std::int64_t p = d.p();
    if (p > 20) throw std::invalid_argument("tv_subset_oracle: p > 20 is not enumerable");
    const double u = 1.0 / static_cast<double>(p);
    double best = 0.0;
    const std::uint64_t limit = std::uint64_t{1} << p;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        double diff = 0.0;
        for (std::int64_t s = 0; s < p; ++s) {
            if (mask >> s & 1) diff += d.mass[static_cast<std::size_t>(s)] - u;
        }
        double a = std::abs(diff);
        if (a > best) best = a;
    }
    return best;
}

}  // namespace cdgsym
