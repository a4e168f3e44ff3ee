#include "cdgsym/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cdgsym/parallel.hpp"

namespace cdgsym {

namespace {

std::vector<std::complex<double>> root_table(std::int64_t p) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(p));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(p);
    for (std::int64_t t = 0; t < p; ++t) {
        roots[static_cast<std::size_t>(t)] =
            {std::cos(step * static_cast<double>(t)), std::sin(step * static_cast<double>(t))};
    }
    return roots;
}

// sum_j mass[j] * roots[(j*k) mod p], index advanced additively
std::complex<double> dft_with_roots(const std::vector<double>& mass,
                                    const std::vector<std::complex<double>>& roots,
                                    std::int64_t p, std::int64_t k) {
    double re = 0.0, im = 0.0;
    std::int64_t idx = 0;
    for (std::int64_t j = 0; j < p; ++j) {
        const std::complex<double>& w = roots[static_cast<std::size_t>(idx)];
        const double m = mass[static_cast<std::size_t>(j)];
        re += m * w.real();
        im += m * w.imag();
        idx += k;
        if (idx >= p) idx -= p;
    }
    return {re, im};
}

}  // namespace

FourierValue dft(const DistributionModP& d, std::int64_t k) {
    const std::int64_t p = d.p();
    if (k < 0 || k >= p) throw std::invalid_argument("dft: frequency out of range");
    auto roots = root_table(p);
    return {k, dft_with_roots(d.mass, roots, p, k)};
}

std::vector<double> power_spectrum(const DistributionModP& d) {
    const std::int64_t p = d.p();
    auto roots = root_table(p);
    std::vector<double> spec(static_cast<std::size_t>(p), 0.0);
    const std::int64_t half = p / 2;
    for (std::int64_t k = 0; k <= half; ++k) {
        auto v = dft_with_roots(d.mass, roots, p, k);
        double sq = std::norm(v);
        spec[static_cast<std::size_t>(k)] = sq;
        if (k != 0) spec[static_cast<std::size_t>(p - k)] = sq;  // real input: conjugate pair
    }
    return spec;
}

double ub_lemma_bound(const std::vector<double>& spectrum) {
    double acc = 0.0;
    for (std::size_t k = 1; k < spectrum.size(); ++k) acc += spectrum[k];
    return 0.25 * acc;
}

double ub_lemma_bound(const DistributionModP& d) { return ub_lemma_bound(power_spectrum(d)); }

std::pair<double, double> parseval_sides(const DistributionModP& d) {
    auto spec = power_spectrum(d);
    double lhs = 0.0;
    for (double s : spec) lhs += s;
    double sq = 0.0;
    for (double x : d.mass) sq += x * x;
    return {lhs, static_cast<double>(d.p()) * sq};
}

}  // namespace cdgsym
