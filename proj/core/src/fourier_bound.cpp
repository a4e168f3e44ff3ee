#include "cdgsym/fourier_bound.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "cdgsym/binary_expansion.hpp"
#include "cdgsym/errors.hpp"
#include "cdgsym/parallel.hpp"
#include "cdgsym/walk_laws.hpp"

namespace cdgsym {

double g_indicator(double x) {
    double frac = x - std::floor(x);
    return (frac >= 0.25 && frac < 0.75) ? 1.0 / 9.0 : 1.0;
}

std::vector<std::int64_t> shifted_exponents(const MultiplierSequence& seq) {
    const std::int64_t n = static_cast<std::int64_t>(seq.size()) + 1;
    std::vector<std::int64_t> exponents;
    exponents.reserve(static_cast<std::size_t>(n));
    std::int64_t w = 0;
    exponents.push_back(n);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        w += *it == StepChoice::Forward ? 1 : -1;
        exponents.push_back(n + w);
    }
    return exponents;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |E e^{2 pi i b t}|^2 for the increment law at t = res/p
double increment_char_sq(const std::vector<Increment>& increments, double t) {
    double re = 0.0, im = 0.0;
    for (const auto& inc : increments) {
        re += inc.weight * std::cos(kTwoPi * static_cast<double>(inc.value) * t);
        im += inc.weight * std::sin(kTwoPi * static_cast<double>(inc.value) * t);
    }
    return re * re + im * im;
}

std::vector<std::int64_t> exponent_residues(std::span<const std::int64_t> exponents,
                                            const Modulus& mod) {
    std::vector<std::int64_t> residues;
    residues.reserve(exponents.size());
    for (std::int64_t e : exponents) residues.push_back(mod.pow2(e));
    return residues;
}

}  // namespace

double conditional_dft_product(std::span<const std::int64_t> exponents, std::int64_t m,
                               const Modulus& mod) {
    if (exponents.empty()) throw std::invalid_argument("conditional_dft_product: no exponents");
    if (m < 0 || m >= mod.p) throw std::invalid_argument("conditional_dft_product: m out of range");
    const double p = static_cast<double>(mod.p);
    double prod = 1.0;
    for (std::int64_t e : exponents) {
        std::int64_t res = mod.mul(mod.pow2(e), m);
        prod *= 1.0 / 3.0 + (2.0 / 3.0) * std::cos(kTwoPi * static_cast<double>(res) / p);
    }
    return prod;
}

double conditional_ub_bound(const MultiplierSequence& seq, const ProcessParams& params,
                            int threads) {
    const Modulus& mod = params.modulus;
    auto exponents = shifted_exponents(seq);
    auto residues = exponent_residues(exponents, mod);
    const double p = static_cast<double>(mod.p);

    std::vector<double> terms(static_cast<std::size_t>(mod.p - 1), 0.0);
    parallel_for(mod.p - 1, threads, [&](std::int64_t i) {
        const std::int64_t m = i + 1;
        double prod = 1.0;
        for (std::int64_t rho : residues) {
            std::int64_t res = mod.mul(rho, m);
            prod *= increment_char_sq(params.increments, static_cast<double>(res) / p);
        }
        terms[static_cast<std::size_t>(i)] = prod;
    });
    return 0.25 * pairwise_sum(terms);
}

ClassifyThresholds default_thresholds(std::int64_t p, double beta) {
    double ll = std::log2(std::log2(static_cast<double>(p)));
    return {beta * ll, std::pow(ll, 2.1)};
}

FrequencyClass classify_frequency(std::int64_t m, const OccupationTable& occupation,
                                  std::int64_t n, ClassifyThresholds thresholds,
                                  const Modulus& mod) {
    FrequencyClass out{FrequencyClass::Tag::Unresolved, 0, {}};
    std::vector<std::pair<std::int64_t, std::int64_t>> band;
    for (const auto& stats : occupation.levels) {
        const std::int64_t ell = n + stats.level;
        if (!in_alternation_band(ell, m, mod)) continue;
        const double r = static_cast<double>(stats.revisits);
        if (r > thresholds.upper) {
            out.tag = FrequencyClass::Tag::S1;
            out.b = 0;
            out.witnesses = {{ell, stats.revisits}};
            return out;
        }
        if (r > thresholds.lower) band.push_back({ell, stats.revisits});
    }
    if (!band.empty()) {
        out.tag = FrequencyClass::Tag::S2;
        out.b = static_cast<std::int64_t>(band.size());
        out.witnesses = std::move(band);
    }
    return out;
}

FrequencyCensus frequency_census(const OccupationTable& occupation, std::int64_t n,
                                 ClassifyThresholds thresholds, const Modulus& mod, int threads) {
    // per-level band residues 2^{n+k} mod p, hoisted out of the m loop
    struct LevelResidue {
        std::int64_t residue;
        std::int64_t revisits;
    };
    std::vector<LevelResidue> lv;
    lv.reserve(occupation.levels.size());
    for (const auto& stats : occupation.levels) {
        lv.push_back({mod.pow2(n + stats.level), stats.revisits});
    }

    // tag encoding: -1 = S1, 0 = unresolved, b >= 1 = S2(b)
    std::vector<std::int32_t> tags(static_cast<std::size_t>(mod.p - 1), 0);
    parallel_for(mod.p - 1, threads, [&](std::int64_t i) {
        const std::int64_t m = i + 1;
        std::int32_t b = 0;
        for (const auto& level : lv) {
            if (!residue_in_band(mod.mul(level.residue, m), mod.p)) continue;
            const double r = static_cast<double>(level.revisits);
            if (r > thresholds.upper) {
                b = -1;
                break;
            }
            if (r > thresholds.lower) ++b;
        }
        tags[static_cast<std::size_t>(i)] = b;
    });

    FrequencyCensus census;
    std::map<std::int64_t, std::int64_t> by_b;
    for (std::int32_t tag : tags) {
        if (tag < 0) {
            ++census.s1_count;
        } else if (tag == 0) {
            ++census.unresolved_count;
        } else {
            ++by_b[tag];
        }
    }
    census.s2_counts.assign(by_b.begin(), by_b.end());
    return census;
}

AlternationCensus alternation_census(const Modulus& mod, std::int64_t start, std::int64_t length,
                                     double q, double beta, int threads) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("alternation_census: need 0 < q < 1");
    if (static_cast<double>(length) <= log2_of(mod.p)) {
        throw std::invalid_argument("alternation_census: window length must exceed log2 p");
    }

    std::vector<std::int32_t> counts(static_cast<std::size_t>(mod.p - 1), 0);
    parallel_for(mod.p - 1, threads, [&](std::int64_t i) {
        BinaryWindow w = binary_window(i + 1, mod, start, length);
        counts[static_cast<std::size_t>(i)] =
            static_cast<std::int32_t>(alternation_count(w).count);
    });

    AlternationCensus census;
    census.histogram.assign(static_cast<std::size_t>(length), 0);
    std::vector<double> weights(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        ++census.histogram[static_cast<std::size_t>(counts[i])];
        weights[i] = std::pow(q, beta * static_cast<double>(counts[i]));
    }
    census.weighted_sum = pairwise_sum(weights);

    const std::int64_t slots = length - 1;
    double majorant = 0.0;
    for (std::int64_t s = 1; s <= slots; ++s) {
        majorant += to_double(BigRat(binomial(slots, s))) * std::pow(q, beta * static_cast<double>(s));
    }
    census.majorant = 2.0 * majorant;

    if (census.weighted_sum > census.majorant * (1.0 + 1e-12) + 1e-300) {
        throw InvariantViolation("alternation census sum exceeds its majorant");
    }
    return census;
}

}  // namespace cdgsym
