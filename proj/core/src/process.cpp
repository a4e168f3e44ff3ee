#include "cdgsym/process.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cdgsym/errors.hpp"
#include "cdgsym/parallel.hpp"
#include "cdgsym/rng.hpp"

namespace cdgsym {

ProcessParams ProcessParams::trinary(const Modulus& m, std::int64_t a, double q) {
    ProcessParams params{m, m.reduce(a), m.inverse(a), q,
                         {{1, 1.0 / 3.0}, {0, 1.0 / 3.0}, {-1, 1.0 / 3.0}}};
    params.validate();
    return params;
}

ProcessParams ProcessParams::binary(const Modulus& m, std::int64_t a, double q) {
    ProcessParams params{m, m.reduce(a), m.inverse(a), q, {{1, 0.5}, {-1, 0.5}}};
    params.validate();
    return params;
}

void ProcessParams::validate() const {
    if (multiplier < 2 || multiplier > modulus.p - 1) {
        throw std::invalid_argument("multiplier must lie in [2, p-1]");
    }
    if (modulus.mul(multiplier, multiplier_inverse) != 1) {
        throw std::invalid_argument("multiplier_inverse is not the inverse of multiplier");
    }
    if (!(forward_prob > 0.0) || forward_prob > 1.0) {
        throw std::invalid_argument("multiplier law must have forward_prob in (0, 1]");
    }
    if (increments.empty()) throw std::invalid_argument("empty increment set");
    double total = 0.0;
    for (const auto& inc : increments) {
        if (!(inc.weight > 0.0)) throw std::invalid_argument("increment weights must be positive");
        total += inc.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("increment weights must sum to 1");
    }
}

std::string ProcessParams::label() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "p=%lld a=%lld q=%g %s",
                  static_cast<long long>(modulus.p), static_cast<long long>(multiplier),
                  forward_prob, increments.size() == 2 ? "binary" : "trinary");
    return buf;
}

namespace {

// gather d at stride `mult`: out[s] += w * d[(mult * s) mod p]
void add_permuted(std::vector<double>& out, const std::vector<double>& d, std::int64_t p,
                  std::int64_t mult, double w) {
    std::int64_t idx = 0;
    for (std::int64_t s = 0; s < p; ++s) {
        out[static_cast<std::size_t>(s)] += w * d[static_cast<std::size_t>(idx)];
        idx += mult;
        if (idx >= p) idx -= p;
    }
}

// law of X + b for the whole increment set: out(s) = sum_b w_b d(s - b)
std::vector<double> convolve_increments(const std::vector<double>& d, const ProcessParams& params) {
    const std::int64_t p = params.modulus.p;
    std::vector<double> out(static_cast<std::size_t>(p), 0.0);
    for (const auto& inc : params.increments) {
        std::int64_t idx = params.modulus.reduce(-inc.value);
        for (std::int64_t s = 0; s < p; ++s) {
            out[static_cast<std::size_t>(s)] += inc.weight * d[static_cast<std::size_t>(idx)];
            if (++idx == p) idx = 0;
        }
    }
    return out;
}

std::vector<double> multiplier_mixture(const std::vector<double>& d, const ProcessParams& params) {
    const std::int64_t p = params.modulus.p;
    std::vector<double> mixed(static_cast<std::size_t>(p), 0.0);
    // law of a X at s is d(a^{-1} s); of a^{-1} X is d(a s)
    if (params.forward_prob > 0.0) {
        add_permuted(mixed, d, p, params.multiplier_inverse, params.forward_prob);
    }
    if (params.forward_prob < 1.0) {
        add_permuted(mixed, d, p, params.multiplier, 1.0 - params.forward_prob);
    }
    return mixed;
}

}  // namespace

DistributionModP step_exact(const DistributionModP& d, const ProcessParams& params) {
    if (!(d.modulus == params.modulus)) {
        throw std::invalid_argument("step_exact: distribution and params disagree on modulus");
    }
    return DistributionModP(d.modulus, convolve_increments(multiplier_mixture(d.mass, params), params));
}

DistributionModP fixed_multiplier_step(const DistributionModP& d, const ProcessParams& params,
                                       StepChoice choice) {
    if (!(d.modulus == params.modulus)) {
        throw std::invalid_argument("fixed_multiplier_step: modulus mismatch");
    }
    const std::int64_t p = params.modulus.p;
    std::vector<double> permuted(static_cast<std::size_t>(p), 0.0);
    const std::int64_t gather =
        choice == StepChoice::Forward ? params.multiplier_inverse : params.multiplier;
    add_permuted(permuted, d.mass, p, gather, 1.0);
    return DistributionModP(d.modulus, convolve_increments(permuted, params));
}

EvolveResult evolve_exact(const ProcessParams& params, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("evolve_exact: n must be >= 0");
    DistributionModP d = DistributionModP::point_mass(params.modulus, 0);
    MixingCurve curve{params.modulus.p, params.label(), {}};
    curve.append(0, tv_distance(d));
    for (std::int64_t step = 1; step <= n; ++step) {
        d = step_exact(d, params);
        d.validate();
        curve.append(step, tv_distance(d));
    }
    return {std::move(curve), std::move(d)};
}

DistributionModP conditional_evolve(const ProcessParams& params, const MultiplierSequence& seq) {
    DistributionModP d = DistributionModP::point_mass(params.modulus, 0);
    // first step: X_1 = b_0, no multiplier acts on X_0 = 0
    d = DistributionModP(params.modulus, convolve_increments(d.mass, params));
    for (StepChoice choice : seq) d = fixed_multiplier_step(d, params, choice);
    return d;
}

DistributionModP mixture_reconstruct(const ProcessParams& params, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mixture_reconstruct: n must be >= 1");
    if (n > 12) throw std::invalid_argument("mixture_reconstruct: n > 12 is not enumerable");
    const std::int64_t p = params.modulus.p;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    std::vector<double> acc(static_cast<std::size_t>(p), 0.0);
    MultiplierSequence seq(static_cast<std::size_t>(n - 1));
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        double weight = 1.0;
        for (std::int64_t i = 0; i < n - 1; ++i) {
            bool fwd = (mask >> i) & 1;
            seq[static_cast<std::size_t>(i)] = fwd ? StepChoice::Forward : StepChoice::Inverse;
            weight *= fwd ? params.forward_prob : 1.0 - params.forward_prob;
        }
        DistributionModP cond = conditional_evolve(params, seq);
        for (std::int64_t s = 0; s < p; ++s) {
            acc[static_cast<std::size_t>(s)] += weight * cond.mass[static_cast<std::size_t>(s)];
        }
    }
    return DistributionModP(params.modulus, std::move(acc));
}

namespace {

struct SamplerTables {
    // increment selection thresholds on a 63-bit and a 64-bit scale
    std::vector<std::uint64_t> cum63;
    std::vector<std::uint64_t> cum64;
    std::vector<std::int64_t> values;  // increments pre-reduced to [0, p)
    std::uint64_t forward64;           // threshold for the general multiplier law
    bool half_q;          // q == 1/2: single draw per step, top bit picks the multiplier
    bool always_forward;  // q == 1: the fixed-a comparison chain

    explicit SamplerTables(const ProcessParams& params) {
        half_q = params.forward_prob == 0.5;
        always_forward = params.forward_prob >= 1.0;
        // thresholds quantized at 53 bits then shifted; cum * 2^53 fits a double exactly
        forward64 =
            static_cast<std::uint64_t>(std::llround(params.forward_prob * 9007199254740992.0)) << 11;
        double cum = 0.0;
        for (const auto& inc : params.increments) {
            cum += inc.weight;
            double c = cum < 1.0 ? cum : 1.0;
            std::uint64_t q53 = static_cast<std::uint64_t>(std::llround(c * 9007199254740992.0));
            cum63.push_back(q53 << 10);
            cum64.push_back(q53 << 11);
            values.push_back(params.modulus.reduce(inc.value));
        }
        cum63.back() = std::uint64_t{1} << 63;
        cum64.back() = ~std::uint64_t{0};
    }

    std::int64_t pick(const std::vector<std::uint64_t>& cum, std::uint64_t u) const {
        std::size_t i = 0;
        while (i + 1 < cum.size() && u >= cum[i]) ++i;
        return values[i];
    }
};

// One trajectory; when `choices` is non-null the multiplier decisions are recorded.
std::int64_t run_trajectory(const ProcessParams& params, std::int64_t n, SplitMix64 rng,
                            const SamplerTables& tab, MultiplierSequence* choices) {
    const std::int64_t p = params.modulus.p;
    const std::int64_t a = params.multiplier;
    const std::int64_t inv = params.multiplier_inverse;
    std::int64_t x = 0;
    for (std::int64_t k = 0; k < n; ++k) {
        bool forward = true;
        std::uint64_t u;
        if (tab.half_q) {
            u = rng.next();
            if (k >= 1) forward = (u >> 63) != 0;
            u &= (std::uint64_t{1} << 63) - 1;
        } else {
            if (k >= 1 && !tab.always_forward) forward = rng.next() < tab.forward64;
            u = rng.next();
        }
        if (k >= 1) {
            if (forward) {
                if (a == 2) {
                    x += x;
                    if (x >= p) x -= p;
                } else {
                    x = (a * x) % p;
                }
            } else {
                if (a == 2) {
                    x = (x & 1) ? (x + p) >> 1 : x >> 1;
                } else {
                    x = (inv * x) % p;
                }
            }
            if (choices) {
                (*choices)[static_cast<std::size_t>(k - 1)] =
                    forward ? StepChoice::Forward : StepChoice::Inverse;
            }
        }
        x += tab.pick(tab.half_q ? tab.cum63 : tab.cum64, u);  // pre-reduced, so x < 2p
        if (x >= p) x -= p;
    }
    return x;
}

}  // namespace

Trajectory sample_trajectory(const ProcessParams& params, std::int64_t n, std::uint64_t seed,
                             std::uint64_t sample_index) {
    if (n < 0) throw std::invalid_argument("sample_trajectory: n must be >= 0");
    SamplerTables tab(params);
    Trajectory out;
    out.choices.assign(n > 0 ? static_cast<std::size_t>(n - 1) : 0, StepChoice::Forward);
    out.final_residue = run_trajectory(params, n, SplitMix64::stream(seed, sample_index), tab,
                                       n > 0 ? &out.choices : nullptr);
    return out;
}

DistributionModP empirical_distribution(const ProcessParams& params, std::int64_t n,
                                        std::int64_t num_samples, std::uint64_t seed, int threads) {
    if (num_samples <= 0) throw std::invalid_argument("empirical_distribution: need samples > 0");
    const std::int64_t p = params.modulus.p;
    SamplerTables tab(params);
    threads = resolve_threads(threads);

    std::vector<std::vector<std::int64_t>> counts(
        static_cast<std::size_t>(threads), std::vector<std::int64_t>(static_cast<std::size_t>(p), 0));
    std::vector<std::thread> pool;
    std::int64_t chunk = (num_samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::int64_t lo = t * chunk;
        std::int64_t hi = std::min(lo + chunk, num_samples);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] {
            auto& local = counts[static_cast<std::size_t>(t)];
            for (std::int64_t i = lo; i < hi; ++i) {
                std::int64_t r = run_trajectory(params, n, SplitMix64::stream(seed, static_cast<std::uint64_t>(i)),
                                                tab, nullptr);
                ++local[static_cast<std::size_t>(r)];
            }
        });
    }
    for (auto& th : pool) th.join();

    std::vector<double> mass(static_cast<std::size_t>(p), 0.0);
    const double inv_n = 1.0 / static_cast<double>(num_samples);
    for (std::int64_t s = 0; s < p; ++s) {
        std::int64_t c = 0;
        for (const auto& local : counts) c += local[static_cast<std::size_t>(s)];
        mass[static_cast<std::size_t>(s)] = static_cast<double>(c) * inv_n;
    }
    return DistributionModP(params.modulus, std::move(mass));
}

MultiplierSequence all_forward_sequence(std::int64_t length) {
    return MultiplierSequence(static_cast<std::size_t>(length), StepChoice::Forward);
}

MultiplierSequence alternating_sequence(std::int64_t length) {
    MultiplierSequence seq(static_cast<std::size_t>(length));
    // entry i holds a_{i+1}; count back from a_{length} = Forward
    for (std::int64_t i = 0; i < length; ++i) {
        seq[static_cast<std::size_t>(i)] =
            ((length - 1 - i) % 2 == 0) ? StepChoice::Forward : StepChoice::Inverse;
    }
    return seq;
}

MultiplierSequence random_sequence(std::int64_t length, std::uint64_t seed) {
    SplitMix64 rng = SplitMix64::stream(seed, 0);
    MultiplierSequence seq(static_cast<std::size_t>(length));
    for (auto& c : seq) c = rng.next_bit() ? StepChoice::Forward : StepChoice::Inverse;
    return seq;
}

}  // namespace cdgsym
