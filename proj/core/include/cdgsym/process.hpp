#pragma once

#include <cstdint>
#include <vector>

#include "cdgsym/distribution.hpp"
#include "cdgsym/mixing_curve.hpp"
#include "cdgsym/modulus.hpp"

namespace cdgsym {

// One multiplier choice: Forward multiplies by a, Inverse by a^{-1}.
enum class StepChoice : std::uint8_t { Forward, Inverse };

// Realization of the multipliers a_1 .. a_{n-1}; a_0 is never sampled since it
// acts on X_0 = 0.
using MultiplierSequence = std::vector<StepChoice>;

struct Increment {
    std::int64_t value;
    double weight;
};

/// Step law of X_{n+1} = a_n X_n + b_n (mod p): a_n is `multiplier` with
/// probability forward_prob, its inverse otherwise; b_n is drawn from
/// `increments`. Multiplier and increment are independent.
struct ProcessParams {
    Modulus modulus;
    std::int64_t multiplier;
    std::int64_t multiplier_inverse;
    double forward_prob;
    std::vector<Increment> increments;

    // b uniform on {1, 0, -1}
    static ProcessParams trinary(const Modulus& m, std::int64_t a = 2, double q = 0.5);
    // b uniform on {1, -1}
    static ProcessParams binary(const Modulus& m, std::int64_t a = 2, double q = 0.5);

    void validate() const;  // throws std::invalid_argument
    std::string label() const;
};

// One annealed step: d'(s) = sum_{a,b} w_a w_b d(a^{-1}(s-b)). Mass is
// preserved and uniform is a fixed point.
DistributionModP step_exact(const DistributionModP& d, const ProcessParams& params);

// One quenched step with a fixed multiplier choice.
DistributionModP fixed_multiplier_step(const DistributionModP& d, const ProcessParams& params,
                                       StepChoice choice);

struct EvolveResult {
    MixingCurve curve;  // includes the n = 0 point
    DistributionModP final_dist;
};

// n annealed steps from the point mass at 0, TV recorded after every step.
EvolveResult evolve_exact(const ProcessParams& params, std::int64_t n);

// Exact law of X_n given the multipliers: seq has length n-1 for an n-step
// conditional (the first step contributes only b_0).
DistributionModP conditional_evolve(const ProcessParams& params, const MultiplierSequence& seq);

// Average of all 2^{n-1} conditionals, weighted by the multiplier law.
// Test oracle for the mixture identity; requires n <= 12.
DistributionModP mixture_reconstruct(const ProcessParams& params, std::int64_t n);

struct Trajectory {
    std::int64_t final_residue;
    MultiplierSequence choices;
};

// Monte Carlo realization. Sample `sample_index` of a sweep is a pure function
// of (seed, sample_index, n, params): bit-identical across platforms/threads.
Trajectory sample_trajectory(const ProcessParams& params, std::int64_t n, std::uint64_t seed,
                             std::uint64_t sample_index = 0);

// Histogram of num_samples trajectories, normalized. Integer counts are merged
// across threads, so the result does not depend on the thread count.
DistributionModP empirical_distribution(const ProcessParams& params, std::int64_t n,
                                        std::int64_t num_samples, std::uint64_t seed,
                                        int threads = 0);

// Canonical sequences for the conditional experiments.
MultiplierSequence all_forward_sequence(std::int64_t length);
// a_{n-1} = Forward, a_{n-2} = Inverse, ... (alternating from the last step
// backwards), which pins X_n to 2*(b_{n-2}+b_{n-4}+...) + (b_{n-1}+b_{n-3}+...).
MultiplierSequence alternating_sequence(std::int64_t length);
MultiplierSequence random_sequence(std::int64_t length, std::uint64_t seed);

}  // namespace cdgsym
