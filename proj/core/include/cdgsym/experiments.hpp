#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cdgsym/csv.hpp"
#include "cdgsym/fourier_bound.hpp"
#include "cdgsym/mixing_curve.hpp"
#include "cdgsym/process.hpp"

namespace cdgsym {

// Smallest n with TV(P_n, U) < epsilon. Doubling then bisection, both phases
// continuing the exact evolution from cached distributions, so total work
// stays O(n* p) and the answer is the true minimum (TV is non-increasing).
std::int64_t mixing_time(const ProcessParams& params, double epsilon);

struct ScalingRow {
    std::int64_t p;
    std::int64_t n_star;
    double log2p;
    double ratio_sq;      // n* / (log2 p)^2
    double ratio_loglog;  // n* / ((log2 p) log2 log2 p)
};

// One mixing-time row per grid modulus; grid points run in parallel, results
// ordered by input order.
std::vector<ScalingRow> scaling_experiment(std::span<const std::int64_t> p_grid, double epsilon,
                                           const std::function<ProcessParams(const Modulus&)>& make_params,
                                           int threads = 1);

struct LowerBoundResult {
    std::int64_t n;
    std::int64_t shift;       // s
    std::int64_t half_width;  // W
    double interval_mass;     // Q([-W, W]) for Q = law of 2^s X_n
    double tv_lower_bound;    // interval_mass - (2W+1)/p
    double exact_tv;          // TV(P_n, U) from the same evolution
};

// Multiplying X_n by 2^s clears the dyadic denominators of its coefficient
// expansion whenever the exponent walk stayed above -s, pinning the law into
// a short residue interval; the interval event lower-bounds TV.
LowerBoundResult lower_bound_check(const ProcessParams& params, std::int64_t n, std::int64_t s,
                                   std::int64_t half_width);

std::int64_t default_lower_bound_shift(std::int64_t p);       // ceil(0.25 log2 p)
std::int64_t default_lower_bound_steps(std::int64_t p);       // floor(0.05 (log2 p)^2)
std::int64_t default_lower_bound_half_width(std::int64_t p);  // ~0.05 sqrt(p) (log2 p)^2, capped

enum class SequenceKind { Alternating, AllForward, Random };

struct ConditionalReport {
    std::int64_t n;
    double tv;
    double ub_bound;  // quenched Upper-Bound-Lemma sum
    FrequencyCensus census;
    std::int64_t support_size;  // residues with positive conditional mass
};

// Quenched run for one multiplier sequence: exact conditional law, its TV,
// the product-form transform bound, and the frequency census of the walk.
ConditionalReport conditional_experiment(const ProcessParams& params, std::int64_t n,
                                         SequenceKind kind, std::uint64_t seed, double beta,
                                         int threads = 1);

struct CutoffReport {
    MixingCurve curve;  // down to TV < floor
    std::int64_t n_tv90;
    std::int64_t n_tv50;
    std::int64_t n_tv10;
    double normalized_width;  // (n(0.1) - n(0.9)) / n(0.5)
};

// Full profile for eyeballing cutoff behaviour; diagnostic only, nothing is
// asserted about the window scaling.
CutoffReport cutoff_profile(const ProcessParams& params, double tv_floor = 1e-3);

// CSV emitters (schemas documented in the README)
CsvTable curve_to_csv(const MixingCurve& curve);
CsvTable scaling_to_csv(std::span<const ScalingRow> rows);
CsvTable lower_bound_to_csv(std::int64_t p, const LowerBoundResult& r);
CsvTable conditional_to_csv(std::int64_t p, const ConditionalReport& r);
CsvTable frequency_census_to_csv(const FrequencyCensus& census);
CsvTable alternation_census_to_csv(const AlternationCensus& census);
CsvTable cutoff_to_csv(const CutoffReport& r);

}  // namespace cdgsym
