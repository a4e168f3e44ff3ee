#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdgsym/exponent_walk.hpp"
#include "cdgsym/modulus.hpp"
#include "cdgsym/process.hpp"

namespace cdgsym {

// Envelope dominating the squared trinary factor: 1/9 on [1/4, 3/4) of the
// fractional part, 1 elsewhere.
double g_indicator(double x);

// The coefficient of b_{n-1-j} in X_n is the j-step suffix product of the
// multipliers, i.e. 2^{w_j} for the walk built from the reversed sequence.
// Reindexing by 2^n makes every exponent nonnegative: e_j = n + w_j.
std::vector<std::int64_t> shifted_exponents(const MultiplierSequence& seq);

// prod_j (1/3 + 2/3 cos(2 pi (2^{e_j} mod p) m / p)): the transform of the
// 2^n-reindexed conditional law at frequency m. Equals the transform of the
// conditional law itself at frequency (2^n m) mod p.
double conditional_dft_product(std::span<const std::int64_t> exponents, std::int64_t m,
                               const Modulus& mod);

// 1/4 sum_{m=1}^{p-1} prod_j |phi_b((2^{e_j} mod p) m / p)|^2, where phi_b is
// the characteristic function of the increment law. TV(conditional, U)^2 never
// exceeds this.
double conditional_ub_bound(const MultiplierSequence& seq, const ProcessParams& params,
                            int threads = 1);

struct ClassifyThresholds {
    double lower;  // beta * log2 log2 p
    double upper;  // (log2 log2 p)^{2.1}
};

ClassifyThresholds default_thresholds(std::int64_t p, double beta);

/// Which part of the census sum a frequency m falls into, given the walk's
/// occupation counts. Witnesses record the (position, R) pairs that decided.
struct FrequencyClass {
    enum class Tag { S1, S2, Unresolved };
    Tag tag;
    std::int64_t b;  // band-level count for S2, else 0
    std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;
};

// S1 when some alternation-band position has R above thresholds.upper; else
// S2(b) with b = #{band positions with lower < R <= upper} when b >= 1; else
// Unresolved. Band positions are l = n + k for occupied walk levels k.
FrequencyClass classify_frequency(std::int64_t m, const OccupationTable& occupation,
                                  std::int64_t n, ClassifyThresholds thresholds,
                                  const Modulus& mod);

struct FrequencyCensus {
    std::int64_t s1_count = 0;
    std::int64_t unresolved_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> s2_counts;  // (b, #m), ascending b
};

FrequencyCensus frequency_census(const OccupationTable& occupation, std::int64_t n,
                                 ClassifyThresholds thresholds, const Modulus& mod,
                                 int threads = 1);

struct AlternationCensus {
    std::vector<std::int64_t> histogram;  // histogram[s] = #{m : A(B_m) = s}
    double weighted_sum;                  // sum_m q^{beta A(B_m)}
    double majorant;                      // 2 sum_{s=1}^{L-1} C(L-1, s) q^{beta s}
};

// Census of alternation counts over windows of the given length starting at
// `start`, for every m in [1, p-1]. Requires length > log2 p (below that the
// windows need not determine m) and checks weighted_sum <= majorant.
AlternationCensus alternation_census(const Modulus& mod, std::int64_t start, std::int64_t length,
                                     double q, double beta, int threads = 1);

}  // namespace cdgsym
