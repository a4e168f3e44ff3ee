#include "cdgsym/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdgsym/errors.hpp"
#include "cdgsym/exponent_walk.hpp"
#include "cdgsym/parallel.hpp"

namespace cdgsym {

namespace {

// advance d by `count` annealed steps
void advance(DistributionModP& d, const ProcessParams& params, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) d = step_exact(d, params);
}

}  // namespace

std::int64_t mixing_time(const ProcessParams& params, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("mixing_time: epsilon must lie in (0, 1)");
    }
    DistributionModP d = DistributionModP::point_mass(params.modulus, 0);
    if (tv_distance(d) < epsilon) return 0;

    // doubling: keep the last distribution with TV >= epsilon
    std::int64_t lo = 0;
    std::int64_t hi = 1;
    DistributionModP at_lo = d;
    advance(d, params, 1);
    while (tv_distance(d) >= epsilon) {
        lo = hi;
        at_lo = d;
        advance(d, params, hi);  // step from n = hi to n = 2 hi
        hi *= 2;
        if (hi > (std::int64_t{1} << 40)) {
            throw InvariantViolation("mixing_time: TV failed to drop below epsilon");
        }
    }
    // bisect (lo has TV >= epsilon, hi has TV < epsilon), re-stepping from lo
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        DistributionModP probe = at_lo;
        advance(probe, params, mid - lo);
        if (tv_distance(probe) >= epsilon) {
            lo = mid;
            at_lo = std::move(probe);
        } else {
            hi = mid;
        }
    }
    return hi;
}

std::vector<ScalingRow> scaling_experiment(std::span<const std::int64_t> p_grid, double epsilon,
                                           const std::function<ProcessParams(const Modulus&)>& make_params,
                                           int threads) {
    std::vector<ScalingRow> rows(p_grid.size());
    parallel_for(static_cast<std::int64_t>(p_grid.size()), threads, [&](std::int64_t i) {
        const std::int64_t p = p_grid[static_cast<std::size_t>(i)];
        Modulus mod(p);
        std::int64_t n_star = mixing_time(make_params(mod), epsilon);
        const double l = log2_of(p);
        rows[static_cast<std::size_t>(i)] = {p, n_star, l,
                                             static_cast<double>(n_star) / (l * l),
                                             static_cast<double>(n_star) / (l * std::log2(l))};
    });
    return rows;
}

std::int64_t default_lower_bound_shift(std::int64_t p) {
    return static_cast<std::int64_t>(std::ceil(0.25 * log2_of(p)));
}

std::int64_t default_lower_bound_steps(std::int64_t p) {
    const double l = log2_of(p);
    return static_cast<std::int64_t>(std::floor(0.05 * l * l));
}

std::int64_t default_lower_bound_half_width(std::int64_t p) {
    const double l = log2_of(p);
    auto w = static_cast<std::int64_t>(std::ceil(0.05 * std::sqrt(static_cast<double>(p)) * l * l));
    const std::int64_t cap = p / 4;
    return std::min(w, cap > 1 ? cap - 1 : 1);
}

LowerBoundResult lower_bound_check(const ProcessParams& params, std::int64_t n, std::int64_t s,
                                   std::int64_t half_width) {
    const std::int64_t p = params.modulus.p;
    if (half_width < 0 || 2 * half_width >= p) {
        throw std::invalid_argument("lower_bound_check: need 0 <= W < p/2");
    }
    if (s < 0 || n < 0) throw std::invalid_argument("lower_bound_check: need n, s >= 0");

    EvolveResult evolved = evolve_exact(params, n);
    const DistributionModP& dist = evolved.final_dist;

    // Q([-W, W]) for Q = law of 2^s X_n: Q(r) = P_n(2^{-s} r)
    const std::int64_t back = params.modulus.pow2(-s);
    double mass = 0.0;
    for (std::int64_t r = -half_width; r <= half_width; ++r) {
        mass += dist[params.modulus.mul(back, params.modulus.reduce(r))];
    }
    const double uniform_mass =
        static_cast<double>(2 * half_width + 1) / static_cast<double>(p);
    LowerBoundResult result{n, s, half_width, mass, mass - uniform_mass, evolved.curve.final_tv()};
    if (result.tv_lower_bound > result.exact_tv + 1e-12) {
        throw InvariantViolation("interval bound exceeded exact TV");
    }
    return result;
}

ConditionalReport conditional_experiment(const ProcessParams& params, std::int64_t n,
                                         SequenceKind kind, std::uint64_t seed, double beta,
                                         int threads) {
    if (n < 2) throw std::invalid_argument("conditional_experiment: need n >= 2");
    MultiplierSequence seq;
    switch (kind) {
        case SequenceKind::Alternating: seq = alternating_sequence(n - 1); break;
        case SequenceKind::AllForward: seq = all_forward_sequence(n - 1); break;
        case SequenceKind::Random: seq = random_sequence(n - 1, seed); break;
    }

    DistributionModP cond = conditional_evolve(params, seq);
    ConditionalReport report;
    report.n = n;
    report.tv = tv_distance(cond);
    report.ub_bound = conditional_ub_bound(seq, params, threads);
    report.support_size = static_cast<std::int64_t>(
        std::count_if(cond.mass.begin(), cond.mass.end(), [](double x) { return x > 0.0; }));

    const double l = log2_of(params.modulus.p);
    const auto window = static_cast<std::int64_t>(std::floor(l * l));
    MultiplierSequence reversed(seq.rbegin(), seq.rend());
    OccupationTable table = occupation_counts(to_exponent_path(reversed), std::max<std::int64_t>(window, 1));
    report.census = frequency_census(table, n, default_thresholds(params.modulus.p, beta),
                                     params.modulus, threads);
    return report;
}

namespace {

CutoffReport cutoffs_from_curve(MixingCurve&& curve) {
    auto first_below = [&curve](double threshold) {
        for (const auto& pt : curve.points) {
            if (pt.tv < threshold) return pt.n;
        }
        return curve.points.back().n;
    };
    CutoffReport report;
    report.n_tv90 = first_below(0.9);
    report.n_tv50 = first_below(0.5);
    report.n_tv10 = first_below(0.1);
    report.normalized_width = report.n_tv50 > 0
        ? static_cast<double>(report.n_tv10 - report.n_tv90) / static_cast<double>(report.n_tv50)
        : 0.0;
    report.curve = std::move(curve);
    return report;
}

}  // namespace

CutoffReport cutoff_profile(const ProcessParams& params, double tv_floor) {
    if (!(tv_floor > 0.0)) throw std::invalid_argument("cutoff_profile: tv_floor must be positive");
    DistributionModP d = DistributionModP::point_mass(params.modulus, 0);
    MixingCurve curve{params.modulus.p, params.label(), {}};
    curve.append(0, tv_distance(d));
    std::int64_t n = 0;
    while (curve.points.back().tv >= tv_floor) {
        d = step_exact(d, params);
        curve.append(++n, tv_distance(d));
        if (n > (std::int64_t{1} << 40)) {
            throw InvariantViolation("cutoff_profile: TV failed to reach the floor");
        }
    }
    return cutoffs_from_curve(std::move(curve));
}

CsvTable curve_to_csv(const MixingCurve& curve) {
    CsvTable t;
    t.header = {"n", "tv"};
    for (const auto& pt : curve.points) {
        t.rows.push_back({format_int(pt.n), format_double(pt.tv)});
    }
    return t;
}

CsvTable scaling_to_csv(std::span<const ScalingRow> rows) {
    CsvTable t;
    t.header = {"p", "n_star", "log2p", "ratio_sq", "ratio_loglog"};
    for (const auto& r : rows) {
        t.rows.push_back({format_int(r.p), format_int(r.n_star), format_double(r.log2p),
                          format_double(r.ratio_sq), format_double(r.ratio_loglog)});
    }
    return t;
}

CsvTable lower_bound_to_csv(std::int64_t p, const LowerBoundResult& r) {
    CsvTable t;
    t.header = {"p", "n", "s", "w", "interval_mass", "tv_lower_bound", "exact_tv"};
    t.rows.push_back({format_int(p), format_int(r.n), format_int(r.shift), format_int(r.half_width),
                      format_double(r.interval_mass), format_double(r.tv_lower_bound),
                      format_double(r.exact_tv)});
    return t;
}

CsvTable conditional_to_csv(std::int64_t p, const ConditionalReport& r) {
    CsvTable t;
    t.header = {"p", "n", "tv", "ub_bound", "support_size", "s1", "s2_total", "unresolved"};
    std::int64_t s2_total = 0;
    for (const auto& [b, count] : r.census.s2_counts) s2_total += count;
    t.rows.push_back({format_int(p), format_int(r.n), format_double(r.tv),
                      format_double(r.ub_bound), format_int(r.support_size),
                      format_int(r.census.s1_count), format_int(s2_total),
                      format_int(r.census.unresolved_count)});
    return t;
}

CsvTable frequency_census_to_csv(const FrequencyCensus& census) {
    CsvTable t;
    t.header = {"class", "b", "count"};
    t.rows.push_back({"S1", "0", format_int(census.s1_count)});
    for (const auto& [b, count] : census.s2_counts) {
        t.rows.push_back({"S2", format_int(b), format_int(count)});
    }
    t.rows.push_back({"UNRESOLVED", "0", format_int(census.unresolved_count)});
    return t;
}

CsvTable alternation_census_to_csv(const AlternationCensus& census) {
    CsvTable t;
    t.header = {"alternations", "count"};
    for (std::size_t s = 0; s < census.histogram.size(); ++s) {
        t.rows.push_back({format_int(static_cast<long long>(s)), format_int(census.histogram[s])});
    }
    return t;
}

CsvTable cutoff_to_csv(const CutoffReport& r) {
    CsvTable t = curve_to_csv(r.curve);
    return t;
}

}  // namespace cdgsym
