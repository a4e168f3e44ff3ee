#pragma once

#include <cstdint>
#include <vector>

#include "cdgsym/process.hpp"

namespace cdgsym {

/// Realization of the +-1 walk on the exponent of the multiplier:
/// w[0] = 0 and |w[j+1] - w[j]| = 1.
struct ExponentPath {
    std::vector<std::int64_t> w;

    std::int64_t steps() const { return static_cast<std::int64_t>(w.size()) - 1; }
};

struct WalkExtremes {
    std::int64_t max;
    std::int64_t min;
    std::int64_t range() const { return max - min; }
};

struct LevelStats {
    std::int64_t level;
    std::int64_t first_visit;
    std::int64_t revisits;  // R(k): visits with 0 < i - first_visit <= window
};

/// Occupation counts per visited level, window-limited revisit counts.
struct OccupationTable {
    std::int64_t min_level;
    std::int64_t max_level;
    std::int64_t window;
    std::vector<LevelStats> levels;  // indexed by level - min_level

    const LevelStats& at(std::int64_t level) const {
        return levels[static_cast<std::size_t>(level - min_level)];
    }
    bool contains(std::int64_t level) const { return level >= min_level && level <= max_level; }
};

ExponentPath simulate_walk(std::int64_t steps, std::uint64_t seed);

// Forward -> +1, Inverse -> -1, cumulative sums in sequence order.
ExponentPath to_exponent_path(const MultiplierSequence& seq);

// prefix extremes of w[0..j]
WalkExtremes extremes(const ExponentPath& path, std::int64_t j);

// R(k) for every visited level: revisits to k within `window` steps of the
// level's first visit. A level seen only once has R(k) = 0.
OccupationTable occupation_counts(const ExponentPath& path, std::int64_t window);

// Exact P(M_j - m_j <= limit) for the j-step walk, by transfer DP over
// (position - min, max - min). Oracle for range-growth checks.
double range_law_cdf(std::int64_t j, std::int64_t limit);

}  // namespace cdgsym
