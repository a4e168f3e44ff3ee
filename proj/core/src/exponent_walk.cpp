#include "cdgsym/exponent_walk.hpp"

#include <stdexcept>
#include <unordered_map>

#include "cdgsym/rng.hpp"

namespace cdgsym {

ExponentPath simulate_walk(std::int64_t steps, std::uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("simulate_walk: steps must be >= 0");
    SplitMix64 rng = SplitMix64::stream(seed, 0);
    ExponentPath path;
    path.w.reserve(static_cast<std::size_t>(steps) + 1);
    std::int64_t w = 0;
    path.w.push_back(w);
    for (std::int64_t i = 0; i < steps; ++i) {
        w += rng.next_bit() ? 1 : -1;
        path.w.push_back(w);
    }
    return path;
}

ExponentPath to_exponent_path(const MultiplierSequence& seq) {
    ExponentPath path;
    path.w.reserve(seq.size() + 1);
    std::int64_t w = 0;
    path.w.push_back(w);
    for (StepChoice c : seq) {
        w += c == StepChoice::Forward ? 1 : -1;
        path.w.push_back(w);
    }
    return path;
}

WalkExtremes extremes(const ExponentPath& path, std::int64_t j) {
    if (j < 0 || j >= static_cast<std::int64_t>(path.w.size())) {
        throw std::invalid_argument("extremes: index out of range");
    }
    WalkExtremes ext{0, 0};
    for (std::int64_t i = 0; i <= j; ++i) {
        std::int64_t w = path.w[static_cast<std::size_t>(i)];
        if (w > ext.max) ext.max = w;
        if (w < ext.min) ext.min = w;
    }
    return ext;
}

OccupationTable occupation_counts(const ExponentPath& path, std::int64_t window) {
    if (window < 1) throw std::invalid_argument("occupation_counts: window must be >= 1");
    const std::int64_t last = static_cast<std::int64_t>(path.w.size()) - 1;
    WalkExtremes ext = extremes(path, last);

    OccupationTable table{ext.min, ext.max, window, {}};
    table.levels.reserve(static_cast<std::size_t>(ext.range()) + 1);
    for (std::int64_t k = ext.min; k <= ext.max; ++k) table.levels.push_back({k, -1, 0});

    for (std::int64_t i = 0; i <= last; ++i) {
        auto& stats = table.levels[static_cast<std::size_t>(path.w[static_cast<std::size_t>(i)] - ext.min)];
        if (stats.first_visit < 0) {
            stats.first_visit = i;
        } else if (i - stats.first_visit <= window) {
            ++stats.revisits;
        }
    }
    return table;
}

double range_law_cdf(std::int64_t j, std::int64_t limit) {
    if (j < 0 || limit < 0) throw std::invalid_argument("range_law_cdf: bad arguments");
    if (limit == 0) return j == 0 ? 1.0 : 0.0;
    // state (u = w - min, r = max - min), 0 <= u <= r <= limit
    const std::int64_t width = limit + 1;
    auto idx = [width](std::int64_t u, std::int64_t r) {
        return static_cast<std::size_t>(r * width + u);
    };
    std::vector<double> cur(static_cast<std::size_t>(width * width), 0.0), nxt(cur.size());
    cur[idx(0, 0)] = 1.0;
    for (std::int64_t step = 0; step < j; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (std::int64_t r = 0; r <= limit; ++r) {
            for (std::int64_t u = 0; u <= r; ++u) {
                double pr = cur[idx(u, r)];
                if (pr == 0.0) continue;
                // up step
                std::int64_t u1 = u + 1;
                std::int64_t r1 = u1 > r ? u1 : r;
                if (r1 <= limit) nxt[idx(u1, r1)] += 0.5 * pr;
                // down step; at u == 0 the minimum moves and the frame shifts
                if (u > 0) {
                    nxt[idx(u - 1, r)] += 0.5 * pr;
                } else if (r + 1 <= limit) {
                    nxt[idx(0, r + 1)] += 0.5 * pr;
                }
            }
        }
        cur.swap(nxt);
    }
    double total = 0.0;
    for (double x : cur) total += x;
    return total;
}

}  // namespace cdgsym
