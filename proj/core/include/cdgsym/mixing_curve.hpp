#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdgsym/errors.hpp"

namespace cdgsym {

struct CurvePoint {
    std::int64_t n;
    double tv;
};

/// (n, TV) trajectory of one evolution. The kernel is doubly stochastic, so
/// TV must never increase; append() enforces that at 1e-12 and a violation
/// signals a numeric bug, not bad input.
struct MixingCurve {
    std::int64_t p = 0;
    std::string params_label;
    std::vector<CurvePoint> points;

    void append(std::int64_t n, double tv) {
        if (!points.empty() && tv > points.back().tv + 1e-12) {
            throw InvariantViolation("TV increased from " + std::to_string(points.back().tv) +
                                     " to " + std::to_string(tv) + " at step " + std::to_string(n));
        }
        points.push_back({n, tv});
    }

    double final_tv() const { return points.empty() ? 1.0 : points.back().tv; }
};

}  // namespace cdgsym
