#pragma once

#include <cmath>

namespace meanforge {

/// Shared comparison policy: relative slack with a tiny absolute floor.
/// Every "holds" flag in the library goes through one of these helpers.
struct ToleranceConfig {
    double relative = 1e-12;
    double absolute_floor = 1e-300;

    /// Allowed slack for quantities living at magnitude `scale`.
    double slack(double scale) const {
        return relative * std::fabs(scale) + absolute_floor;
    }

    /// a <= b, allowing slack at the scale of the operands.
    bool leq(double a, double b) const {
        return a <= b + slack(std::fmax(std::fabs(a), std::fabs(b)));
    }
};

}  // namespace meanforge
