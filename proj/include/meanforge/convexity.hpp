#pragma once

#include <vector>

#include "meanforge/gen_functions.hpp"
#include "meanforge/tolerance.hpp"

namespace meanforge {

/// Log-uniform evaluation grid on [x_min, x_max], at least two points.
struct GridSpec {
    double x_min = 1e-6;
    double x_max = 1e6;
    int points = 10001;
};

/// Validates and materializes the grid. The default grid hits x = 1 exactly
/// at its midpoint.
std::vector<double> grid_points(const GridSpec& grid);

/// Numerical evidence (not a proof) that one closed-form difference is
/// convex: f'' sampled over the grid, cross-checked at every point against
/// a 5-point central finite difference of f with step h = x * 1e-5.
/// The stencil evaluates f in extended precision so that the mismatch
/// measures transcription faults, not double rounding.
struct ConvexityCertificate {
    DifferenceKind kind;
    GridSpec grid;
    double min_f2;
    double min_f2_location;
    double max_fd_mismatch;  // max over grid of |fd - f''| / (1 + |f''|)
    bool passed;             // min_f2 > 0 and max_fd_mismatch <= mismatch_tol
};

ConvexityCertificate certify_convexity(DifferenceKind k, const GridSpec& grid,
                                       double mismatch_tol = 1e-6);

/// Evaluation of 0 <= phi_f(a,b) <= (b-a) f'(b/a) for a closed-form kind.
struct PhiBoundResult {
    double phi_value;
    double upper_bound;
    bool holds;
};

PhiBoundResult check_phi_bound(DifferenceKind k, const PositivePair& p,
                               const ToleranceConfig& tol = {});

/// One probe of joint convexity of phi: the value at the convex combination
/// of two pairs against the combination of the values, lambda in (0,1).
struct JointConvexityResult {
    double lhs;
    double rhs;
    bool holds;
};

JointConvexityResult joint_convexity_probe(DifferenceKind k, const PositivePair& p1,
                                           const PositivePair& p2, double lambda,
                                           const ToleranceConfig& tol = {});

}  // namespace meanforge
