#pragma once

#include <optional>
#include <span>
#include <string>

#include "meanforge/convexity.hpp"
#include "meanforge/sampling.hpp"

namespace meanforge {

/// A quotient g(x) = f1''(x) / f2''(x) of two closed-form generating
/// functions. Construction rejects kinds without analytic derivatives.
/// Every denominator f'' is strictly positive on (0, inf).
class RatioPair {
  public:
    RatioPair(DifferenceKind numerator, DifferenceKind denominator);

    DifferenceKind numerator() const { return num_; }
    DifferenceKind denominator() const { return den_; }

  private:
    DifferenceKind num_;
    DifferenceKind den_;
};

double ratio_value(const RatioPair& pair, double x);

enum class RatioPattern { peak_at_1, valley_at_1, other };
std::string_view pattern_name(RatioPattern p);

/// Shape summary of g over a grid straddling x = 1: the value at 1, the
/// sup/inf over grid-plus-refinement, and the monotonicity pattern read off
/// sampled successive differences on each side of 1.
struct RatioProfile {
    RatioPair pair;
    double value_at_1;
    double sup;
    double inf;
    double sup_location;
    double inf_location;
    RatioPattern pattern;
};

RatioProfile profile(const RatioPair& pair, const GridSpec& grid);

/// The two-sided bound alpha * M_den <= M_num <= beta * M_den extracted
/// from the extrema of g. For a peak at 1, beta = g(1) is sharp and alpha
/// is a grid estimate of the common tail limit (clamped at 0); for a valley,
/// alpha = g(1) is sharp.
struct DerivedInequality {
    RatioPair pair;
    double alpha;
    double beta;
    RatioPattern pattern;
    std::string statement;  // the sharp side, e.g. "M_SA <= (1/3) M_SH"
};

DerivedInequality derive_inequality(const RatioPair& pair, const GridSpec& grid);

/// Sampling check of both sides of the derived bound.
struct DerivedCheckReport {
    long long samples;
    long long violations;
    double worst_margin;  // most negative slack seen across both sides
    std::optional<PositivePair> witness;
};

DerivedCheckReport verify_derived(const DerivedInequality& ineq, const SamplingSpec& spec,
                                  const ToleranceConfig& tol = {});

/// The fourteen tabulated ratio pairs with their reference constants.
struct RatioConstant {
    DifferenceKind num;
    DifferenceKind den;
    double constant;           // tabulated value of g(1)
    const char* constant_str;  // e.g. "1/3"
    RatioPattern pattern;      // tabulated shape
    const char* note;          // non-null when the tabulated source is inconsistent
};

std::span<const RatioConstant> ratio_constants();
const RatioConstant* find_ratio_constant(DifferenceKind num, DifferenceKind den);

}  // namespace meanforge
