#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "meanforge/tolerance.hpp"

namespace meanforge {

/// An ordered pair of strictly positive reals. Construction rejects
/// non-finite or non-positive values with std::domain_error.
class PositivePair {
  public:
    PositivePair(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }

  private:
    double a_;
    double b_;
};

/// Order of a power mean: any finite real, or +/-infinity. NaN is rejected.
class MeanOrder {
  public:
    explicit MeanOrder(double t);

    double value() const { return t_; }
    bool is_plus_infinity() const;
    bool is_minus_infinity() const;

  private:
    double t_;
};

/// The seven named bivariate means.
enum class MeanKind { H, G, N1, N2, N3, A, S };

inline constexpr std::array<MeanKind, 7> kAllMeanKinds = {
    MeanKind::H, MeanKind::G, MeanKind::N1, MeanKind::N2,
    MeanKind::N3, MeanKind::A, MeanKind::S};

std::string_view mean_name(MeanKind k);
std::optional<MeanKind> parse_mean_kind(std::string_view name);

/// Power mean ((a^t + b^t)/2)^(1/t), with the geometric mean at t = 0 and
/// max / min at t = +/-infinity.
///
/// Numerics: the larger (t > 0) or smaller (t < 0) argument is factored out
/// so intermediates stay in [0, 1] and never overflow, and the remaining
/// exponential is evaluated through expm1/log1p so the t -> 0 limit is
/// reached smoothly. Orders with |t| < 1e-12 fall through to the geometric
/// branch (the stable form switches over at that point).
double power_mean(MeanOrder t, const PositivePair& p);

/// Value of one of the seven named means.
double mean_value(MeanKind k, const PositivePair& p);

/// All seven means at once, indexed by static_cast<int>(MeanKind).
/// Shares the square roots; the chain engine calls this once per sample.
using MeanValues = std::array<double, 7>;
MeanValues all_means(const PositivePair& p);

inline double mean_of(const MeanValues& m, MeanKind k) {
    return m[static_cast<int>(k)];
}

/// Result of the three-term comparison
///   (a^r+b^r)/2  <=  (b^{r+1}-a^{r+1}) / ((r+1)(b-a))  <=  ((a+b)/2)^r
/// for r in (0,1), a != b.
struct DragomirPearceResult {
    double lhs;
    double mid;
    double rhs;
    bool holds;
};

/// Evaluates the triple above. Requires 0 < r < 1 (domain error otherwise)
/// and a != b (the comparison's middle term is a difference quotient).
DragomirPearceResult dragomir_pearce_check(double r, const PositivePair& p,
                                           const ToleranceConfig& tol = {});

}  // namespace meanforge
