#include "meanforge/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "meanforge/gen_functions.hpp"

namespace meanforge {

RatioPair::RatioPair(DifferenceKind numerator, DifferenceKind denominator)
    : num_(numerator), den_(denominator) {
    if (!has_closed_forms(numerator) || !has_closed_forms(denominator)) {
        throw std::domain_error("RatioPair requires closed-form difference kinds");
    }
}

double ratio_value(const RatioPair& pair, double x) {
    return closed::f2(pair.numerator(), x) / closed::f2(pair.denominator(), x);
}

std::string_view pattern_name(RatioPattern p) {
    switch (p) {
        case RatioPattern::peak_at_1:   return "peak_at_1";
        case RatioPattern::valley_at_1: return "valley_at_1";
        case RatioPattern::other:       return "other";
    }
    return "?";
}

namespace {

constexpr double kGssWidth = 1e-12;        // bracket width in log-x
constexpr int kSideSamples = 512;          // successive differences per side of 1
constexpr double kSlopeTolerance = 1e-10;  // flatness allowance for classification

// Golden-section extremum of g(exp(u)) on [lo, hi]; sign = +1 maximizes.
std::pair<double, double> golden_section(const RatioPair& pair, double lo, double hi,
                                         double sign) {
    constexpr double kInvPhi = 0.6180339887498949;
    auto h = [&](double u) { return sign * ratio_value(pair, std::exp(u)); };
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double h1 = h(x1);
    double h2 = h(x2);
    while (hi - lo > kGssWidth) {
        if (h1 >= h2) {
            hi = x2; x2 = x1; h2 = h1;
            x1 = hi - kInvPhi * (hi - lo);
            h1 = h(x1);
        } else {
            lo = x1; x1 = x2; h1 = h2;
            x2 = lo + kInvPhi * (hi - lo);
            h2 = h(x2);
        }
    }
    const double u = h1 >= h2 ? x1 : x2;
    return {std::exp(u), sign * std::fmax(h1, h2)};
}

struct Extremum {
    double value;
    double location;
};

// Grid scan (with x = 1 injected) plus golden-section refinement inside the
// bracketing interval of the best grid point.
Extremum refine(const RatioPair& pair, const std::vector<double>& xs, double sign) {
    std::size_t best = 0;
    double best_val = sign * ratio_value(pair, xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double v = sign * ratio_value(pair, xs[i]);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = std::log(xs[best == 0 ? 0 : best - 1]);
    const double hi = std::log(xs[std::min(best + 1, xs.size() - 1)]);
    Extremum ext{sign * best_val, xs[best]};
    if (hi > lo) {
        const auto [x, v] = golden_section(pair, lo, hi, sign);
        if (sign * v > best_val) {
            ext.value = v;
            ext.location = x;
        }
    }
    return ext;
}

enum class Slope { nondecreasing, nonincreasing, mixed };

// Monotonicity of g over [x_lo, x_hi] from sampled successive differences.
Slope side_slope(const RatioPair& pair, double x_lo, double x_hi) {
    const double lo = std::log(x_lo);
    const double hi = std::log(x_hi);
    bool up_ok = true;
    bool down_ok = true;
    double prev = ratio_value(pair, std::exp(lo));
    for (int j = 1; j <= kSideSamples; ++j) {
        const double x = std::exp(lo + (hi - lo) * j / kSideSamples);
        const double cur = ratio_value(pair, x);
        const double flat = kSlopeTolerance * (1.0 + std::fmax(std::fabs(prev), std::fabs(cur)));
        if (cur - prev < -flat) up_ok = false;
        if (cur - prev > flat) down_ok = false;
        prev = cur;
    }
    if (up_ok) return Slope::nondecreasing;
    if (down_ok) return Slope::nonincreasing;
    return Slope::mixed;
}

}  // namespace

RatioProfile profile(const RatioPair& pair, const GridSpec& grid) {
    if (!(grid.x_min < 1.0 && grid.x_max > 1.0)) {
        throw std::domain_error("profile requires a grid straddling x = 1");
    }
    std::vector<double> xs = grid_points(grid);
    if (std::find(xs.begin(), xs.end(), 1.0) == xs.end()) {
        xs.insert(std::upper_bound(xs.begin(), xs.end(), 1.0), 1.0);
    }

    RatioProfile prof{pair, ratio_value(pair, 1.0), 0, 0, 0, 0, RatioPattern::other};
    const Extremum top = refine(pair, xs, +1.0);
    const Extremum bot = refine(pair, xs, -1.0);
    prof.sup = top.value;
    prof.sup_location = top.location;
    prof.inf = bot.value;
    prof.inf_location = bot.location;

    const Slope left = side_slope(pair, grid.x_min, 1.0);
    const Slope right = side_slope(pair, 1.0, grid.x_max);
    if (left == Slope::nondecreasing && right == Slope::nonincreasing) {
        prof.pattern = RatioPattern::peak_at_1;
    } else if (left == Slope::nonincreasing && right == Slope::nondecreasing) {
        prof.pattern = RatioPattern::valley_at_1;
    } else {
        prof.pattern = RatioPattern::other;
    }
    return prof;
}

namespace {

// Small-denominator rational rendering for derived constants ("1/3", "8").
std::string rationalize(double v) {
    for (long long den = 1; den <= 99; ++den) {
        const double scaled = v * static_cast<double>(den);
        const double num = std::round(scaled);
        if (std::fabs(scaled - num) <= 1e-9 * den * std::fmax(1.0, std::fabs(v))) {
            if (den == 1) return std::to_string(static_cast<long long>(num));
            return "(" + std::to_string(static_cast<long long>(num)) + "/" + std::to_string(den)
                   + ")";
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string measure_name(DifferenceKind k) {
    return "M_" + std::string(difference_name(k));
}

}  // namespace

DerivedInequality derive_inequality(const RatioPair& pair, const GridSpec& grid) {
    const RatioProfile prof = profile(pair, grid);
    DerivedInequality ineq{pair, 0.0, 0.0, prof.pattern, {}};
    ineq.beta = prof.sup;
    ineq.alpha = std::fmax(prof.inf, 0.0);
    const std::string mn = measure_name(pair.numerator());
    const std::string md = measure_name(pair.denominator());
    if (prof.pattern == RatioPattern::valley_at_1) {
        // The sharp constant is the infimum, attained at x = 1.
        const std::string coeff = rationalize(ineq.alpha);
        ineq.statement = coeff == "1" ? md + " <= " + mn : coeff + " " + md + " <= " + mn;
    } else {
        ineq.statement = mn + " <= " + rationalize(ineq.beta) + " " + md;
    }
    return ineq;
}

DerivedCheckReport verify_derived(const DerivedInequality& ineq, const SamplingSpec& spec,
                                  const ToleranceConfig& tol) {
    spec.validate();
    const DifferenceKind num = ineq.pair.numerator();
    const DifferenceKind den = ineq.pair.denominator();
    DerivedCheckReport rep{spec.total_samples(), 0, std::numeric_limits<double>::infinity(), {}};
    for (long long i = 0; i < rep.samples; ++i) {
        const PositivePair p = sample_pair(spec, i);
        const double m1 = difference(num, p);
        const double m2 = difference(den, p);
        const double upper_margin = ineq.beta * m2 - m1;
        const double lower_margin = m1 - ineq.alpha * m2;
        const double margin = std::fmin(upper_margin, lower_margin);
        // Each side compares m1 against c * m2, so the evaluation noise of
        // the side scales with its constant c.
        const double base = std::fmax(p.a(), p.b()) + std::fabs(m1);
        const double slack_upper =
            tol.slack(base + std::fabs(ineq.beta) * (std::fmax(p.a(), p.b()) + std::fabs(m2)));
        const double slack_lower =
            tol.slack(base + std::fabs(ineq.alpha) * (std::fmax(p.a(), p.b()) + std::fabs(m2)));
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.witness = p;
        }
        if (upper_margin < -slack_upper || lower_margin < -slack_lower) ++rep.violations;
    }
    return rep;
}

namespace {

constexpr RatioConstant kRatioConstants[] = {
    {DifferenceKind::SA, DifferenceKind::SH, 1.0 / 3.0, "1/3", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SH, DifferenceKind::AH, 1.5, "3/2", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SG, DifferenceKind::AH, 1.0, "1", RatioPattern::valley_at_1, nullptr},
    {DifferenceKind::SG, DifferenceKind::AG, 2.0, "2", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::AH, DifferenceKind::N2N1, 8.0, "8", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::N2N1, DifferenceKind::N2G, 1.0 / 3.0, "1/3", RatioPattern::peak_at_1,
     nullptr},
    {DifferenceKind::N2G, DifferenceKind::AG, 0.75, "3/4", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::AG, DifferenceKind::AN2, 4.0, "4", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SA, DifferenceKind::SN2, 0.8, "4/5", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SN2, DifferenceKind::AN2, 0.8, "4/5", RatioPattern::peak_at_1,
     "tabulated value 4/5 (eq81) is inconsistent: the second-derivative ratio evaluates to 5 "
     "at x = 1, matching the derived bound (1/5) M_SN2 <= M_AN2 (eq82)"},
    {DifferenceKind::SH, DifferenceKind::SN1, 2.0, "2", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SN1, DifferenceKind::SG, 0.75, "3/4", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SA, DifferenceKind::SN3, 0.75, "3/4", RatioPattern::peak_at_1, nullptr},
    {DifferenceKind::SN3, DifferenceKind::SN1, 8.0 / 9.0, "8/9", RatioPattern::peak_at_1,
     "stated supremum 3/4 (eq93) is inconsistent: direct evaluation of the ratio at x = 1 "
     "gives 8/9, matching the derived bound M_SN3 <= (8/9) M_SN1 (eq94)"},
};

}  // namespace

std::span<const RatioConstant> ratio_constants() { return kRatioConstants; }

const RatioConstant* find_ratio_constant(DifferenceKind num, DifferenceKind den) {
    for (const auto& rc : kRatioConstants) {
        if (rc.num == num && rc.den == den) return &rc;
    }
    return nullptr;
}

}  // namespace meanforge
