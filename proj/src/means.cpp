#include "meanforge/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meanforge {

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
        throw std::domain_error("PositivePair requires finite, strictly positive coordinates");
    }
}

MeanOrder::MeanOrder(double t) : t_(t) {
    if (std::isnan(t)) {
        throw std::domain_error("MeanOrder rejects NaN");
    }
}

bool MeanOrder::is_plus_infinity() const { return std::isinf(t_) && t_ > 0; }
bool MeanOrder::is_minus_infinity() const { return std::isinf(t_) && t_ < 0; }

std::string_view mean_name(MeanKind k) {
    switch (k) {
        case MeanKind::H:  return "H";
        case MeanKind::G:  return "G";
        case MeanKind::N1: return "N1";
        case MeanKind::N2: return "N2";
        case MeanKind::N3: return "N3";
        case MeanKind::A:  return "A";
        case MeanKind::S:  return "S";
    }
    return "?";
}

std::optional<MeanKind> parse_mean_kind(std::string_view name) {
    for (MeanKind k : kAllMeanKinds) {
        if (mean_name(k) == name) return k;
    }
    return std::nullopt;
}

namespace {

// Orders below this fall through to the geometric branch; between here and
// 1e-8 the expm1/log1p form below is already exact to working precision,
// so the only special-cased region is the one where 1/t itself overflows
// the exponent range of the intermediate.
constexpr double kGeometricCutoff = 1e-12;

double geometric(double a, double b) { return std::sqrt(a) * std::sqrt(b); }

}  // namespace

double power_mean(MeanOrder t, const PositivePair& p) {
    const double a = p.a();
    const double b = p.b();
    const double lo = std::fmin(a, b);
    const double hi = std::fmax(a, b);
    double result;

    if (t.is_plus_infinity()) {
        return hi;
    } else if (t.is_minus_infinity()) {
        return lo;
    } else if (std::fabs(t.value()) < kGeometricCutoff) {
        result = geometric(a, b);
    } else {
        // Factor out hi (t > 0) or lo (t < 0) so both ratios sit in (0, 1]
        // resp. [1, inf) and t*log(ratio) <= 0: the averaged expm1 terms
        // stay in (-1, 0] and nothing can overflow. One ratio is exactly 1.
        const double tv = t.value();
        const double m = tv > 0 ? hi : lo;
        const double su = std::expm1(tv * std::log(a / m));
        const double sv = std::expm1(tv * std::log(b / m));
        result = m * std::exp(std::log1p(0.5 * (su + sv)) / tv);
    }
    return std::clamp(result, lo, hi);
}

MeanValues all_means(const PositivePair& p) {
    const double a = p.a();
    const double b = p.b();
    const double sa = std::sqrt(a);
    const double sb = std::sqrt(b);
    const double arith = 0.5 * (a + b);
    const double geom = sa * sb;
    const double root = 0.5 * (sa + sb);

    MeanValues m;
    m[static_cast<int>(MeanKind::H)] = 2.0 / (1.0 / a + 1.0 / b);
    m[static_cast<int>(MeanKind::G)] = geom;
    m[static_cast<int>(MeanKind::N1)] = root * root;
    m[static_cast<int>(MeanKind::N2)] = root * std::sqrt(arith);
    m[static_cast<int>(MeanKind::N3)] = (a + geom + b) / 3.0;
    m[static_cast<int>(MeanKind::A)] = arith;
    // Root-square mean with the larger coordinate factored out; u <= 1, so
    // the radicand sits in (1/2, 1] and a == b lands on sqrt(1) exactly.
    const double hi = std::fmax(a, b);
    const double u = std::fmin(a, b) / hi;
    m[static_cast<int>(MeanKind::S)] = hi * std::sqrt(0.5 * (1.0 + u * u));
    return m;
}

double mean_value(MeanKind k, const PositivePair& p) {
    return all_means(p)[static_cast<int>(k)];
}

DragomirPearceResult dragomir_pearce_check(double r, const PositivePair& p,
                                           const ToleranceConfig& tol) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("dragomir_pearce_check requires r in (0,1)");
    }
    const double a = p.a();
    const double b = p.b();
    if (a == b) {
        throw std::domain_error("dragomir_pearce_check requires a != b");
    }
    DragomirPearceResult res;
    res.lhs = 0.5 * (std::pow(a, r) + std::pow(b, r));
    res.mid = (std::pow(b, r + 1.0) - std::pow(a, r + 1.0)) / ((r + 1.0) * (b - a));
    res.rhs = std::pow(0.5 * (a + b), r);
    const double scale = std::fmax(std::fabs(res.lhs), std::fmax(std::fabs(res.mid), std::fabs(res.rhs)));
    const double slack = tol.slack(scale);
    res.holds = res.lhs <= res.mid + slack && res.mid <= res.rhs + slack;
    return res;
}

}  // namespace meanforge
