#include "meanforge/convexity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef MEANFORGE_HAVE_QUADMATH
#include <quadmath.h>
#endif

namespace meanforge {

#ifdef MEANFORGE_HAVE_QUADMATH
namespace closed {
__float128 cf_sqrt(__float128 x) { return sqrtq(x); }
}  // namespace closed
using fd_real = __float128;
#else
using fd_real = long double;
#endif

std::vector<double> grid_points(const GridSpec& grid) {
    if (!(grid.x_min > 0.0) || !(grid.x_max > grid.x_min) || grid.points < 2 ||
        !std::isfinite(grid.x_min) || !std::isfinite(grid.x_max)) {
        throw std::domain_error("GridSpec requires 0 < x_min < x_max and points >= 2");
    }
    const double lo = std::log10(grid.x_min);
    const double hi = std::log10(grid.x_max);
    std::vector<double> xs(static_cast<std::size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        xs[static_cast<std::size_t>(i)] =
            std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / (grid.points - 1));
    }
    return xs;
}

namespace {

// 5-point central second difference with step h = x * 1e-5, evaluating the
// profile in extended precision. Double evaluation of f cannot resolve the
// ~f''*h^2 signal at the small-x end of the default grid, where f'' grows
// like x^{-3/2} while f itself stays O(1).
double fd_second_derivative(DifferenceKind k, double x) {
    const fd_real xx = static_cast<fd_real>(x);
    const fd_real h = xx * static_cast<fd_real>(1e-5);
    const fd_real stencil =
        -closed::f(k, xx - 2 * h) + 16 * closed::f(k, xx - h) - 30 * closed::f(k, xx)
        + 16 * closed::f(k, xx + h) - closed::f(k, xx + 2 * h);
    return static_cast<double>(stencil / (12 * h * h));
}

void require_closed(DifferenceKind k, const char* op) {
    if (!has_closed_forms(k)) {
        throw std::domain_error(std::string(op) + " requires a closed-form difference kind, got "
                                + std::string(difference_name(k)));
    }
}

}  // namespace

ConvexityCertificate certify_convexity(DifferenceKind k, const GridSpec& grid,
                                       double mismatch_tol) {
    require_closed(k, "certify_convexity");
    const std::vector<double> xs = grid_points(grid);

    ConvexityCertificate cert;
    cert.kind = k;
    cert.grid = grid;
    cert.min_f2 = std::numeric_limits<double>::infinity();
    cert.min_f2_location = xs.front();
    cert.max_fd_mismatch = 0.0;
    for (double x : xs) {
        const double d2 = closed::f2(k, x);
        if (d2 < cert.min_f2) {
            cert.min_f2 = d2;
            cert.min_f2_location = x;
        }
        const double fd = fd_second_derivative(k, x);
        const double mismatch = std::fabs(fd - d2) / (1.0 + std::fabs(d2));
        cert.max_fd_mismatch = std::fmax(cert.max_fd_mismatch, mismatch);
    }
    cert.passed = cert.min_f2 > 0.0 && cert.max_fd_mismatch <= mismatch_tol;
    return cert;
}

PhiBoundResult check_phi_bound(DifferenceKind k, const PositivePair& p,
                               const ToleranceConfig& tol) {
    require_closed(k, "check_phi_bound");
    const GeneratingFunction& gf = generating_function(k);
    const double x = p.b() / p.a();
    PhiBoundResult res;
    res.phi_value = p.a() * gf.f(x);
    res.upper_bound = (p.b() - p.a()) * gf.f1(x);
    const double slack = tol.slack(std::fmax(p.a(), p.b()) + std::fabs(res.upper_bound));
    res.holds = res.phi_value >= -slack && res.phi_value <= res.upper_bound + slack;
    return res;
}

JointConvexityResult joint_convexity_probe(DifferenceKind k, const PositivePair& p1,
                                           const PositivePair& p2, double lambda,
                                           const ToleranceConfig& tol) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw std::domain_error("joint_convexity_probe requires lambda in (0,1)");
    }
    const GeneratingFunction& gf = generating_function(k);
    const double mu = 1.0 - lambda;
    const PositivePair mix(lambda * p1.a() + mu * p2.a(), lambda * p1.b() + mu * p2.b());
    JointConvexityResult res;
    res.lhs = phi(gf, mix);
    res.rhs = lambda * phi(gf, p1) + mu * phi(gf, p2);
    const double scale = std::fmax(std::fmax(p1.a(), p1.b()), std::fmax(p2.a(), p2.b()))
                         + std::fabs(res.rhs);
    res.holds = res.lhs <= res.rhs + tol.slack(scale);
    return res;
}

}  // namespace meanforge
