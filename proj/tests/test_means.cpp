#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "meanforge/means.hpp"
#include "test_support.hpp"

using namespace meanforge;
using mf_test::Uniform;
using mf_test::rel_err;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("positive pair construction") {
    CHECK_NOTHROW(PositivePair(1e-300, 1e300));
    CHECK_THROWS_AS(PositivePair(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(PositivePair(-1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(PositivePair(1.0, kInf), std::domain_error);
    CHECK_THROWS_AS(PositivePair(std::nan(""), 1.0), std::domain_error);
}

TEST_CASE("mean order construction") {
    CHECK_NOTHROW(MeanOrder(0.0));
    CHECK_NOTHROW(MeanOrder(kInf));
    CHECK_NOTHROW(MeanOrder(-kInf));
    CHECK_THROWS_AS(MeanOrder(std::nan("")), std::domain_error);
}

TEST_CASE("power mean at pinned orders") {
    CHECK(power_mean(MeanOrder(1), PositivePair(3, 5)) == Catch::Approx(4.0).epsilon(1e-15));
    CHECK(power_mean(MeanOrder(0), PositivePair(4, 9)) == Catch::Approx(6.0).epsilon(1e-15));
    CHECK(power_mean(MeanOrder(-1), PositivePair(1, 2))
          == Catch::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(power_mean(MeanOrder(kInf), PositivePair(2, 7)) == 7.0);
    CHECK(power_mean(MeanOrder(-kInf), PositivePair(2, 7)) == 2.0);
    // ((1 + sqrt(2))/2)^2, evaluated at 25 digits.
    CHECK(power_mean(MeanOrder(0.5), PositivePair(1, 2))
          == Catch::Approx(1.4571067811865475244).epsilon(1e-15));
}

TEST_CASE("named means at pinned points") {
    CHECK(mean_value(MeanKind::N1, PositivePair(1, 9)) == Catch::Approx(4.0).epsilon(1e-15));
    CHECK(mean_value(MeanKind::S, PositivePair(1, 7)) == Catch::Approx(5.0).epsilon(1e-15));
    // ((1 + sqrt(2))/2) * sqrt(3/2), evaluated at 25 digits.
    CHECK(mean_value(MeanKind::N2, PositivePair(1, 2))
          == Catch::Approx(1.4783978394802331713).epsilon(1e-15));
    CHECK(mean_value(MeanKind::H, PositivePair(1, 3)) == Catch::Approx(1.5).epsilon(1e-15));
    CHECK(mean_value(MeanKind::N3, PositivePair(1, 2))
          == Catch::Approx(1.4714045207910316829).epsilon(1e-15));
}

TEST_CASE("reflexivity within one ulp") {
    Uniform rng(11);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.log_uniform(1e-6, 1e6);
        const PositivePair p(a, a);
        for (MeanKind k : kAllMeanKinds) {
            CAPTURE(mean_name(k), a);
            CHECK(std::fabs(mean_value(k, p) - a) <= std::fabs(a) * 2.3e-16);
        }
        CHECK(power_mean(MeanOrder(rng.next() * 8 - 4), p)
              == Catch::Approx(a).epsilon(2.3e-16));
    }
}

TEST_CASE("symmetry of the named means") {
    Uniform rng(12);
    for (int i = 0; i < 500; ++i) {
        const double x = rng.log_uniform(1e-8, 1e8);
        const PositivePair p(1.0, x);
        const PositivePair q(x, 1.0);
        for (MeanKind k : kAllMeanKinds) {
            CAPTURE(mean_name(k), x);
            CHECK(rel_err(mean_value(k, p), mean_value(k, q)) <= 1e-15);
        }
    }
}

TEST_CASE("homogeneity of means and power means") {
    Uniform rng(13);
    for (double lambda : {1e-6, 0.37, 3.0, 1e6}) {
        for (int i = 0; i < 200; ++i) {
            const double x = rng.log_uniform(1e-6, 1e6);
            const PositivePair p(1.0, x);
            const PositivePair q(lambda, lambda * x);
            for (MeanKind k : kAllMeanKinds) {
                CAPTURE(mean_name(k), x, lambda);
                CHECK(std::fabs(mean_value(k, q) - lambda * mean_value(k, p))
                      <= 1e-13 * lambda * (1.0 + x));
            }
            const MeanOrder t(rng.next() * 16 - 8);
            CHECK(std::fabs(power_mean(t, q) - lambda * power_mean(t, p))
                  <= 1e-13 * lambda * (1.0 + x));
        }
    }
}

TEST_CASE("betweenness of the power mean") {
    Uniform rng(14);
    for (int i = 0; i < 2000; ++i) {
        const double a = rng.log_uniform(1e-6, 1e6);
        const double b = rng.log_uniform(1e-6, 1e6);
        double t;
        switch (i % 5) {
            case 0: t = kInf; break;
            case 1: t = -kInf; break;
            case 2: t = (rng.next() - 0.5) * 2e-8; break;
            default: t = (rng.next() - 0.5) * 200; break;
        }
        const double v = power_mean(MeanOrder(t), PositivePair(a, b));
        CAPTURE(a, b, t);
        CHECK(v >= std::fmin(a, b));
        CHECK(v <= std::fmax(a, b));
    }
}

TEST_CASE("monotonicity in the order") {
    Uniform rng(15);
    for (int i = 0; i < 5000; ++i) {
        const double a = rng.log_uniform(1e-4, 1e4);
        const double b = rng.log_uniform(1e-4, 1e4);
        double t1 = (rng.next() - 0.5) * 64;
        double t2 = (rng.next() - 0.5) * 64;
        if (t1 > t2) std::swap(t1, t2);
        const PositivePair p(a, b);
        const double v1 = power_mean(MeanOrder(t1), p);
        const double v2 = power_mean(MeanOrder(t2), p);
        CAPTURE(a, b, t1, t2);
        CHECK(v1 <= v2 + 1e-12 * v2);
    }
}

TEST_CASE("special orders coincide with named means") {
    Uniform rng(16);
    const std::pair<double, MeanKind> orders[] = {
        {-1.0, MeanKind::H}, {0.0, MeanKind::G}, {0.5, MeanKind::N1},
        {1.0, MeanKind::A},  {2.0, MeanKind::S},
    };
    for (int i = 0; i < 1000; ++i) {
        const PositivePair p(rng.log_uniform(1e-4, 1e4), rng.log_uniform(1e-4, 1e4));
        for (const auto& [t, k] : orders) {
            CAPTURE(t, mean_name(k), p.a(), p.b());
            CHECK(rel_err(power_mean(MeanOrder(t), p), mean_value(k, p)) <= 1e-13);
        }
    }
}

TEST_CASE("power mean against the extended-precision reference") {
    Uniform rng(17);
    for (int i = 0; i < 2000; ++i) {
        const double a = rng.log_uniform(1e-4, 1e4);
        const double b = rng.log_uniform(1e-4, 1e4);
        double t = (rng.next() - 0.5) * 16;
        if (std::fabs(t) < 1e-3) t = std::copysign(1e-3, t);
        const double v = power_mean(MeanOrder(t), PositivePair(a, b));
        const double ref = static_cast<double>(mf_test::ref_power_mean(t, a, b));
        CAPTURE(a, b, t);
        CHECK(rel_err(v, ref) <= 1e-13);
    }
}

TEST_CASE("power mean near order zero stays stable") {
    Uniform rng(18);
    for (int i = 0; i < 500; ++i) {
        const double a = rng.log_uniform(1e-3, 1e3);
        const double b = rng.log_uniform(1e-3, 1e3);
        const double mag = std::pow(10.0, -12.0 + 4.0 * rng.next());  // [1e-12, 1e-8]
        const double t = (rng.next() < 0.5 ? -1 : 1) * mag;
        const double v = power_mean(MeanOrder(t), PositivePair(a, b));
        if (std::fabs(t) < 1e-12) {
            CHECK(v == mean_value(MeanKind::G, PositivePair(a, b)));
        } else {
            const double ref = static_cast<double>(mf_test::ref_power_mean_stable(t, a, b));
            CAPTURE(a, b, t);
            CHECK(rel_err(v, ref) <= 1e-13);
        }
    }
}

TEST_CASE("mean identities tie N1, N2, N3 to A and G") {
    Uniform rng(19);
    for (int i = 0; i < 1000; ++i) {
        const PositivePair p(1.0, rng.log_uniform(1e-8, 1e8));
        const MeanValues m = all_means(p);
        const double a_ = mean_of(m, MeanKind::A);
        const double g_ = mean_of(m, MeanKind::G);
        CHECK(rel_err(mean_of(m, MeanKind::N1), 0.5 * (a_ + g_)) <= 1e-13);
        CHECK(rel_err(mean_of(m, MeanKind::N2), std::sqrt(mean_of(m, MeanKind::N1) * a_))
              <= 1e-13);
        CHECK(rel_err(mean_of(m, MeanKind::N3), (2.0 * a_ + g_) / 3.0) <= 1e-13);
    }
}

TEST_CASE("three-term power comparison at pinned points") {
    const auto r14 = dragomir_pearce_check(0.5, PositivePair(1, 4));
    CHECK(r14.lhs == Catch::Approx(1.5).epsilon(1e-15));
    CHECK(r14.mid == Catch::Approx(14.0 / 9.0).epsilon(1e-15));
    CHECK(r14.rhs == Catch::Approx(1.5811388300841896660).epsilon(1e-15));
    CHECK(r14.holds);

    const auto r12 = dragomir_pearce_check(0.5, PositivePair(1, 2));
    CHECK(r12.lhs == Catch::Approx(1.2071067811865475244).epsilon(1e-15));
    CHECK(r12.mid == Catch::Approx(1.2189514164974600651).epsilon(1e-15));
    CHECK(r12.rhs == Catch::Approx(1.2247448713915890491).epsilon(1e-15));
    CHECK(r12.holds);

    // Swapping the arguments leaves the difference quotient unchanged.
    const auto r21 = dragomir_pearce_check(0.5, PositivePair(2, 1));
    CHECK(r21.mid == Catch::Approx(r12.mid).epsilon(1e-15));
    CHECK(r21.holds);
}

TEST_CASE("three-term power comparison rejects bad input") {
    CHECK_THROWS_AS(dragomir_pearce_check(0.5, PositivePair(3, 3)), std::domain_error);
    CHECK_THROWS_AS(dragomir_pearce_check(0.0, PositivePair(1, 2)), std::domain_error);
    CHECK_THROWS_AS(dragomir_pearce_check(1.0, PositivePair(1, 2)), std::domain_error);
    CHECK_THROWS_AS(dragomir_pearce_check(-0.5, PositivePair(1, 2)), std::domain_error);
}

TEST_CASE("three-term power comparison holds over random input") {
    Uniform rng(20);
    for (int i = 0; i < 2000; ++i) {
        const double r = 1e-6 + (1.0 - 2e-6) * rng.next();
        const double x = rng.log_uniform(1e-6, 1e6);
        if (x == 1.0) continue;
        const auto res = dragomir_pearce_check(r, PositivePair(1.0, x));
        CAPTURE(r, x);
        CHECK(res.holds);
    }
}
