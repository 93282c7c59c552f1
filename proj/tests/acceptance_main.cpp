// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-cli-binary>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "meanforge/chains.hpp"
#include "meanforge/convexity.hpp"
#include "meanforge/gen_functions.hpp"
#include "meanforge/means.hpp"
#include "meanforge/ratio.hpp"
#include "meanforge/sampling.hpp"

using namespace meanforge;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = {}) {
    std::printf("criterion %d: %s - %s%s%s\n", criterion, ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : "; ", detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Rng {
    std::uint64_t state;
    double next() {
        state = splitmix64(state + 0x9E3779B97F4A7C15ULL);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    double log_uniform(double lo, double hi) {
        return std::exp(std::log(lo) + next() * (std::log(hi) - std::log(lo)));
    }
};

// 1. Constants table: value at 1, extremum agreement, pattern, under 5 s.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const GridSpec grid;
    std::ostringstream detail;
    bool ok = true;
    for (const RatioConstant& rc : ratio_constants()) {
        const RatioProfile prof = profile(RatioPair(rc.num, rc.den), grid);
        const bool value_ok = std::fabs(prof.value_at_1 - rc.constant) <= 1e-9;
        const bool pattern_ok = prof.pattern == rc.pattern;
        const double extremum =
            rc.pattern == RatioPattern::valley_at_1 ? prof.inf : prof.sup;
        const bool extremum_ok = std::fabs(extremum - prof.value_at_1) <= 1e-9;
        if (!(value_ok && pattern_ok && extremum_ok)) {
            ok = false;
            detail << difference_name(rc.num) << "/" << difference_name(rc.den)
                   << ": value_at_1 = " << prof.value_at_1 << " vs table " << rc.constant
                   << " (pattern " << pattern_name(prof.pattern) << ")";
            if (rc.note) detail << " [note: " << rc.note << "]";
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) {
        ok = false;
        detail << " runtime " << dt << " s >= 5 s";
    }
    report(1, ok, "constants table for the 14 ratio pairs", detail.str());
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const GridSpec grid;
    std::ostringstream detail;
    bool ok = true;
    double worst_mismatch = 0.0;
    for (int i = 0; i < kDifferenceKindCount; ++i) {
        const auto k = static_cast<DifferenceKind>(i);
        if (!has_closed_forms(k)) continue;
        const ConvexityCertificate cert = certify_convexity(k, grid);
        worst_mismatch = std::fmax(worst_mismatch, cert.max_fd_mismatch);
        if (!(cert.min_f2 > 0.0 && cert.max_fd_mismatch <= 1e-6)) {
            ok = false;
            detail << difference_name(k) << ": min f'' = " << cert.min_f2 << ", mismatch = "
                   << cert.max_fd_mismatch << "; ";
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) {
        ok = false;
        detail << " runtime " << dt << " s >= 5 s";
    }
    std::ostringstream summary;
    summary << "worst fd mismatch " << worst_mismatch << ", runtime " << dt << " s";
    report(2, ok, "convexity certificates for the 11 closed-form differences",
           detail.str().empty() ? summary.str() : detail.str());
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const char* ids[] = {"eq2",  "eq5",  "eq6",  "eq7",  "eq26", "eq27", "eq28",
                         "eq29", "eq30", "eq31", "eq38", "eq51", "eq52", "eq53",
                         "eq54", "eq58", "eq59", "eq72", "eq73", "eq74", "eq75",
                         "eq76", "eq95", "eq95-alt", "eq96-corrected"};
    SamplingSpec spec;
    spec.count = 1'000'000;
    spec.seed = 1;
    spec.ratio_min = 1e-8;
    spec.ratio_max = 1e8;
    std::ostringstream detail;
    bool ok = true;
    for (const char* id : ids) {
        const InequalityChain* chain = find_chain(id);
        if (!chain) {
            ok = false;
            detail << "missing chain " << id << "; ";
            continue;
        }
        const ChainReport rep = verify_chain(*chain, spec);
        if (!rep.holds || rep.violations != 0) {
            ok = false;
            detail << id << ": " << rep.violations << " violations, worst margin "
                   << rep.worst_pair()->worst_margin << " at b/a = "
                   << rep.worst_pair()->witness_b / rep.worst_pair()->witness_a << "; ";
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        detail << " runtime " << dt << " s >= 60 s";
    }
    std::ostringstream summary;
    summary << "10^6 samples per chain, runtime " << dt << " s";
    report(3, ok, "chain suite verifies with zero violations",
           detail.str().empty() ? summary.str() : detail.str());
}

void criterion_4() {
    const InequalityChain* chain = find_chain("eq96-as-printed");
    bool ok = chain != nullptr;
    std::ostringstream detail;

    SamplingSpec spec;
    spec.count = 100'000;
    spec.seed = 1;
    if (ok) {
        const ChainReport full = verify_chain(*chain, spec);
        if (full.holds) {
            ok = false;
            detail << "chain not refuted on the default band; ";
        }

        SamplingSpec band = spec;
        band.ratio_min = 1.5;
        band.ratio_max = 3.0;
        band.include_edge_cases = false;
        const ChainReport banded = verify_chain(*chain, band);
        const PairStat& bad = banded.pairs[1];  // (S+2H)/2 vs N1
        const double ratio = bad.witness_b / bad.witness_a;
        if (!(bad.violations > 0 && bad.witness_a == 1.0 && ratio >= 1.5 && ratio <= 3.0
              && -bad.worst_margin > 0.5)) {
            ok = false;
            detail << "band witness b/a = " << ratio << " gap " << -bad.worst_margin << "; ";
        } else {
            detail << "witness b/a = " << ratio << ", gap " << -bad.worst_margin << "; ";
        }

        const auto values = evaluate_chain(*chain, PositivePair(1, 2));
        const double gap12 = values[1] - values[2];
        if (!(std::fabs(gap12 - 0.66679596718888064193) <= 1e-9 && gap12 > 0.5)) {
            ok = false;
        }
        detail << "gap at (1,2) = " << gap12;
    }
    report(4, ok, "eq96-as-printed is refuted with an in-band witness", detail.str());
}

void criterion_5() {
    SamplingSpec spec;
    spec.count = 100'000;
    spec.seed = 1;
    bool ok = true;
    std::ostringstream detail;
    for (int i = 0; i < kDifferenceKindCount; ++i) {
        const auto k = static_cast<DifferenceKind>(i);
        if (!has_closed_forms(k)) continue;
        long long bound_viol = 0;
        for (long long j = 0; j < spec.total_samples(); ++j) {
            if (!check_phi_bound(k, sample_pair(spec, j)).holds) ++bound_viol;
        }
        Rng rng{splitmix64(static_cast<std::uint64_t>(i) + 1)};
        long long joint_viol = 0;
        for (long long j = 0; j < 100'000; ++j) {
            const double a1 = rng.log_uniform(1e-3, 1e3);
            const double a2 = rng.log_uniform(1e-3, 1e3);
            const PositivePair p1(a1, a1 * rng.log_uniform(1e-6, 1e6));
            const PositivePair p2(a2, a2 * rng.log_uniform(1e-6, 1e6));
            const double lambda = 1e-9 + (1.0 - 2e-9) * rng.next();
            if (!joint_convexity_probe(k, p1, p2, lambda).holds) ++joint_viol;
        }
        if (bound_viol != 0 || joint_viol != 0) {
            ok = false;
            detail << difference_name(k) << ": " << bound_viol << " bound and " << joint_viol
                   << " joint violations; ";
        }
    }
    report(5, ok, "gradient bound and joint convexity pass 10^5 trials per kind", detail.str());
}

void criterion_6() {
    SamplingSpec spec;
    spec.count = 100'000;
    spec.seed = 1;
    long long violations = 0;
    for (long long i = 0; i < spec.total_samples(); ++i) {
        const PositivePair p = sample_pair(spec, i);
        const double m_ag = difference(DifferenceKind::AG, p);
        for (double r : identity_residuals(p)) {
            if (r > 1e-12 * (1.0 + m_ag)) ++violations;
        }
    }
    report(6, violations == 0, "identity family residuals stay within 1e-12",
           violations == 0 ? "" : std::to_string(violations) + " violations");
}

void criterion_7() {
    Rng rng{2024};
    long long mono_viol = 0;
    long long special_viol = 0;
    const std::pair<double, MeanKind> orders[] = {
        {-1.0, MeanKind::H}, {0.0, MeanKind::G}, {0.5, MeanKind::N1},
        {1.0, MeanKind::A},  {2.0, MeanKind::S},
    };
    for (long long i = 0; i < 100'000; ++i) {
        const double a = rng.log_uniform(1e-6, 1e6);
        const double b = a * rng.log_uniform(1e-8, 1e8);
        const PositivePair p(a, b);
        double t1 = (rng.next() - 0.5) * 64.0;
        double t2 = (rng.next() - 0.5) * 64.0;
        if (rng.next() < 0.02) t1 = -std::numeric_limits<double>::infinity();
        if (rng.next() < 0.02) t2 = std::numeric_limits<double>::infinity();
        if (t1 > t2) std::swap(t1, t2);
        const double v1 = power_mean(MeanOrder(t1), p);
        const double v2 = power_mean(MeanOrder(t2), p);
        if (!(v1 <= v2 + 1e-12 * v2)) ++mono_viol;
        if (i % 10 == 0) {
            for (const auto& [t, k] : orders) {
                const double pm = power_mean(MeanOrder(t), p);
                const double named = mean_value(k, p);
                if (std::fabs(pm - named) > 1e-13 * named) ++special_viol;
            }
        }
    }
    report(7, mono_viol == 0 && special_viol == 0,
           "power-mean monotonicity and special-order agreement",
           mono_viol == 0 && special_viol == 0
               ? ""
               : std::to_string(mono_viol) + " monotonicity and "
                     + std::to_string(special_viol) + " special-order violations");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_8(const std::string& cli) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out_a = dir / "meanforge_acceptance_a.json";
    const fs::path out_b = dir / "meanforge_acceptance_b.json";
    bool ok = true;
    std::ostringstream detail;
    int rc_a = 0, rc_b = 0;
    auto run = [&](const char* threads, const fs::path& out) {
        const std::string cmd = "MEANFORGE_THREADS=" + std::string(threads) + " '" + cli
                                + "' verify --chain all --seed 1 --format json --out '"
                                + out.string() + "'";
        return std::system(cmd.c_str());
    };
    rc_a = run("2", out_a);
    rc_b = run("1", out_b);
    const std::string a = read_file(out_a);
    const std::string b = read_file(out_b);
    if (rc_a != 0 || rc_b != 0) {
        ok = false;
        detail << "cli exit codes " << rc_a << " / " << rc_b << "; ";
    }
    if (a.empty() || a != b) {
        ok = false;
        detail << "reports differ (" << a.size() << " vs " << b.size() << " bytes)";
    } else {
        detail << "byte-identical reports (" << a.size() << " bytes) across thread counts";
    }
    std::error_code ec;
    fs::remove(out_a, ec);
    fs::remove(out_b, ec);
    report(8, ok, "verify --chain all --seed 1 is byte-deterministic", detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 64;
    }
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(argv[1]);
    std::printf("%d of 8 criteria failed\n", g_failures);
    return g_failures;
}
