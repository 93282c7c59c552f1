#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meanforge/chains.hpp"
#include "meanforge/convexity.hpp"
#include "meanforge/gen_functions.hpp"
#include "meanforge/means.hpp"
#include "meanforge/parallel.hpp"
#include "meanforge/ratio.hpp"
#include "meanforge/report.hpp"
#include "meanforge/version.hpp"

namespace {

using namespace meanforge;

constexpr int kExitOk = 0;
constexpr int kExitSurprise = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw UsageError("cannot open output file: " + out_path);
        out << text;
    }
}

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "markdown") return ReportFormat::markdown;
    throw UsageError("unknown format: " + name);
}

MeanKind require_mean_kind(const std::string& name) {
    if (auto k = parse_mean_kind(name)) return *k;
    throw UsageError("unknown mean: " + name + " (expected one of H G N1 N2 N3 A S)");
}

DifferenceKind require_difference_kind(const std::string& name) {
    if (auto k = parse_difference_kind(name)) return *k;
    throw UsageError("unknown difference kind: " + name);
}

std::vector<const InequalityChain*> select_chains(const std::string& selector) {
    std::vector<const InequalityChain*> selected;
    if (selector == "all") {
        for (const auto& chain : builtin_chains()) selected.push_back(&chain);
    } else {
        const InequalityChain* chain = find_chain(selector);
        if (!chain) throw UsageError("unknown chain id: " + selector);
        selected.push_back(chain);
    }
    return selected;
}

int run(int argc, char** argv) {
    CLI::App app{"meanforge: bivariate means, difference measures, and inequality verification"};
    app.set_version_flag("--version", kToolVersion);
    app.set_config("--config");
    app.require_subcommand(1);

    ToleranceConfig tol;
    app.add_option("--tolerance", tol.relative, "relative comparison tolerance")
        ->capture_default_str();

    GridSpec grid;
    SamplingSpec sampling;
    std::string format_name = "text";
    std::string out_path;

    auto add_grid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--xmin", grid.x_min, "grid lower bound")->capture_default_str();
        cmd->add_option("--xmax", grid.x_max, "grid upper bound")->capture_default_str();
        cmd->add_option("--points", grid.points, "grid point count")->capture_default_str();
    };
    auto add_sampling_flags = [&](CLI::App* cmd) {
        cmd->add_option("--samples", sampling.count, "random sample count")
            ->capture_default_str();
        cmd->add_option("--seed", sampling.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--ratio-min", sampling.ratio_min, "lower bound for b/a")
            ->capture_default_str();
        cmd->add_option("--ratio-max", sampling.ratio_max, "upper bound for b/a")
            ->capture_default_str();
        cmd->add_flag("--edge-cases,!--no-edge-cases", sampling.include_edge_cases,
                      "include the fixed edge-case ratios")
            ->capture_default_str();
    };
    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "text, json, or markdown")
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write the report to this path");
    };

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a named mean or a power mean");
    std::string eval_mean;
    double eval_order = 0.0;
    double arg_a = 0.0, arg_b = 0.0;
    auto* opt_mean = eval_cmd->add_option("--mean", eval_mean, "mean kind (H G N1 N2 N3 A S)");
    auto* opt_order = eval_cmd->add_option("--order", eval_order, "power-mean order (t)");
    eval_cmd->add_option("--a", arg_a, "first argument")->required();
    eval_cmd->add_option("--b", arg_b, "second argument")->required();

    // diff
    auto* diff_cmd = app.add_subcommand("diff", "evaluate a difference measure M_XY");
    std::string diff_kind;
    diff_cmd->add_option("--kind", diff_kind, "difference kind, e.g. SA, AG, N2N1")->required();
    diff_cmd->add_option("--a", arg_a, "first argument")->required();
    diff_cmd->add_option("--b", arg_b, "second argument")->required();

    // convexity
    auto* conv_cmd = app.add_subcommand("convexity", "certify f'' > 0 on a grid");
    std::vector<std::string> conv_kinds;
    conv_cmd->add_option("--kind", conv_kinds, "closed-form kinds (default: all eleven)");
    add_grid_flags(conv_cmd);

    // ratio
    auto* ratio_cmd = app.add_subcommand("ratio", "profile g = f1''/f2'' and derive constants");
    std::string ratio_num, ratio_den;
    ratio_cmd->add_option("--num", ratio_num, "numerator difference kind")->required();
    ratio_cmd->add_option("--den", ratio_den, "denominator difference kind")->required();
    add_grid_flags(ratio_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify inequality chains by sampling");
    std::string chain_selector = "all";
    verify_cmd->add_option("--chain", chain_selector, "chain id or 'all'")
        ->capture_default_str();
    add_sampling_flags(verify_cmd);
    add_output_flags(verify_cmd);

    // report
    auto* report_cmd = app.add_subcommand("report", "full report: all chains plus constants");
    add_sampling_flags(report_cmd);
    add_grid_flags(report_cmd);
    add_output_flags(report_cmd);

    // list
    auto* list_cmd = app.add_subcommand("list", "list chains, means, or differences");
    std::string list_what = "chains";
    list_cmd->add_option("what", list_what, "chains | means | differences")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (eval_cmd->parsed()) {
        if ((opt_mean->count() > 0) == (opt_order->count() > 0)) {
            throw UsageError("eval requires exactly one of --mean / --order");
        }
        const PositivePair p(arg_a, arg_b);
        const double v = opt_mean->count() > 0 ? mean_value(require_mean_kind(eval_mean), p)
                                               : power_mean(MeanOrder(eval_order), p);
        std::printf("%s\n", format_double(v, 15).c_str());
        return kExitOk;
    }

    if (diff_cmd->parsed()) {
        const double v = difference(require_difference_kind(diff_kind), PositivePair(arg_a, arg_b));
        std::printf("%s\n", format_double(v, 15).c_str());
        return kExitOk;
    }

    if (conv_cmd->parsed()) {
        std::vector<DifferenceKind> kinds;
        if (conv_kinds.empty()) {
            for (int i = 0; i < kDifferenceKindCount; ++i) {
                const auto k = static_cast<DifferenceKind>(i);
                if (has_closed_forms(k)) kinds.push_back(k);
            }
        } else {
            for (const auto& name : conv_kinds) kinds.push_back(require_difference_kind(name));
        }
        bool all_passed = true;
        for (DifferenceKind k : kinds) {
            const ConvexityCertificate cert = certify_convexity(k, grid);
            all_passed = all_passed && cert.passed;
            std::printf("%-5s min f'' = %s at x = %s, fd mismatch = %s: %s\n",
                        std::string(difference_name(k)).c_str(),
                        format_double(cert.min_f2, 15).c_str(),
                        format_double(cert.min_f2_location, 6).c_str(),
                        format_double(cert.max_fd_mismatch, 6).c_str(),
                        cert.passed ? "pass" : "FAIL");
        }
        return all_passed ? kExitOk : kExitSurprise;
    }

    if (ratio_cmd->parsed()) {
        const DifferenceKind num = require_difference_kind(ratio_num);
        const DifferenceKind den = require_difference_kind(ratio_den);
        if (!has_closed_forms(num) || !has_closed_forms(den)) {
            throw UsageError("ratio requires closed-form kinds; " +
                             std::string(!has_closed_forms(num) ? ratio_num : ratio_den) +
                             " carries no analytic second derivative");
        }
        const RatioPair pair(num, den);
        const DerivedInequality ineq = derive_inequality(pair, grid);
        const RatioProfile prof = profile(pair, grid);
        std::printf("pair %s/%s\n", std::string(difference_name(num)).c_str(),
                    std::string(difference_name(den)).c_str());
        std::printf("g(1) = %s\n", format_double(prof.value_at_1, 15).c_str());
        std::printf("sup  = %s at x = %s\n", format_double(prof.sup, 9).c_str(),
                    format_double(prof.sup_location, 9).c_str());
        std::printf("inf  = %s at x = %s\n", format_double(prof.inf, 9).c_str(),
                    format_double(prof.inf_location, 9).c_str());
        std::printf("pattern %s\n", std::string(pattern_name(prof.pattern)).c_str());
        std::printf("derived: %s\n", ineq.statement.c_str());
        if (const RatioConstant* rc = find_ratio_constant(num, den)) {
            const bool match = std::fabs(prof.value_at_1 - rc->constant) <= 1e-9;
            std::printf("reference constant %s: %s\n", rc->constant_str,
                        match ? "match" : "MISMATCH");
            if (rc->note) std::printf("note: %s\n", rc->note);
        }
        return kExitOk;
    }

    if (verify_cmd->parsed() || report_cmd->parsed()) {
        sampling.validate();
        VerificationRun run;
        run.seed = sampling.seed;
        run.tolerance = tol.relative;
        const auto selected =
            verify_cmd->parsed() ? select_chains(chain_selector) : select_chains("all");
        for (const InequalityChain* chain : selected) {
            run.chains.push_back(
                make_chain_outcome(*chain, verify_chain(*chain, sampling, tol)));
        }
        if (report_cmd->parsed()) {
            for (const RatioConstant& rc : ratio_constants()) {
                run.ratios.push_back(make_ratio_outcome(profile(RatioPair(rc.num, rc.den), grid)));
            }
        }
        emit(render(run, parse_format(format_name)), out_path);
        return run.all_expectations_met() ? kExitOk : kExitSurprise;
    }

    if (list_cmd->parsed()) {
        if (list_what == "chains") {
            std::fputs(export_registry().c_str(), stdout);
        } else if (list_what == "means") {
            for (MeanKind k : kAllMeanKinds) std::printf("%s\n", std::string(mean_name(k)).c_str());
        } else if (list_what == "differences") {
            for (int i = 0; i < kDifferenceKindCount; ++i) {
                const auto k = static_cast<DifferenceKind>(i);
                std::printf("%-5s%s\n", std::string(difference_name(k)).c_str(),
                            has_closed_forms(k) ? " (closed forms)" : "");
            }
        } else {
            throw UsageError("list expects chains, means, or differences");
        }
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
