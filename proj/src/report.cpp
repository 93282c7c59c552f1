#include "meanforge/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "meanforge/version.hpp"

namespace meanforge {

std::string format_double(double v, int significant_digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

bool VerificationRun::all_expectations_met() const {
    for (const auto& c : chains) {
        if (!c.expectation_met) return false;
    }
    return true;
}

ChainOutcome make_chain_outcome(const InequalityChain& chain, ChainReport report) {
    const bool expect_holds = chain.expectation == InequalityChain::Expectation::expected_holds;
    const bool met = expect_holds ? report.holds : !report.holds;
    return ChainOutcome{&chain, std::move(report), met};
}

RatioOutcome make_ratio_outcome(const RatioProfile& prof) {
    RatioOutcome out{prof, 0.0, "", false, nullptr};
    if (const RatioConstant* rc =
            find_ratio_constant(prof.pair.numerator(), prof.pair.denominator())) {
        out.reference_constant = rc->constant;
        out.reference_constant_str = rc->constant_str;
        out.matches_reference = std::fabs(prof.value_at_1 - rc->constant) <= 1e-9;
        out.note = rc->note;
    }
    return out;
}

namespace {

// Minimal writer so the byte layout (key order, 17-significant-digit
// numbers, no locale surprises) is fully pinned.
class JsonWriter {
  public:
    void key(const std::string& k) {
        comma();
        out_ << indent_ << '"' << k << "\": ";
        pending_comma_ = false;
    }
    void value_str(const std::string& s) { out_ << '"' << escape(s) << '"'; done(); }
    void value_num(double v) { out_ << format_double(v, 17); done(); }
    void value_int(long long v) { out_ << v; done(); }
    void value_bool(bool b) { out_ << (b ? "true" : "false"); done(); }
    void value_null() { out_ << "null"; done(); }
    void open_obj(char bracket = '{') {
        out_ << bracket << '\n';
        indent_ += "  ";
        pending_comma_ = false;
    }
    void open_arr() { open_obj('['); }
    void elem() {
        comma();
        out_ << indent_;
        pending_comma_ = false;
    }
    void close_obj(char bracket = '}') {
        indent_.resize(indent_.size() - 2);
        out_ << '\n' << indent_ << bracket;
        done();
    }
    void close_arr() { close_obj(']'); }
    std::string str() const { return out_.str(); }

  private:
    void comma() {
        if (pending_comma_) out_ << ",\n";
    }
    void done() { pending_comma_ = true; }
    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            if (c == '"' || c == '\\') r += '\\';
            r += c;
        }
        return r;
    }
    std::ostringstream out_;
    std::string indent_;
    bool pending_comma_ = false;
};

void write_witness(JsonWriter& w, const PairStat& ps) {
    if (ps.violations > 0) {
        w.open_obj();
        w.key("a");
        w.value_num(ps.witness_a);
        w.key("b");
        w.value_num(ps.witness_b);
        w.close_obj();
    } else {
        w.value_null();
    }
}

const char* expectation_str(const InequalityChain& c) {
    return c.expectation == InequalityChain::Expectation::expected_holds ? "expected_holds"
                                                                         : "expected_fails";
}

}  // namespace

std::string to_json(const VerificationRun& run) {
    JsonWriter w;
    w.open_obj();
    w.key("tool_version");
    w.value_str(kToolVersion);
    w.key("seed");
    w.value_int(static_cast<long long>(run.seed));
    w.key("tolerance");
    w.value_num(run.tolerance);
    w.key("chains");
    w.open_arr();
    for (const auto& c : run.chains) {
        w.elem();
        w.open_obj();
        w.key("id");
        w.value_str(c.chain->id);
        w.key("source");
        w.value_str(c.chain->source);
        w.key("holds");
        w.value_bool(c.report.holds);
        w.key("violations");
        w.value_int(c.report.violations);
        const PairStat* worst = c.report.worst_pair();
        w.key("worst_margin");
        if (worst) {
            w.value_num(worst->worst_margin);
        } else {
            w.value_null();
        }
        w.key("witness");
        if (worst && c.report.violations > 0) {
            // Witness of the most violated pair.
            const PairStat* viol = nullptr;
            for (const auto& ps : c.report.pairs) {
                if (ps.violations > 0 && (!viol || ps.worst_margin < viol->worst_margin)) {
                    viol = &ps;
                }
            }
            write_witness(w, *viol);
        } else {
            w.value_null();
        }
        w.key("per_pair");
        w.open_arr();
        for (std::size_t j = 0; j < c.report.pairs.size(); ++j) {
            const PairStat& ps = c.report.pairs[j];
            w.elem();
            w.open_obj();
            w.key("lhs");
            w.value_str(c.chain->members[j].prefix());
            w.key("rhs");
            w.value_str(c.chain->members[j + 1].prefix());
            w.key("worst_margin");
            w.value_num(ps.worst_margin);
            w.key("violations");
            w.value_int(ps.violations);
            w.key("witness");
            write_witness(w, ps);
            w.close_obj();
        }
        w.close_arr();
        w.close_obj();
    }
    w.close_arr();
    w.key("ratios");
    w.open_arr();
    for (const auto& r : run.ratios) {
        w.elem();
        w.open_obj();
        w.key("num");
        w.value_str(std::string(difference_name(r.prof.pair.numerator())));
        w.key("den");
        w.value_str(std::string(difference_name(r.prof.pair.denominator())));
        w.key("value_at_1");
        w.value_num(r.prof.value_at_1);
        w.key("sup");
        w.value_num(r.prof.sup);
        w.key("inf");
        w.value_num(r.prof.inf);
        w.key("pattern");
        w.value_str(std::string(pattern_name(r.prof.pattern)));
        w.key("paper_constant");
        w.value_num(r.reference_constant);
        w.key("matches_paper");
        w.value_bool(r.matches_reference);
        w.close_obj();
    }
    w.close_arr();
    w.close_obj();
    std::string s = w.str();
    s += '\n';
    return s;
}

std::string to_text(const VerificationRun& run) {
    std::ostringstream out;
    out << "meanforge " << kToolVersion << " verification report\n";
    out << "seed " << run.seed << ", tolerance " << format_double(run.tolerance, 15) << "\n";
    if (!run.chains.empty()) out << "\nchains:\n";
    for (const auto& c : run.chains) {
        const PairStat* worst = c.report.worst_pair();
        out << "  " << c.chain->id << ": " << (c.report.holds ? "holds" : "refuted") << " ["
            << expectation_str(*c.chain) << (c.expectation_met ? " met" : " NOT MET") << "] "
            << "samples " << c.report.samples << ", violations " << c.report.violations;
        if (worst) {
            out << ", worst margin " << format_double(worst->worst_margin, 15);
            if (c.report.violations > 0) {
                out << " at (a, b) = (" << format_double(worst->witness_a, 15) << ", "
                    << format_double(worst->witness_b, 15) << ")";
            }
        }
        out << "\n";
    }
    if (!run.ratios.empty()) out << "\nratio constants:\n";
    for (const auto& r : run.ratios) {
        out << "  " << difference_name(r.prof.pair.numerator()) << "/"
            << difference_name(r.prof.pair.denominator()) << ": g(1) = "
            << format_double(r.prof.value_at_1, 15) << ", sup = "
            << format_double(r.prof.sup, 15) << ", inf = " << format_double(r.prof.inf, 15)
            << ", pattern " << pattern_name(r.prof.pattern) << ", reference "
            << r.reference_constant_str << (r.matches_reference ? " (match)" : " (MISMATCH)")
            << "\n";
        if (r.note) out << "    note: " << r.note << "\n";
    }
    return out.str();
}

std::string to_markdown(const VerificationRun& run) {
    std::ostringstream out;
    out << "# meanforge verification report\n\n";
    out << "seed " << run.seed << ", tolerance " << format_double(run.tolerance, 15) << "\n";
    if (!run.chains.empty()) {
        out << "\n## Chains\n\n";
        out << "| id | expectation | holds | violations | worst margin |\n";
        out << "|----|-------------|-------|------------|--------------|\n";
        for (const auto& c : run.chains) {
            const PairStat* worst = c.report.worst_pair();
            out << "| " << c.chain->id << " | " << expectation_str(*c.chain) << " | "
                << (c.report.holds ? "yes" : "no") << " | " << c.report.violations << " | "
                << (worst ? format_double(worst->worst_margin, 15) : "-") << " |\n";
        }
    }
    if (!run.ratios.empty()) {
        out << "\n## Ratio constants\n\n";
        out << "| num | den | g(1) | sup | inf | pattern | reference | match |\n";
        out << "|-----|-----|------|-----|-----|---------|-----------|-------|\n";
        for (const auto& r : run.ratios) {
            out << "| " << difference_name(r.prof.pair.numerator()) << " | "
                << difference_name(r.prof.pair.denominator()) << " | "
                << format_double(r.prof.value_at_1, 15) << " | "
                << format_double(r.prof.sup, 15) << " | " << format_double(r.prof.inf, 15)
                << " | " << pattern_name(r.prof.pattern) << " | " << r.reference_constant_str
                << " | " << (r.matches_reference ? "yes" : "no") << " |\n";
        }
    }
    return out.str();
}

std::string render(const VerificationRun& run, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:     return to_json(run);
        case ReportFormat::markdown: return to_markdown(run);
        case ReportFormat::text:     return to_text(run);
    }
    return {};
}

}  // namespace meanforge
