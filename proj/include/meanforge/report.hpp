#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meanforge/chains.hpp"
#include "meanforge/ratio.hpp"

namespace meanforge {

enum class ReportFormat { text, json, markdown };

struct ChainOutcome {
    const InequalityChain* chain;
    ChainReport report;
    bool expectation_met;
};

struct RatioOutcome {
    RatioProfile prof;
    double reference_constant;          // tabulated g(1)
    const char* reference_constant_str;
    bool matches_reference;
    const char* note;  // may be null
};

/// Everything one verification run produces. Serialization is byte-stable:
/// no timestamps, no environment data, numbers at 17 significant digits in
/// JSON (15 in text), fixed key order.
struct VerificationRun {
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<ChainOutcome> chains;
    std::vector<RatioOutcome> ratios;

    bool all_expectations_met() const;
};

ChainOutcome make_chain_outcome(const InequalityChain& chain, ChainReport report);
RatioOutcome make_ratio_outcome(const RatioProfile& prof);

std::string to_json(const VerificationRun& run);
std::string to_text(const VerificationRun& run);
std::string to_markdown(const VerificationRun& run);
std::string render(const VerificationRun& run, ReportFormat format);

/// Fixed-significant-digit float rendering used by the writers.
std::string format_double(double v, int significant_digits);

}  // namespace meanforge
