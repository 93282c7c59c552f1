#pragma once

#include <cstdint>
#include <cmath>

#include "meanforge/means.hpp"

namespace meanforge {

/// Deterministic sample plan: pairs (1, x) with x log-uniform in
/// [ratio_min, ratio_max]. Sample i is a pure function of (seed, i), so
/// streams are reproducible and independent of evaluation order.
struct SamplingSpec {
    long long count = 1'000'000;
    std::uint64_t seed = 1;
    double ratio_min = 1e-8;
    double ratio_max = 1e8;
    bool include_edge_cases = true;  // prepends x in {1, 1+1e-9, 1-1e-9, ratio_min, ratio_max}

    void validate() const;  // throws std::domain_error
    long long total_samples() const { return count + (include_edge_cases ? 5 : 0); }
};

/// SplitMix64 scramble; the stream generator below feeds it the sample index.
std::uint64_t splitmix64(std::uint64_t z);

/// The ratio b/a of sample i under the spec, i in [0, total_samples()).
double sample_ratio(const SamplingSpec& spec, long long i);

/// The sample itself; `scale` multiplies both coordinates (used by the
/// homogeneity checks, 1 otherwise).
PositivePair sample_pair(const SamplingSpec& spec, long long i, double scale = 1.0);

}  // namespace meanforge
