#include "meanforge/sampling.hpp"

#include <stdexcept>

namespace meanforge {

void SamplingSpec::validate() const {
    if (count < 1) throw std::domain_error("SamplingSpec requires count >= 1");
    if (!(ratio_min > 0.0) || !(ratio_min < ratio_max) || !std::isfinite(ratio_max)) {
        throw std::domain_error("SamplingSpec requires 0 < ratio_min < ratio_max < inf");
    }
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double sample_ratio(const SamplingSpec& spec, long long i) {
    if (spec.include_edge_cases) {
        switch (i) {
            case 0: return 1.0;
            case 1: return 1.0 + 1e-9;
            case 2: return 1.0 - 1e-9;
            case 3: return spec.ratio_min;
            case 4: return spec.ratio_max;
            default: i -= 5; break;
        }
    }
    // Stateless: the i-th draw mixes (seed, i) so any subrange of the stream
    // can be generated independently by any worker.
    const std::uint64_t z =
        splitmix64(spec.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1)));
    const double u = static_cast<double>(z >> 11) * 0x1.0p-53;  // [0, 1)
    const double lo = std::log(spec.ratio_min);
    const double hi = std::log(spec.ratio_max);
    const double x = std::exp(lo + u * (hi - lo));
    // Clamp against rounding at the exp/log round trip: bounds are a contract.
    return std::fmin(std::fmax(x, spec.ratio_min), spec.ratio_max);
}

PositivePair sample_pair(const SamplingSpec& spec, long long i, double scale) {
    return PositivePair(scale, scale * sample_ratio(spec, i));
}

}  // namespace meanforge
