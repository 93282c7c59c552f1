#include "meanforge/gen_functions.hpp"

#include <array>
#include <cmath>

namespace meanforge {

namespace {

struct KindInfo {
    DifferenceKind kind;
    const char* name;
    MeanKind minuend;
    MeanKind subtrahend;
    bool closed;
};

constexpr std::array<KindInfo, kDifferenceKindCount> kKinds = {{
    {DifferenceKind::SA,   "SA",   MeanKind::S,  MeanKind::A,  true},
    {DifferenceKind::SN2,  "SN2",  MeanKind::S,  MeanKind::N2, true},
    {DifferenceKind::SN3,  "SN3",  MeanKind::S,  MeanKind::N3, true},
    {DifferenceKind::SN1,  "SN1",  MeanKind::S,  MeanKind::N1, true},
    {DifferenceKind::SG,   "SG",   MeanKind::S,  MeanKind::G,  true},
    {DifferenceKind::SH,   "SH",   MeanKind::S,  MeanKind::H,  true},
    {DifferenceKind::AN2,  "AN2",  MeanKind::A,  MeanKind::N2, true},
    {DifferenceKind::AN3,  "AN3",  MeanKind::A,  MeanKind::N3, false},
    {DifferenceKind::AN1,  "AN1",  MeanKind::A,  MeanKind::N1, false},
    {DifferenceKind::AG,   "AG",   MeanKind::A,  MeanKind::G,  true},
    {DifferenceKind::AH,   "AH",   MeanKind::A,  MeanKind::H,  true},
    {DifferenceKind::N2N3, "N2N3", MeanKind::N2, MeanKind::N3, false},
    {DifferenceKind::N2N1, "N2N1", MeanKind::N2, MeanKind::N1, true},
    {DifferenceKind::N2G,  "N2G",  MeanKind::N2, MeanKind::G,  true},
    {DifferenceKind::N2H,  "N2H",  MeanKind::N2, MeanKind::H,  false},
    {DifferenceKind::N3N1, "N3N1", MeanKind::N3, MeanKind::N1, false},
    {DifferenceKind::N3G,  "N3G",  MeanKind::N3, MeanKind::G,  false},
    {DifferenceKind::N3H,  "N3H",  MeanKind::N3, MeanKind::H,  false},
    {DifferenceKind::N1G,  "N1G",  MeanKind::N1, MeanKind::G,  false},
    {DifferenceKind::N1H,  "N1H",  MeanKind::N1, MeanKind::H,  false},
}};

const KindInfo& info(DifferenceKind k) { return kKinds[static_cast<int>(k)]; }

}  // namespace

std::string_view difference_name(DifferenceKind k) { return info(k).name; }

std::optional<DifferenceKind> parse_difference_kind(std::string_view name) {
    for (const auto& ki : kKinds) {
        if (name == ki.name) return ki.kind;
    }
    return std::nullopt;
}

bool has_closed_forms(DifferenceKind k) { return info(k).closed; }

std::pair<MeanKind, MeanKind> difference_means(DifferenceKind k) {
    return {info(k).minuend, info(k).subtrahend};
}

const GeneratingFunction& generating_function(DifferenceKind k) {
    static const std::array<GeneratingFunction, kDifferenceKindCount> registry = [] {
        std::array<GeneratingFunction, kDifferenceKindCount> r;
        for (const auto& ki : kKinds) {
            GeneratingFunction gf;
            gf.kind = ki.kind;
            gf.has_closed_forms = ki.closed;
            if (ki.closed) {
                gf.f = [k = ki.kind](double x) { return closed::f(k, x); };
                gf.f1 = [k = ki.kind](double x) { return closed::f1(k, x); };
                gf.f2 = [k = ki.kind](double x) { return closed::f2(k, x); };
            } else {
                // Mean-difference profile; no analytic derivatives.
                gf.f = [x_ = ki.minuend, y_ = ki.subtrahend](double x) {
                    const MeanValues m = all_means(PositivePair(1.0, x));
                    return mean_of(m, x_) - mean_of(m, y_);
                };
            }
            r[static_cast<int>(ki.kind)] = std::move(gf);
        }
        return r;
    }();
    return registry[static_cast<int>(k)];
}

double phi(const GeneratingFunction& gf, const PositivePair& p) {
    return p.a() * gf.f(p.b() / p.a());
}

double difference(DifferenceKind k, const PositivePair& p) {
    const MeanValues m = all_means(p);
    const auto [x, y] = difference_means(k);
    return mean_of(m, x) - mean_of(m, y);
}

std::array<double, 5> identity_residuals(const PositivePair& p) {
    const MeanValues m = all_means(p);
    auto d = [&](MeanKind x, MeanKind y) { return mean_of(m, x) - mean_of(m, y); };
    const double ag = d(MeanKind::A, MeanKind::G);
    return {
        std::fabs(ag - 2.0 * d(MeanKind::N1, MeanKind::G)),
        std::fabs(ag - 2.0 * d(MeanKind::A, MeanKind::N1)),
        std::fabs(ag - 3.0 * d(MeanKind::A, MeanKind::N3)),
        std::fabs(ag - 1.5 * d(MeanKind::N3, MeanKind::G)),
        std::fabs(ag - 6.0 * d(MeanKind::N3, MeanKind::N1)),
    };
}

}  // namespace meanforge
