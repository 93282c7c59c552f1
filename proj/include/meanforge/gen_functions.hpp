#pragma once

#include <array>
#include <functional>
#include <utility>

#include "meanforge/closed_forms.hpp"
#include "meanforge/means.hpp"

namespace meanforge {

/// The two means whose difference a kind denotes (minuend, subtrahend).
std::pair<MeanKind, MeanKind> difference_means(DifferenceKind k);

/// One registry entry: the generating profile f with M(a,b) = a*f(b/a),
/// plus analytic derivatives for the eleven kinds that have them.
/// f(1) = f'(1) = 0 for every closed-form kind, and f'' > 0 on (0, inf).
/// Kinds without closed forms get f from the mean-difference formulas and
/// empty derivative slots.
struct GeneratingFunction {
    DifferenceKind kind;
    std::function<double(double)> f;
    std::function<double(double)> f1;  // empty unless has_closed_forms
    std::function<double(double)> f2;  // empty unless has_closed_forms
    bool has_closed_forms = false;
};

/// Immutable registry lookup.
const GeneratingFunction& generating_function(DifferenceKind k);

/// phi_f(a,b) = a * f(b/a).
double phi(const GeneratingFunction& gf, const PositivePair& p);

/// M_XY(a,b) as a plain difference of mean values (defined for all kinds).
double difference(DifferenceKind k, const PositivePair& p);

/// Residuals of the five proportionality identities tying M_AG to
/// M_N1G, M_AN1, M_AN3, M_N3G, M_N3N1 (factors 2, 2, 3, 3/2, 6).
std::array<double, 5> identity_residuals(const PositivePair& p);

}  // namespace meanforge
