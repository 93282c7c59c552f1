#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meanforge/convexity.hpp"
#include "meanforge/sampling.hpp"

namespace meanforge {

/// Exact rational coefficient for chain members.
struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// A closed expression over the seven mean values at one pair:
///   leaf          one mean
///   affine        sum of rational multiples of means (+ constant)
///   rms           sqrt of an affine combination of squared means
///   geometric     sqrt(X * Y)
///   harmonic      2XY / (X + Y)
///   min_ab/max_ab min / max of the raw pair coordinates
struct MeanExpr {
    enum class Node { leaf, affine, rms, geometric, harmonic, min_ab, max_ab };

    Node node = Node::leaf;
    std::vector<std::pair<Rational, MeanKind>> terms;  // affine / rms
    Rational constant{0, 1};                           // affine only
    MeanKind lhs = MeanKind::A;                        // leaf / geometric / harmonic
    MeanKind rhs = MeanKind::A;                        // geometric / harmonic

    double eval(const MeanValues& m, const PositivePair& p) const;
    std::string prefix() const;  // small prefix notation, e.g. (affine (2/3 H) (1/3 S))
};

MeanExpr mx_leaf(MeanKind k);
MeanExpr mx_affine(std::vector<std::pair<Rational, MeanKind>> terms, Rational constant = {0, 1});
MeanExpr mx_rms(std::vector<std::pair<Rational, MeanKind>> terms);
MeanExpr mx_geometric(MeanKind a, MeanKind b);
MeanExpr mx_harmonic(MeanKind a, MeanKind b);
MeanExpr mx_min_ab();
MeanExpr mx_max_ab();

/// An ordered list of members asserted nondecreasing for all positive pairs,
/// plus whether verification is expected to confirm or refute it.
struct InequalityChain {
    std::string id;
    std::string source;  // human-readable statement of the chain
    std::vector<MeanExpr> members;
    enum class Expectation { expected_holds, expected_fails } expectation =
        Expectation::expected_holds;
};

/// The full built-in registry. Ids are stable and unique.
const std::vector<InequalityChain>& builtin_chains();
const InequalityChain* find_chain(std::string_view id);

/// Registry as a structured text document: one record per chain with id,
/// expectation, source, and members in prefix notation.
std::string export_registry();

std::vector<double> evaluate_chain(const InequalityChain& chain, const PositivePair& p);

/// Outcome for one adjacent member pair across all samples.
struct PairStat {
    double worst_margin;       // most negative (or least positive) margin seen
    long long worst_index;     // sample index attaining it (lowest on ties)
    double witness_a;
    double witness_b;
    long long violations;
};

struct ChainReport {
    std::string chain_id;
    long long samples = 0;
    std::vector<PairStat> pairs;
    long long violations = 0;
    bool holds = true;

    const PairStat* worst_pair() const;  // null when the chain has no pairs
};

/// Checks every adjacent pair of the chain on every sample of the spec.
/// Margins are tolerated relative to max(a,b) + max_i |member_i|, so the
/// verdict is invariant under rescaling both coordinates. Work is split
/// over `workers` threads; the merged report does not depend on the split.
ChainReport verify_chain(const InequalityChain& chain, const SamplingSpec& spec,
                         const ToleranceConfig& tol = {}, int workers = 0,
                         double scale = 1.0);

/// Positive auxiliary attached to the eq58 chain: the displayed difference
/// of squares behind its single member inequality.
double eq58_auxiliary(double x);
double eq58_auxiliary_min(const GridSpec& grid);

}  // namespace meanforge
