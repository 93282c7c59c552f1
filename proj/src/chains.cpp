#include "meanforge/chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "meanforge/parallel.hpp"

namespace meanforge {

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

double MeanExpr::eval(const MeanValues& m, const PositivePair& p) const {
    switch (node) {
        case Node::leaf:
            return mean_of(m, lhs);
        case Node::affine: {
            double acc = constant.value();
            for (const auto& [c, k] : terms) acc += c.value() * mean_of(m, k);
            return acc;
        }
        case Node::rms: {
            double acc = 0.0;
            for (const auto& [c, k] : terms) {
                const double v = mean_of(m, k);
                acc += c.value() * v * v;
            }
            return std::sqrt(acc);
        }
        case Node::geometric:
            return std::sqrt(mean_of(m, lhs)) * std::sqrt(mean_of(m, rhs));
        case Node::harmonic: {
            const double x = mean_of(m, lhs);
            const double y = mean_of(m, rhs);
            return 2.0 * (x / (x + y)) * y;
        }
        case Node::min_ab:
            return std::fmin(p.a(), p.b());
        case Node::max_ab:
            return std::fmax(p.a(), p.b());
    }
    return 0.0;
}

std::string MeanExpr::prefix() const {
    auto term_list = [&] {
        std::string s;
        for (const auto& [c, k] : terms) {
            s += " (" + c.str() + " " + std::string(mean_name(k)) + ")";
        }
        return s;
    };
    switch (node) {
        case Node::leaf:
            return std::string(mean_name(lhs));
        case Node::affine: {
            std::string s = "(affine" + term_list();
            if (constant.num != 0) s += " (const " + constant.str() + ")";
            return s + ")";
        }
        case Node::rms:
            return "(rms" + term_list() + ")";
        case Node::geometric:
            return "(geo " + std::string(mean_name(lhs)) + " " + std::string(mean_name(rhs)) + ")";
        case Node::harmonic:
            return "(har " + std::string(mean_name(lhs)) + " " + std::string(mean_name(rhs)) + ")";
        case Node::min_ab:
            return "(min a b)";
        case Node::max_ab:
            return "(max a b)";
    }
    return "?";
}

MeanExpr mx_leaf(MeanKind k) {
    MeanExpr e;
    e.node = MeanExpr::Node::leaf;
    e.lhs = k;
    return e;
}

MeanExpr mx_affine(std::vector<std::pair<Rational, MeanKind>> terms, Rational constant) {
    MeanExpr e;
    e.node = MeanExpr::Node::affine;
    e.terms = std::move(terms);
    e.constant = constant;
    return e;
}

MeanExpr mx_rms(std::vector<std::pair<Rational, MeanKind>> terms) {
    MeanExpr e;
    e.node = MeanExpr::Node::rms;
    e.terms = std::move(terms);
    return e;
}

MeanExpr mx_geometric(MeanKind a, MeanKind b) {
    MeanExpr e;
    e.node = MeanExpr::Node::geometric;
    e.lhs = a;
    e.rhs = b;
    return e;
}

MeanExpr mx_harmonic(MeanKind a, MeanKind b) {
    MeanExpr e;
    e.node = MeanExpr::Node::harmonic;
    e.lhs = a;
    e.rhs = b;
    return e;
}

MeanExpr mx_min_ab() {
    MeanExpr e;
    e.node = MeanExpr::Node::min_ab;
    return e;
}

MeanExpr mx_max_ab() {
    MeanExpr e;
    e.node = MeanExpr::Node::max_ab;
    return e;
}

namespace {

using K = MeanKind;
using Exp = InequalityChain::Expectation;

MeanExpr diff(K x, K y) { return mx_affine({{{1, 1}, x}, {{-1, 1}, y}}); }
MeanExpr scaled_diff(long long n, long long d, K x, K y) {
    return mx_affine({{{n, d}, x}, {{-n, d}, y}});
}

InequalityChain make(std::string id, std::string source, std::vector<MeanExpr> members,
                     Exp expectation = Exp::expected_holds) {
    return InequalityChain{std::move(id), std::move(source), std::move(members), expectation};
}

std::vector<InequalityChain> build_registry() {
    std::vector<InequalityChain> r;

    r.push_back(make("eq2", "power-mean order chain H <= G <= N1 <= A <= S",
                     {mx_leaf(K::H), mx_leaf(K::G), mx_leaf(K::N1), mx_leaf(K::A), mx_leaf(K::S)}));
    r.push_back(make("eq5", "N1 <= N3 <= N2", {mx_leaf(K::N1), mx_leaf(K::N3), mx_leaf(K::N2)}));
    r.push_back(make("eq6", "N2 <= A", {mx_leaf(K::N2), mx_leaf(K::A)}));
    r.push_back(make("eq7", "seven-mean chain H <= G <= N1 <= N3 <= N2 <= A <= S",
                     {mx_leaf(K::H), mx_leaf(K::G), mx_leaf(K::N1), mx_leaf(K::N3), mx_leaf(K::N2),
                      mx_leaf(K::A), mx_leaf(K::S)}));

    r.push_back(make("eq26", "difference chain anchored at S",
                     {diff(K::S, K::A), diff(K::S, K::N2), diff(K::S, K::N3), diff(K::S, K::N1),
                      diff(K::S, K::G), diff(K::S, K::H)}));
    r.push_back(make("eq27", "difference chain anchored at A",
                     {diff(K::A, K::N2), diff(K::A, K::N3), diff(K::A, K::N1), diff(K::A, K::G),
                      diff(K::A, K::H)}));
    r.push_back(make("eq28", "difference chain anchored at N2",
                     {diff(K::N2, K::N3), diff(K::N2, K::N1), diff(K::N2, K::G),
                      diff(K::N2, K::H)}));
    r.push_back(make("eq29", "difference chain anchored at N3",
                     {diff(K::N3, K::N1), diff(K::N3, K::G), diff(K::N3, K::H)}));
    r.push_back(make("eq30", "difference chain anchored at N1",
                     {diff(K::N1, K::G), diff(K::N1, K::H)}));
    r.push_back(make("eq31", "A + H <= N1 + N3 <= N1 + N2",
                     {mx_affine({{{1, 1}, K::A}, {{1, 1}, K::H}}),
                      mx_affine({{{1, 1}, K::N1}, {{1, 1}, K::N3}}),
                      mx_affine({{{1, 1}, K::N1}, {{1, 1}, K::N2}})}));

    r.push_back(make("eq38",
                     "M_SA <= (1/3) M_SH <= (1/2) M_AH <= (1/2) M_SG <= M_AG",
                     {diff(K::S, K::A), scaled_diff(1, 3, K::S, K::H),
                      scaled_diff(1, 2, K::A, K::H), scaled_diff(1, 2, K::S, K::G),
                      diff(K::A, K::G)}));

    r.push_back(make(
        "eq51", "ten-member refinement of the five-mean chain",
        {mx_leaf(K::H), mx_leaf(K::G), mx_affine({{{2, 3}, K::H}, {{1, 3}, K::S}}),
         mx_affine({{{1, 2}, K::A}, {{1, 2}, K::H}}),
         mx_affine({{{1, 2}, K::S}, {{1, 2}, K::G}}),
         mx_affine({{{1, 3}, K::H}, {{2, 3}, K::S}}), mx_leaf(K::A),
         mx_affine({{{1, 1}, K::S}, {{1, 1}, K::H}, {{-1, 1}, K::G}}), mx_leaf(K::S),
         mx_affine({{{3, 1}, K::A}, {{-3, 1}, K::G}, {{1, 1}, K::H}})}));

    r.push_back(make("eq52", "baseline min <= H <= G <= A <= S <= max",
                     {mx_min_ab(), mx_leaf(K::H), mx_leaf(K::G), mx_leaf(K::A), mx_leaf(K::S),
                      mx_max_ab()}));

    r.push_back(make(
        "eq53", "twelve-member refinement inserting H(A,H) and S(A,H)",
        {mx_leaf(K::H), mx_harmonic(K::A, K::H), mx_leaf(K::G),
         mx_affine({{{2, 3}, K::H}, {{1, 3}, K::S}}),
         mx_affine({{{1, 2}, K::A}, {{1, 2}, K::H}}), mx_rms({{{1, 2}, K::A}, {{1, 2}, K::H}}),
         mx_affine({{{1, 2}, K::S}, {{1, 2}, K::G}}),
         mx_affine({{{1, 3}, K::H}, {{2, 3}, K::S}}), mx_leaf(K::A),
         mx_affine({{{1, 1}, K::S}, {{1, 1}, K::H}, {{-1, 1}, K::G}}), mx_leaf(K::S),
         mx_affine({{{3, 1}, K::A}, {{-3, 1}, K::G}, {{1, 1}, K::H}})}));

    r.push_back(make("eq54", "seven-member refinement via the substitution (a,b) -> (A,H)",
                     {mx_leaf(K::H), mx_harmonic(K::A, K::H), mx_leaf(K::G),
                      mx_affine({{{1, 2}, K::A}, {{1, 2}, K::H}}),
                      mx_rms({{{1, 2}, K::A}, {{1, 2}, K::H}}), mx_leaf(K::A), mx_leaf(K::S)}));

    r.push_back(make("eq58", "S(A,H) <= (S + G)/2",
                     {mx_rms({{{1, 2}, K::A}, {{1, 2}, K::H}}),
                      mx_affine({{{1, 2}, K::S}, {{1, 2}, K::G}})}));

    r.push_back(make("eq59",
                     "(1/8) M_AH <= M_N2N1 <= (1/3) M_N2G <= (1/4) M_AG <= M_AN2",
                     {scaled_diff(1, 8, K::A, K::H), diff(K::N2, K::N1),
                      scaled_diff(1, 3, K::N2, K::G), scaled_diff(1, 4, K::A, K::G),
                      diff(K::A, K::N2)}));

    r.push_back(make(
        "eq72", "ten-member refinement around N1 and N2",
        {mx_leaf(K::H), mx_leaf(K::G),
         mx_affine({{{1, 5}, K::G}, {{1, 5}, K::H}, {{3, 5}, K::N2}}),
         mx_affine({{{1, 3}, K::G}, {{2, 3}, K::N2}}), mx_leaf(K::N1),
         mx_affine({{{2, 9}, K::A}, {{7, 9}, K::N1}}), mx_leaf(K::N2),
         mx_affine({{{1, 2}, K::A}, {{1, 2}, K::N1}}),
         mx_affine({{{7, 8}, K::A}, {{1, 8}, K::H}}), mx_leaf(K::A)}));

    r.push_back(make("eq73", "baseline H <= G <= N1 <= N2 <= A",
                     {mx_leaf(K::H), mx_leaf(K::G), mx_leaf(K::N1), mx_leaf(K::N2),
                      mx_leaf(K::A)}));

    r.push_back(make("eq74", "M_SA <= (4/5) M_SN2 <= 4 M_AN2",
                     {diff(K::S, K::A), scaled_diff(4, 5, K::S, K::N2),
                      scaled_diff(4, 1, K::A, K::N2)}));
    r.push_back(make("eq75", "M_SH <= 2 M_SN1 <= (3/2) M_SG",
                     {diff(K::S, K::H), scaled_diff(2, 1, K::S, K::N1),
                      scaled_diff(3, 2, K::S, K::G)}));
    r.push_back(make("eq76", "M_SA <= (3/4) M_SN3 <= (2/3) M_SN1",
                     {diff(K::S, K::A), scaled_diff(3, 4, K::S, K::N3),
                      scaled_diff(2, 3, K::S, K::N1)}));

    const MeanExpr eq95_prefix[] = {
        mx_leaf(K::G), mx_affine({{{1, 4}, K::S}, {{3, 4}, K::G}}), mx_leaf(K::N1),
        mx_affine({{{1, 9}, K::S}, {{8, 9}, K::N1}}), mx_leaf(K::N3), mx_leaf(K::N2),
        mx_affine({{{1, 2}, K::A}, {{1, 2}, K::N1}}),
        mx_affine({{{1, 3}, K::S}, {{2, 3}, K::N1}})};
    std::vector<MeanExpr> eq95a(std::begin(eq95_prefix), std::end(eq95_prefix));
    eq95a.push_back(mx_affine({{{1, 5}, K::S}, {{4, 5}, K::N2}}));
    eq95a.push_back(mx_leaf(K::A));
    std::vector<MeanExpr> eq95b(std::begin(eq95_prefix), std::end(eq95_prefix));
    eq95b.push_back(mx_affine({{{1, 4}, K::S}, {{3, 4}, K::N3}}));
    eq95b.push_back(mx_leaf(K::A));
    r.push_back(make("eq95", "refinement of the seven-mean chain, (S + 4 N2)/5 branch",
                     std::move(eq95a)));
    r.push_back(make("eq95-alt", "refinement of the seven-mean chain, (S + 3 N3)/4 branch",
                     std::move(eq95b)));

    r.push_back(make("eq96-as-printed",
                     "G <= (S + 2H)/2 <= N1 <= (S + H)/2 <= N2, as stated (refuted numerically)",
                     {mx_leaf(K::G), mx_affine({{{1, 2}, K::S}, {{1, 1}, K::H}}), mx_leaf(K::N1),
                      mx_affine({{{1, 2}, K::S}, {{1, 2}, K::H}}), mx_leaf(K::N2)},
                     Exp::expected_fails));
    r.push_back(make("eq96-corrected",
                     "derived variant G <= (S + 2H)/3 <= N1 <= (S + H)/2 <= N2 (not as stated)",
                     {mx_leaf(K::G), mx_affine({{{1, 3}, K::S}, {{2, 3}, K::H}}), mx_leaf(K::N1),
                      mx_affine({{{1, 2}, K::S}, {{1, 2}, K::H}}), mx_leaf(K::N2)}));

    return r;
}

}  // namespace

const std::vector<InequalityChain>& builtin_chains() {
    static const std::vector<InequalityChain> registry = build_registry();
    return registry;
}

const InequalityChain* find_chain(std::string_view id) {
    for (const auto& chain : builtin_chains()) {
        if (chain.id == id) return &chain;
    }
    return nullptr;
}

std::string export_registry() {
    std::ostringstream out;
    for (const auto& chain : builtin_chains()) {
        out << "chain " << chain.id << "\n";
        out << "  expectation "
            << (chain.expectation == Exp::expected_holds ? "expected_holds" : "expected_fails")
            << "\n";
        out << "  source " << chain.source << "\n";
        for (const auto& member : chain.members) {
            out << "  member " << member.prefix() << "\n";
        }
    }
    return out.str();
}

std::vector<double> evaluate_chain(const InequalityChain& chain, const PositivePair& p) {
    const MeanValues m = all_means(p);
    std::vector<double> values;
    values.reserve(chain.members.size());
    for (const auto& member : chain.members) {
        values.push_back(member.eval(m, p));
    }
    return values;
}

const PairStat* ChainReport::worst_pair() const {
    const PairStat* worst = nullptr;
    for (const auto& ps : pairs) {
        if (!worst || ps.worst_margin < worst->worst_margin) worst = &ps;
    }
    return worst;
}

namespace {

struct Accum {
    double worst_margin = std::numeric_limits<double>::infinity();
    long long worst_index = std::numeric_limits<long long>::max();
    double witness_a = 0.0;
    double witness_b = 0.0;
    long long violations = 0;

    void offer(double margin, long long index, const PositivePair& p) {
        if (margin < worst_margin || (margin == worst_margin && index < worst_index)) {
            worst_margin = margin;
            worst_index = index;
            witness_a = p.a();
            witness_b = p.b();
        }
    }

    // Commutative and associative, so the merged result does not depend on
    // how the sample range was partitioned.
    void merge(const Accum& other) {
        violations += other.violations;
        if (other.worst_margin < worst_margin
            || (other.worst_margin == worst_margin && other.worst_index < worst_index)) {
            worst_margin = other.worst_margin;
            worst_index = other.worst_index;
            witness_a = other.witness_a;
            witness_b = other.witness_b;
        }
    }
};

void scan_range(const InequalityChain& chain, const SamplingSpec& spec,
                const ToleranceConfig& tol, double scale, long long lo, long long hi,
                std::vector<Accum>& accums) {
    const std::size_t npairs = chain.members.size() - 1;
    std::vector<double> values(chain.members.size());
    for (long long i = lo; i < hi; ++i) {
        const PositivePair p = sample_pair(spec, i, scale);
        const MeanValues m = all_means(p);
        double max_abs = 0.0;
        for (std::size_t j = 0; j < chain.members.size(); ++j) {
            values[j] = chain.members[j].eval(m, p);
            max_abs = std::fmax(max_abs, std::fabs(values[j]));
        }
        const double slack = tol.slack(std::fmax(p.a(), p.b()) + max_abs);
        for (std::size_t j = 0; j < npairs; ++j) {
            const double margin = values[j + 1] - values[j];
            accums[j].offer(margin, i, p);
            if (margin < -slack) ++accums[j].violations;
        }
    }
}

}  // namespace

ChainReport verify_chain(const InequalityChain& chain, const SamplingSpec& spec,
                         const ToleranceConfig& tol, int workers, double scale) {
    spec.validate();
    if (chain.members.size() < 2) {
        throw std::domain_error("verify_chain requires a chain with at least two members");
    }
    if (workers <= 0) workers = worker_count();
    const long long total = spec.total_samples();
    const std::size_t npairs = chain.members.size() - 1;

    std::vector<std::vector<Accum>> partials;
    if (workers == 1 || total < 4096) {
        partials.emplace_back(npairs);
        scan_range(chain, spec, tol, scale, 0, total, partials.back());
    } else {
        partials.assign(static_cast<std::size_t>(workers), std::vector<Accum>(npairs));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const long long lo = total * w / workers;
            const long long hi = total * (w + 1) / workers;
            pool.emplace_back([&, lo, hi, w] {
                scan_range(chain, spec, tol, scale, lo, hi,
                           partials[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& t : pool) t.join();
    }

    ChainReport rep;
    rep.chain_id = chain.id;
    rep.samples = total;
    rep.pairs.reserve(npairs);
    for (std::size_t j = 0; j < npairs; ++j) {
        Accum merged = partials[0][j];
        for (std::size_t w = 1; w < partials.size(); ++w) merged.merge(partials[w][j]);
        rep.pairs.push_back(PairStat{merged.worst_margin, merged.worst_index, merged.witness_a,
                                     merged.witness_b, merged.violations});
        rep.violations += merged.violations;
    }
    rep.holds = rep.violations == 0;
    return rep;
}

double eq58_auxiliary(double x) {
    const double q = (x + 1.0) * (x + 1.0);
    return (8.0 * x * x + q * std::sqrt(2.0 * x * (x * x + 1.0))) / (4.0 * q);
}

double eq58_auxiliary_min(const GridSpec& grid) {
    double lo = std::numeric_limits<double>::infinity();
    for (double x : grid_points(grid)) lo = std::fmin(lo, eq58_auxiliary(x));
    return lo;
}

}  // namespace meanforge
