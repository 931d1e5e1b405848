#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssi/rules.hpp"
#include "ssi/trace.hpp"
#include "ssi/valuation.hpp"

namespace ssi {

enum class Algorithm : std::uint8_t {
    StrategyImprovement,            // one strategy, plain improving moves
    SymmetricImprovement,           // both strategies, filtered by counterstrategy edges
    GeneralizedSymmetricImprovement // both strategies, filtered by opponent-valuation candidate sets
};

inline std::string_view name_of(Algorithm a) noexcept
{
    switch (a) {
    case Algorithm::StrategyImprovement: return "si";
    case Algorithm::SymmetricImprovement: return "ssi";
    case Algorithm::GeneralizedSymmetricImprovement: return "gssi";
    }
    return "?";
}

inline Algorithm algorithm_from_name(std::string_view s)
{
    if (s == "si") return Algorithm::StrategyImprovement;
    if (s == "ssi") return Algorithm::SymmetricImprovement;
    if (s == "gssi") return Algorithm::GeneralizedSymmetricImprovement;
    throw InputError("unknown algorithm '" + std::string(s) + "'");
}

struct SolveOptions
{
    /// Abort with InvariantViolation after this many switching passes.
    std::size_t max_iterations = std::numeric_limits<std::size_t>::max();
    bool record_trace = true;
};

struct SolveResult
{
    std::optional<Strategy> even;
    std::optional<Strategy> odd;
    std::optional<Valuation> even_value;
    std::optional<Valuation> odd_value;
    std::size_t iterations = 0; // passes that applied at least one switch
    IterationTrace trace;
};

struct OptimalityCertificate
{
    bool optimal = false;
    EdgeSet improving_even;
    EdgeSet improving_odd;
    std::vector<NodeId> value_mismatch; // nodes where the two valuations differ
};

/// Both strategies must be admissible (NotAdmissible otherwise).
inline OptimalityCertificate verify_optimal(const ParityGame &g, const Strategy &even, const Strategy &odd)
{
    if (even.player() != Player::Even || odd.player() != Player::Odd) {
        throw InvalidStrategy("verify_optimal expects an Even and an Odd strategy");
    }
    const Valuation xe = valuate(g, even);
    const Valuation xo = valuate(g, odd);
    OptimalityCertificate cert;
    cert.improving_even = improving_moves(g, even, xe);
    cert.improving_odd = improving_moves(g, odd, xo);
    for (NodeId v = 0; v < g.size(); ++v) {
        if (xe[v] != xo[v]) cert.value_mismatch.push_back(v);
    }
    cert.optimal = cert.improving_even.empty() && cert.improving_odd.empty() && cert.value_mismatch.empty();
    return cert;
}

namespace detail {

inline void record_switches(IterationRecord &rec, const ParityGame &g, const EdgeSet &chosen)
{
    rec.switched.reserve(chosen.size());
    for (const Edge &e : chosen) rec.switched.push_back(SwitchedEdge{g.owner(e.from), e});
}

inline void check_budget(std::size_t iterations, const SolveOptions &opt)
{
    if (iterations >= opt.max_iterations) {
        throw InvariantViolation("iteration limit of " + std::to_string(opt.max_iterations) + " reached");
    }
}

/// Shared loop of the two symmetric variants. The filters receive
/// (even, odd, even valuation, odd valuation) and return the edge set that
/// each player's improving moves are intersected with.
template <class FilterEven, class FilterOdd>
SolveResult run_symmetric(const ParityGame &g, Strategy even, Strategy odd, ImprovementRule rule,
                          const SolveOptions &opt, FilterEven filter_even, FilterOdd filter_odd)
{
    if (even.player() != Player::Even || odd.player() != Player::Odd) {
        throw InvalidStrategy("symmetric solvers expect an Even and an Odd strategy");
    }
    check_strategy(g, even);
    check_strategy(g, odd);
    SolveResult result;
    for (std::size_t index = 1;; ++index) {
        Valuation xe = valuate(g, even);
        Valuation xo = valuate(g, odd);
        const EdgeSet ie = improving_moves(g, even, xe);
        const EdgeSet io = improving_moves(g, odd, xo);

        EdgeSet candidates = intersect(ie, filter_even(even, odd, xe, xo));
        candidates.merge(intersect(io, filter_odd(even, odd, xe, xo)));

        IterationRecord rec{index, {}, ie.size(), io.size(), candidates.size()};
        const EdgeSet chosen = rule(candidates, RuleContext{g, &xe, &xo});
        check_rule_axioms(candidates, chosen);

        if (chosen.empty()) {
            if (!ie.empty() || !io.empty()) {
                throw InvariantViolation("no candidate switch although a strategy is not optimal");
            }
            for (NodeId v = 0; v < g.size(); ++v) {
                if (xe[v] != xo[v]) throw InvariantViolation("final valuations differ at node " + std::to_string(v));
            }
            if (opt.record_trace) result.trace.iterations.push_back(std::move(rec));
            result.trace.final_even = even;
            result.trace.final_odd = odd;
            result.even = std::move(even);
            result.odd = std::move(odd);
            result.even_value = std::move(xe);
            result.odd_value = std::move(xo);
            return result;
        }

        check_budget(result.iterations, opt);
        if (opt.record_trace) {
            record_switches(rec, g, chosen);
            result.trace.iterations.push_back(std::move(rec));
        }
        even = apply_switches(std::move(even), chosen, g);
        odd = apply_switches(std::move(odd), chosen, g);
        ++result.iterations;
    }
}

} // namespace detail

/// Classic strategy improvement for whichever player owns `start`.
inline SolveResult run_si(const ParityGame &g, Strategy start, ImprovementRule rule, const SolveOptions &opt = {})
{
    check_strategy(g, start);
    const Player p = start.player();
    SolveResult result;
    for (std::size_t index = 1;; ++index) {
        Valuation xi = valuate(g, start);
        const EdgeSet imp = improving_moves(g, start, xi);
        IterationRecord rec{index, {}, 0, 0, imp.size()};
        (p == Player::Even ? rec.improving_even : rec.improving_odd) = imp.size();

        RuleContext ctx{g, p == Player::Even ? &xi : nullptr, p == Player::Odd ? &xi : nullptr};
        const EdgeSet chosen = rule(imp, ctx);
        check_rule_axioms(imp, chosen);

        if (chosen.empty()) {
            if (opt.record_trace) result.trace.iterations.push_back(std::move(rec));
            (p == Player::Even ? result.trace.final_even : result.trace.final_odd) = start;
            (p == Player::Even ? result.even : result.odd) = std::move(start);
            (p == Player::Even ? result.even_value : result.odd_value) = std::move(xi);
            return result;
        }

        detail::check_budget(result.iterations, opt);
        if (opt.record_trace) {
            detail::record_switches(rec, g, chosen);
            result.trace.iterations.push_back(std::move(rec));
        }
        start = apply_switches(std::move(start), chosen, g);
        ++result.iterations;
    }
}

/// Symmetric improvement: Even may only switch along the counterstrategy to
/// Odd's strategy and vice versa.
inline SolveResult run_ssi(const ParityGame &g, Strategy even, Strategy odd, ImprovementRule rule,
                           const SolveOptions &opt = {})
{
    return detail::run_symmetric(
        g, std::move(even), std::move(odd), std::move(rule), opt,
        [](const Strategy &, const Strategy &, const Valuation &, const Valuation &xo) {
            return strategy_edges(xo.counter);
        },
        [](const Strategy &, const Strategy &, const Valuation &xe, const Valuation &) {
            return strategy_edges(xe.counter);
        });
}

/// Generalised symmetric improvement: improving moves are filtered by the
/// edges that are weakly better under the opponent's valuation.
inline SolveResult run_gssi(const ParityGame &g, Strategy even, Strategy odd, ImprovementRule rule,
                            const SolveOptions &opt = {})
{
    return detail::run_symmetric(
        g, std::move(even), std::move(odd), std::move(rule), opt,
        [&g](const Strategy &e, const Strategy &, const Valuation &, const Valuation &xo) { return j_set(g, e, xo); },
        [&g](const Strategy &, const Strategy &o, const Valuation &xe, const Valuation &) { return j_set(g, o, xe); });
}

/// Dispatch by algorithm; `even`/`odd` must be supplied as each algorithm requires.
inline SolveResult solve(const ParityGame &g, Algorithm algo, std::optional<Strategy> even, std::optional<Strategy> odd,
                         ImprovementRule rule, const SolveOptions &opt = {})
{
    switch (algo) {
    case Algorithm::StrategyImprovement:
        if (even && odd) throw InputError("strategy improvement takes a single initial strategy");
        if (even) return run_si(g, std::move(*even), std::move(rule), opt);
        if (odd) return run_si(g, std::move(*odd), std::move(rule), opt);
        throw InputError("strategy improvement needs an initial strategy");
    case Algorithm::SymmetricImprovement:
    case Algorithm::GeneralizedSymmetricImprovement:
        if (!even || !odd) throw InputError("symmetric solvers need initial strategies for both players");
        return algo == Algorithm::SymmetricImprovement
                   ? run_ssi(g, std::move(*even), std::move(*odd), std::move(rule), opt)
                   : run_gssi(g, std::move(*even), std::move(*odd), std::move(rule), opt);
    }
    throw InputError("unknown algorithm");
}

} // namespace ssi
