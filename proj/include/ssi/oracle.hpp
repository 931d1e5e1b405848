#pragma once

// Brute-force reference implementations. Everything here walks plays
// explicitly and enumerates positional strategies; none of it calls the
// relaxation engine. Only suitable for tiny games.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ssi/game.hpp"
#include "ssi/play_value.hpp"
#include "ssi/strategy.hpp"

namespace ssi::oracle {

struct EnumerationBudget
{
    std::size_t max_nodes = 12;
    std::uint64_t max_strategies = std::uint64_t{1} << 20;
};

/// Number of positional strategies of p (saturating).
inline std::uint64_t strategy_count(const ParityGame &g, Player p)
{
    std::uint64_t total = 1;
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.owner(v) != p) continue;
        const std::uint64_t k = g.successors(v).size();
        if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
        total *= k;
    }
    return total;
}

/// own * opp, saturating.
inline std::uint64_t pair_count(std::uint64_t own, std::uint64_t opp)
{
    if (opp && own > std::numeric_limits<std::uint64_t>::max() / opp) return std::numeric_limits<std::uint64_t>::max();
    return own * opp;
}

inline void check_budget(const ParityGame &g, std::uint64_t strategies, const EnumerationBudget &budget)
{
    if (g.size() > budget.max_nodes) {
        throw BudgetExceeded("game has " + std::to_string(g.size()) + " nodes, budget allows " +
                             std::to_string(budget.max_nodes));
    }
    if (strategies > budget.max_strategies) {
        throw BudgetExceeded("enumeration needs " + std::to_string(strategies) + " strategies, budget allows " +
                             std::to_string(budget.max_strategies));
    }
}

/// Calls f(strategy) for every positional strategy of p, in mixed-radix
/// order over the owned nodes (lowest id varies fastest).
template <class F>
void for_each_strategy(const ParityGame &g, Player p, F &&f)
{
    const std::vector<NodeId> owned = g.nodes_of(p);
    std::vector<std::size_t> digit(owned.size(), 0);
    Strategy s(p, g.size());
    for (NodeId v : owned) s.set(v, g.successors(v)[0]);
    for (;;) {
        f(static_cast<const Strategy &>(s));
        std::size_t i = 0;
        for (; i < owned.size(); ++i) {
            const auto succ = g.successors(owned[i]);
            if (++digit[i] < succ.size()) {
                s.set(owned[i], succ[digit[i]]);
                break;
            }
            digit[i] = 0;
            s.set(owned[i], succ[0]);
        }
        if (i == owned.size()) return;
    }
}

inline std::vector<Strategy> all_strategies(const ParityGame &g, Player p)
{
    std::vector<Strategy> out;
    for_each_strategy(g, p, [&](const Strategy &s) { out.push_back(s); });
    return out;
}

namespace detail {

inline NodeId step(const ParityGame &g, const Strategy &even, const Strategy &odd, NodeId v)
{
    return g.owner(v) == Player::Even ? even[v] : odd[v];
}

} // namespace detail

/// Play value of the play from `start` under (even, odd): counts of the
/// priorities before the sink, or +/-inf by the top priority of the cycle
/// the play closes.
inline PlayValue walk_play(const ParityGame &g, const Strategy &even, const Strategy &odd, NodeId start)
{
    const auto sink = g.sink();
    std::vector<char> seen(g.size(), 0);
    std::vector<NodeId> path;
    NodeId v = start;
    while (!(sink && v == *sink) && !seen[v]) {
        seen[v] = 1;
        path.push_back(v);
        v = detail::step(g, even, odd, v);
    }
    if (sink && v == *sink) {
        PlayValue value;
        for (NodeId u : path) value.add(g.priority(u));
        return value;
    }
    // v starts the cycle; its top priority decides.
    Priority top = g.priority(v);
    for (NodeId u = detail::step(g, even, odd, v); u != v; u = detail::step(g, even, odd, u)) {
        top = std::max(top, g.priority(u));
    }
    return is_even(top) ? PlayValue::pos_infinity() : PlayValue::neg_infinity();
}

/// Winner of the play from `start` in the ordinary parity sense (no sink).
inline Player play_winner(const ParityGame &g, const Strategy &even, const Strategy &odd, NodeId start)
{
    std::vector<char> seen(g.size(), 0);
    NodeId v = start;
    while (!seen[v]) {
        seen[v] = 1;
        v = detail::step(g, even, odd, v);
    }
    Priority top = g.priority(v);
    for (NodeId u = detail::step(g, even, odd, v); u != v; u = detail::step(g, even, odd, u)) {
        top = std::max(top, g.priority(u));
    }
    return winner_of(top);
}

/// Node-wise optimal values against s and an opponent strategy attaining all of them.
struct Response
{
    std::vector<PlayValue> values;
    Strategy counter;
};

/**
 * Tries every opponent strategy against s. The counter is the first
 * strategy (in enumeration order) that is optimal at every node at once.
 */
inline Response enumerate_optimal_response(const ParityGame &g, const Strategy &s,
                                           const EnumerationBudget &budget = {})
{
    const Player opp = opponent(s.player());
    check_budget(g, strategy_count(g, opp), budget);
    auto play = [&](const Strategy &t, NodeId v) {
        return s.player() == Player::Even ? walk_play(g, s, t, v) : walk_play(g, t, s, v);
    };
    auto better = [&](const PlayValue &a, const PlayValue &b) { return opp == Player::Even ? a > b : a < b; };

    std::vector<std::optional<PlayValue>> best(g.size());
    for_each_strategy(g, opp, [&](const Strategy &t) {
        for (NodeId v = 0; v < g.size(); ++v) {
            PlayValue val = play(t, v);
            if (!best[v] || better(val, *best[v])) best[v] = std::move(val);
        }
    });
    Response r;
    for (auto &b : best) r.values.push_back(std::move(*b));
    bool found = false;
    for_each_strategy(g, opp, [&](const Strategy &t) {
        if (found) return;
        for (NodeId v = 0; v < g.size(); ++v) {
            if (play(t, v) != r.values[v]) return;
        }
        r.counter = t;
        found = true;
    });
    if (!found) throw InvariantViolation("no single opponent strategy is optimal at every node");
    return r;
}

/// s is admissible iff no opponent reply reaches a value that is infinite in the opponent's favour.
inline bool admissible_by_enumeration(const ParityGame &g, const Strategy &s, const EnumerationBudget &budget = {})
{
    const Response r = enumerate_optimal_response(g, s, budget);
    const PlayValue bad = s.player() == Player::Even ? PlayValue::neg_infinity() : PlayValue::pos_infinity();
    for (const auto &v : r.values) {
        if (v == bad) return false;
    }
    return true;
}

/**
 * Admissibility by listing every simple cycle of the strategy subgraph
 * (excluding the sink loop) and checking its top priority. Exponential;
 * intended for games of at most a handful of nodes.
 */
inline bool admissible_by_cycles(const ParityGame &g, const Strategy &s)
{
    const auto sink = g.sink();
    auto successors = [&](NodeId v) -> std::vector<NodeId> {
        if (g.owner(v) == s.player()) return {s[v]};
        return {g.successors(v).begin(), g.successors(v).end()};
    };
    // Each simple cycle is enumerated from its smallest node.
    std::vector<char> on_path(g.size(), 0);
    bool ok = true;
    auto dfs = [&](auto &&self, NodeId root, NodeId v, Priority top) -> void {
        for (NodeId w : successors(v)) {
            if (!ok) return;
            if (sink && w == *sink) continue;
            if (w == root) {
                if (winner_of(std::max(top, g.priority(root))) != s.player()) ok = false;
                continue;
            }
            if (w < root || on_path[w]) continue;
            on_path[w] = 1;
            self(self, root, w, std::max(top, g.priority(w)));
            on_path[w] = 0;
        }
    };
    for (NodeId r = 0; r < g.size() && ok; ++r) {
        if (sink && r == *sink) continue;
        on_path[r] = 1;
        dfs(dfs, r, r, g.priority(r));
        on_path[r] = 0;
    }
    return ok;
}

struct OptimalStrategy
{
    Strategy strategy;
    std::vector<PlayValue> values;
    bool unique = false;
};

/**
 * The admissible strategy of p with the node-wise best valuation, found by
 * valuing every strategy of p against every opponent strategy. Throws
 * InputError when p has no admissible strategy, InvariantViolation when no
 * strategy is optimal at every node at once.
 */
inline OptimalStrategy enumerate_optimal_strategy(const ParityGame &g, Player p, const EnumerationBudget &budget = {})
{
    const std::uint64_t own = strategy_count(g, p), opp = strategy_count(g, opponent(p));
    check_budget(g, pair_count(own, opp), budget);
    EnumerationBudget inner{budget.max_nodes, std::numeric_limits<std::uint64_t>::max()};
    const PlayValue bad = p == Player::Even ? PlayValue::neg_infinity() : PlayValue::pos_infinity();
    auto better = [&](const PlayValue &a, const PlayValue &b) { return p == Player::Even ? a > b : a < b; };

    std::vector<std::pair<Strategy, std::vector<PlayValue>>> admissible;
    for_each_strategy(g, p, [&](const Strategy &s) {
        Response r = enumerate_optimal_response(g, s, inner);
        for (const auto &v : r.values) {
            if (v == bad) return;
        }
        admissible.emplace_back(s, std::move(r.values));
    });
    if (admissible.empty()) throw InputError("player has no admissible strategy");

    std::vector<PlayValue> best = admissible.front().second;
    for (const auto &[s, vals] : admissible) {
        for (NodeId v = 0; v < g.size(); ++v) {
            if (better(vals[v], best[v])) best[v] = vals[v];
        }
    }
    OptimalStrategy out;
    std::size_t hits = 0;
    for (const auto &[s, vals] : admissible) {
        if (vals == best) {
            if (hits++ == 0) out.strategy = s;
        }
    }
    if (hits == 0) throw InvariantViolation("no admissible strategy is optimal at every node");
    out.values = std::move(best);
    out.unique = hits == 1;
    return out;
}

struct Winners
{
    std::vector<Player> winner; // per node
    bool determined = true;     // max-min and min-max agree everywhere

    std::vector<NodeId> of(Player p) const
    {
        std::vector<NodeId> out;
        for (NodeId v = 0; v < winner.size(); ++v) {
            if (winner[v] == p) out.push_back(v);
        }
        return out;
    }
};

/**
 * Ordinary parity-game winners by enumerating the full strategy matrix:
 * v is won by player 0 iff some player-0 strategy wins from v against every
 * player-1 strategy. Also checks the dual statement for player 1.
 */
inline Winners brute_force_winners(const ParityGame &g, const EnumerationBudget &budget = {})
{
    if (g.size() > 64) throw BudgetExceeded("brute-force winners supports at most 64 nodes");
    const std::uint64_t e = strategy_count(g, Player::Even), o = strategy_count(g, Player::Odd);
    check_budget(g, pair_count(e, o), budget);
    const auto odd_all = all_strategies(g, Player::Odd);
    const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;

    std::vector<std::uint64_t> odd_forced(odd_all.size(), all);
    std::uint64_t even_wins = 0;
    for_each_strategy(g, Player::Even, [&](const Strategy &s) {
        std::uint64_t forced = all;
        for (std::size_t j = 0; j < odd_all.size(); ++j) {
            std::uint64_t mask = 0;
            for (NodeId v = 0; v < g.size(); ++v) {
                if (play_winner(g, s, odd_all[j], v) == Player::Even) mask |= std::uint64_t{1} << v;
            }
            forced &= mask;
            odd_forced[j] &= ~mask;
        }
        even_wins |= forced;
    });
    std::uint64_t odd_wins = 0;
    for (auto m : odd_forced) odd_wins |= m;

    Winners w;
    w.winner.resize(g.size());
    for (NodeId v = 0; v < g.size(); ++v) {
        w.winner[v] = (even_wins >> v) & 1 ? Player::Even : Player::Odd;
    }
    w.determined = (even_wins & odd_wins) == 0 && (even_wins | odd_wins) == all;
    return w;
}

} // namespace ssi::oracle
