#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ssi/game.hpp"
#include "ssi/play_value.hpp"
#include "ssi/strategy.hpp"

namespace ssi {

using EdgeSet = std::set<Edge>;

/// Node-wise value of a strategy against a best-responding opponent, plus
/// the opponent strategy that attains it at every node simultaneously.
struct Valuation
{
    Player player = Player::Even;
    std::vector<PlayValue> values;
    Strategy counter;

    const PlayValue &operator[](NodeId v) const { return values[v]; }
};

namespace detail {

/// True iff, inside `region` of the subgraph, some cycle has a highest
/// priority won by `p`.
inline bool has_cycle_won_by(const StrategySubgraph &sub, const std::vector<char> &region, Player p)
{
    const ParityGame &g = sub.base();
    std::vector<char> seen(g.size());
    std::vector<NodeId> stack;
    for (NodeId u = 0; u < g.size(); ++u) {
        if (!region[u] || winner_of(g.priority(u)) != p) continue;
        const Priority top = g.priority(u);
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, u);
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : sub.successors(x)) {
                if (!region[y] || g.priority(y) > top) continue;
                if (y == u) return true;
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return false;
}

} // namespace detail

/**
 * Values strategy s by relaxation to a fixpoint.
 *
 * The sink has the empty vector; every other node takes its own priority
 * plus the opponent-optimal value among its successors in the strategy
 * subgraph. Rounds sweep nodes in ascending id order; a node is recomputed
 * only when one of its successors changed. Returns nullopt when s is not
 * admissible: either the rounds do not stabilise within |V| passes, or some
 * node cannot reach the sink and the opponent can close a cycle of its own
 * parity there.
 */
inline std::optional<Valuation> try_valuate(const ParityGame &g, const Strategy &s)
{
    const auto sink = g.sink();
    if (!sink) throw InputError("valuation requires a game with a sink");
    StrategySubgraph sub(g, s);

    const Player opp = opponent(s.player());
    // The opponent minimises against Even strategies and maximises against Odd ones.
    const PlayValue unreached = s.player() == Player::Even ? PlayValue::pos_infinity() : PlayValue::neg_infinity();
    const std::size_t n = g.size();

    std::vector<PlayValue> values(n, unreached);
    values[*sink] = PlayValue{};
    std::vector<char> dirty(n, 1);
    dirty[*sink] = 0;

    bool stable = false;
    for (std::size_t round = 0; round < n && !stable; ++round) {
        stable = true;
        for (NodeId v = 0; v < n; ++v) {
            if (!dirty[v]) continue;
            dirty[v] = 0;
            const PlayValue *best = nullptr;
            for (NodeId w : sub.successors(v)) {
                if (!best || better_for(opp, values[w], *best)) best = &values[w];
            }
            PlayValue next = add_priority(*best, g.priority(v));
            if (next != values[v]) {
                values[v] = std::move(next);
                stable = false;
                for (NodeId u : g.predecessors(v)) {
                    if (!g.is_sink(u)) dirty[u] = 1;
                }
            }
        }
    }
    if (!stable) return std::nullopt;

    std::vector<char> region(n, 0);
    bool any_unreached = false;
    for (NodeId v = 0; v < n; ++v) {
        if (values[v].is_infinite()) {
            region[v] = 1;
            any_unreached = true;
        }
    }
    if (any_unreached && detail::has_cycle_won_by(sub, region, opp)) return std::nullopt;

    Valuation xi{s.player(), std::move(values), Strategy(opp, n)};
    for (NodeId v = 0; v < n; ++v) {
        if (g.owner(v) != opp) continue;
        NodeId pick = kNoNode;
        for (NodeId w : g.successors(v)) {
            if (pick == kNoNode || better_for(opp, xi.values[w], xi.values[pick]) ||
                (xi.values[w] == xi.values[pick] && w < pick)) {
                pick = w;
            }
        }
        xi.counter.set(v, pick);
    }
    return xi;
}

/// Like try_valuate, but throws NotAdmissible instead of returning nullopt.
inline Valuation valuate(const ParityGame &g, const Strategy &s)
{
    auto xi = try_valuate(g, s);
    if (!xi) {
        throw NotAdmissible(std::string("strategy of player ") + (s.player() == Player::Even ? "0" : "1") +
                            " is not admissible");
    }
    return std::move(*xi);
}

inline bool is_admissible(const ParityGame &g, const Strategy &s) { return try_valuate(g, s).has_value(); }

/// Edges from s-owned nodes whose target is strictly better for the owner
/// than the current choice, under the owner's own valuation.
inline EdgeSet improving_moves(const ParityGame &g, const Strategy &s, const Valuation &xi)
{
    EdgeSet out;
    const Player p = s.player();
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.owner(v) != p) continue;
        const PlayValue &current = xi[s[v]];
        for (NodeId w : g.successors(v)) {
            if (better_for(p, xi[w], current)) out.insert(Edge{v, w});
        }
    }
    return out;
}

/// Edges from s-owned nodes whose target is weakly better for the owner than
/// the current choice, judged by the opponent's valuation.
inline EdgeSet j_set(const ParityGame &g, const Strategy &s, const Valuation &xi_opponent)
{
    EdgeSet out;
    const Player p = s.player();
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.owner(v) != p) continue;
        const PlayValue &current = xi_opponent[s[v]];
        for (NodeId w : g.successors(v)) {
            if (!better_for(p, current, xi_opponent[w])) out.insert(Edge{v, w});
        }
    }
    return out;
}

/// {(v, s(v))} over the nodes s is defined on.
inline EdgeSet strategy_edges(const Strategy &s)
{
    EdgeSet out;
    for (NodeId v = 0; v < s.size(); ++v) {
        if (s.defined_at(v)) out.insert(Edge{v, s[v]});
    }
    return out;
}

inline EdgeSet intersect(const EdgeSet &a, const EdgeSet &b)
{
    EdgeSet out;
    for (const Edge &e : a) {
        if (b.contains(e)) out.insert(e);
    }
    return out;
}

/// Rewires s along every chosen edge whose source s owns.
inline Strategy apply_switches(Strategy s, const EdgeSet &chosen, const ParityGame &g)
{
    for (const Edge &e : chosen) {
        if (g.owner(e.from) == s.player()) s.set(e.from, e.to);
    }
    return s;
}

} // namespace ssi
