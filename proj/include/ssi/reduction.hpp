#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssi/game.hpp"
#include "ssi/solver.hpp"

namespace ssi {

/// Result of subdividing every same-owner edge. Original nodes keep their
/// ids; inserted nodes are appended.
struct CycleBreak
{
    ParityGame game;
    std::size_t original_size = 0;
    Priority original_min = 0;

    bool is_inserted(NodeId v) const noexcept { return v >= original_size; }
};

/**
 * Replaces every edge u -> v with owner(u) == owner(v) by u -> x -> v, where
 * x belongs to the other player and has a priority below every original
 * priority. Afterwards neither player owns a cycle on its own.
 */
inline CycleBreak break_same_owner_cycles(const ParityGame &g)
{
    const Priority low = g.min_priority() - 1;
    GameBuilder b;
    for (const NodeRecord &n : g.nodes()) b.add_node(n.owner, n.priority, n.label);
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v : g.successors(u)) {
            if (g.owner(u) != g.owner(v)) {
                b.add_edge(u, v);
                continue;
            }
            NodeId x = b.add_node(opponent(g.owner(u)), low, "x" + std::to_string(u) + "_" + std::to_string(v));
            b.add_edge(u, x);
            b.add_edge(x, v);
        }
    }
    return CycleBreak{std::move(b).build(), g.size(), g.min_priority()};
}

/// True iff some cycle stays inside the nodes of a single owner.
inline bool has_same_owner_cycle(const ParityGame &g)
{
    // Kahn's algorithm on the same-owner edges.
    std::vector<std::size_t> indeg(g.size(), 0);
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v : g.successors(u)) indeg[v] += g.owner(u) == g.owner(v);
    }
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < g.size(); ++v) {
        if (!indeg[v]) queue.push_back(v);
    }
    std::size_t removed = 0;
    while (!queue.empty()) {
        NodeId u = queue.back();
        queue.pop_back();
        ++removed;
        for (NodeId v : g.successors(u)) {
            if (g.owner(u) == g.owner(v) && --indeg[v] == 0) queue.push_back(v);
        }
    }
    return removed != g.size();
}

/// Correspondence between an original game and its sink-game reduction.
struct ReductionMap
{
    std::size_t original_size = 0; // original node v keeps id v
    std::size_t broken_size = 0;   // ids [original_size, broken_size) are cycle breakers
    NodeId top = kNoNode;
    NodeId w = kNoNode;
    Priority w_priority = 0;
    Priority shift = 0; // even offset added to every priority

    bool is_original(NodeId v) const noexcept { return v < original_size; }
    bool is_inserted(NodeId v) const noexcept { return v >= original_size && v < broken_size; }
};

/**
 * Adds a sink `top` and an exit node `w`: every player-0 node gets an edge
 * to top, every player-1 node an edge to w, and w leads to top. top sits
 * below all priorities, w gets an even priority above all of them. If top
 * would be negative, all priorities are shifted up by an even amount.
 */
inline std::pair<ParityGame, ReductionMap> to_sink_game(const CycleBreak &cb)
{
    const ParityGame &g = cb.game;
    if (has_same_owner_cycle(g)) throw InputError("game still has a same-owner cycle; break cycles first");
    Priority top_priority = g.min_priority() - 1;
    Priority shift = 0;
    if (top_priority < 0) shift = (-top_priority + 1) / 2 * 2;
    Priority top_shifted = top_priority + shift;
    Priority max_shifted = g.max_priority() + shift;
    Priority w_priority = max_shifted + 1 + (is_even(max_shifted + 1) ? 0 : 1);

    GameBuilder b;
    for (const NodeRecord &n : g.nodes()) b.add_node(n.owner, n.priority + shift, n.label);
    const NodeId top = b.add_node(Player::Even, top_shifted, "top");
    const NodeId w = b.add_node(Player::Odd, w_priority, "w");
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v : g.successors(u)) b.add_edge(u, v);
        b.add_edge(u, g.owner(u) == Player::Even ? top : w);
    }
    b.add_edge(w, top);
    b.add_edge(top, top);
    b.set_sink(top);

    ReductionMap map{cb.original_size, g.size(), top, w, w_priority, shift};
    return {std::move(b).build(), map};
}

/// Sink construction for a game that already has no same-owner cycles.
inline std::pair<ParityGame, ReductionMap> to_sink_game(const ParityGame &g)
{
    return to_sink_game(CycleBreak{with_sink(g, std::nullopt), g.size(), g.min_priority()});
}

inline std::pair<ParityGame, ReductionMap> reduce_to_sink_game(const ParityGame &g)
{
    return to_sink_game(break_same_owner_cycles(with_sink(g, std::nullopt)));
}

/// Player 0 always exits to top, player 1 always exits to w.
inline std::pair<Strategy, Strategy> trivial_sink_strategies(const ParityGame &reduced, const ReductionMap &map)
{
    Strategy even(Player::Even, reduced.size()), odd(Player::Odd, reduced.size());
    for (NodeId v = 0; v < reduced.size(); ++v) {
        if (v == map.top || v == map.w) {
            (reduced.owner(v) == Player::Even ? even : odd).set(v, reduced.successors(v)[0]);
        } else if (reduced.owner(v) == Player::Even) {
            even.set(v, map.top);
        } else {
            odd.set(v, map.w);
        }
    }
    return {std::move(even), std::move(odd)};
}

struct WinningRegions
{
    std::vector<NodeId> even; // W0, ascending
    std::vector<NodeId> odd;  // W1, ascending
    Strategy even_strategy;   // over the original game
    Strategy odd_strategy;

    Player winner(NodeId v) const
    {
        return std::binary_search(even.begin(), even.end(), v) ? Player::Even : Player::Odd;
    }
};

/**
 * Reads winners off an optimal pair on the reduced game: an original node
 * is won by player 0 iff its player-0 valuation visits w exactly once.
 * Strategies are mapped back to original edges, skipping cycle breakers.
 * Throws InputError if the pair is not certified optimal.
 */
inline WinningRegions extract_winners(const ParityGame &reduced, const ReductionMap &map, const SolveResult &optimal)
{
    if (!optimal.even || !optimal.odd) throw InputError("winner extraction needs strategies for both players");
    const auto cert = verify_optimal(reduced, *optimal.even, *optimal.odd);
    if (!cert.optimal) throw InputError("strategy pair is not optimal on the reduced game");
    const Valuation xe = optimal.even_value ? *optimal.even_value : valuate(reduced, *optimal.even);

    // Map a reduced successor back to an original node, if it stands for one.
    auto resolve = [&](NodeId t) -> NodeId {
        if (map.is_original(t)) return t;
        if (map.is_inserted(t)) {
            for (NodeId s : reduced.successors(t)) {
                if (map.is_original(s)) return s;
            }
        }
        return kNoNode;
    };
    auto first_original_successor = [&](NodeId v) {
        for (NodeId t : reduced.successors(v)) {
            NodeId r = resolve(t);
            if (r != kNoNode) return r;
        }
        throw InvariantViolation("original node " + std::to_string(v) + " lost all its successors");
    };

    WinningRegions out{{}, {}, Strategy(Player::Even, map.original_size), Strategy(Player::Odd, map.original_size)};
    for (NodeId v = 0; v < map.original_size; ++v) {
        (xe[v].count(map.w_priority) == 1 ? out.even : out.odd).push_back(v);
        const Player p = reduced.owner(v);
        const Strategy &s = p == Player::Even ? *optimal.even : *optimal.odd;
        NodeId target = resolve(s[v]);
        if (target == kNoNode) target = first_original_successor(v);
        (p == Player::Even ? out.even_strategy : out.odd_strategy).set(v, target);
    }
    return out;
}

/// Full pipeline: break cycles, build the sink game, solve it, read winners.
/// With plain strategy improvement both players are improved separately.
inline WinningRegions solve_winners(const ParityGame &g, Algorithm algo = Algorithm::StrategyImprovement,
                                    ImprovementRule rule = ImprovementRule::switch_all())
{
    auto [reduced, map] = reduce_to_sink_game(g);
    auto [even0, odd0] = trivial_sink_strategies(reduced, map);
    SolveResult result;
    if (algo == Algorithm::StrategyImprovement) {
        SolveResult re = run_si(reduced, std::move(even0), rule);
        SolveResult ro = run_si(reduced, std::move(odd0), rule);
        result.even = std::move(re.even);
        result.even_value = std::move(re.even_value);
        result.odd = std::move(ro.odd);
        result.odd_value = std::move(ro.odd_value);
        result.iterations = re.iterations + ro.iterations;
    } else {
        result = solve(reduced, algo, std::move(even0), std::move(odd0), rule);
    }
    return extract_winners(reduced, map, result);
}

} // namespace ssi
