#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ssi/game.hpp"

namespace ssi {

/**
 * Positional strategy of one player: one chosen successor per owned node.
 *
 * Stored densely over all node ids; entries of nodes the player does not
 * own hold kNoNode.
 */
class Strategy
{
public:
    Strategy() = default;
    Strategy(Player player, std::size_t node_count) : player_(player), choice_(node_count, kNoNode) {}

    Player player() const noexcept { return player_; }
    std::size_t size() const noexcept { return choice_.size(); }

    bool defined_at(NodeId v) const noexcept { return v < choice_.size() && choice_[v] != kNoNode; }

    NodeId operator[](NodeId v) const { return choice_[v]; }

    NodeId at(NodeId v) const
    {
        if (!defined_at(v)) throw InvalidStrategy("strategy not defined at node " + std::to_string(v));
        return choice_[v];
    }

    void set(NodeId v, NodeId successor) { choice_.at(v) = successor; }

    std::span<const NodeId> choices() const noexcept { return choice_; }

    friend bool operator==(const Strategy &, const Strategy &) = default;

private:
    Player player_ = Player::Even;
    std::vector<NodeId> choice_;
};

/// Throws InvalidStrategy unless s is defined exactly on s.player()'s nodes
/// and every choice is an edge of g.
inline void check_strategy(const ParityGame &g, const Strategy &s)
{
    if (s.size() != g.size()) {
        throw InvalidStrategy("strategy covers " + std::to_string(s.size()) + " nodes, game has " +
                              std::to_string(g.size()));
    }
    for (NodeId v = 0; v < g.size(); ++v) {
        const bool owned = g.owner(v) == s.player();
        if (owned && !s.defined_at(v)) {
            throw InvalidStrategy("no choice for owned node " + std::to_string(v));
        }
        if (!owned && s.defined_at(v)) {
            throw InvalidStrategy("choice given for node " + std::to_string(v) + " owned by the other player");
        }
        if (owned && !g.has_edge(v, s[v])) {
            throw InvalidStrategy("choice " + std::to_string(v) + " -> " + std::to_string(s[v]) +
                                  " is not an edge");
        }
    }
}

inline bool is_valid_strategy(const ParityGame &g, const Strategy &s)
{
    try {
        check_strategy(g, s);
        return true;
    } catch (const InvalidStrategy &) {
        return false;
    }
}

/// Strategy choosing the first listed successor at every owned node.
inline Strategy first_successor_strategy(const ParityGame &g, Player p)
{
    Strategy s(p, g.size());
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.owner(v) == p && !g.successors(v).empty()) s.set(v, g.successors(v).front());
    }
    return s;
}

/// Builds a strategy from explicit choices; owned nodes with a single
/// successor may be omitted. Throws InvalidStrategy on anything else missing.
inline Strategy make_strategy(const ParityGame &g, Player p, const std::map<NodeId, NodeId> &choices)
{
    Strategy s(p, g.size());
    for (auto [v, w] : choices) {
        if (v >= g.size()) throw InvalidStrategy("node " + std::to_string(v) + " is not in the game");
        s.set(v, w);
    }
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.owner(v) == p && !s.defined_at(v) && g.successors(v).size() == 1) s.set(v, g.successors(v)[0]);
    }
    check_strategy(g, s);
    return s;
}

/**
 * View of a game with one player's choices fixed: owned nodes keep only the
 * chosen edge, all other nodes keep every edge.
 */
class StrategySubgraph
{
public:
    StrategySubgraph(const ParityGame &base, Strategy fixed) : base_(&base), fixed_(std::move(fixed))
    {
        check_strategy(base, fixed_);
    }

    const ParityGame &base() const noexcept { return *base_; }
    const Strategy &fixed() const noexcept { return fixed_; }
    std::size_t size() const noexcept { return base_->size(); }

    std::span<const NodeId> successors(NodeId v) const
    {
        if (base_->owner(v) == fixed_.player()) return fixed_.choices().subspan(v, 1);
        return base_->successors(v);
    }

private:
    const ParityGame *base_;
    Strategy fixed_;
};

inline StrategySubgraph strategy_subgraph(const ParityGame &g, const Strategy &s) { return StrategySubgraph(g, s); }

} // namespace ssi
