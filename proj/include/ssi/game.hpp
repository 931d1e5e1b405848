#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssi/errors.hpp"

namespace ssi {

using NodeId = std::uint32_t;
using Priority = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) noexcept { return p == Player::Even ? Player::Odd : Player::Even; }

constexpr int index_of(Player p) noexcept { return static_cast<int>(p); }

constexpr bool is_even(Priority q) noexcept { return q % 2 == 0; }

/// The player who wins a cycle whose highest priority is q.
constexpr Player winner_of(Priority q) noexcept { return is_even(q) ? Player::Even : Player::Odd; }

struct Edge
{
    NodeId from = kNoNode;
    NodeId to = kNoNode;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct NodeRecord
{
    NodeId id = kNoNode;
    Player owner = Player::Even;
    Priority priority = 0;
    std::optional<std::string> label;

    friend bool operator==(const NodeRecord &, const NodeRecord &) = default;
};

/**
 * Finite game graph with an owner partition and a priority per node.
 *
 * Node ids are dense (0..size()-1). Adjacency lists keep the order in which
 * the edges were declared. The object is immutable once built; use
 * GameBuilder to assemble one incrementally.
 */
class ParityGame
{
public:
    ParityGame() = default;

    /// Throws InputError if ids are not dense or a successor is out of range.
    ParityGame(std::vector<NodeRecord> nodes, std::vector<std::vector<NodeId>> successors,
               std::optional<NodeId> sink = std::nullopt)
        : nodes_(std::move(nodes)), successors_(std::move(successors)), sink_(sink)
    {
        if (nodes_.size() != successors_.size()) {
            throw InputError("node and adjacency tables differ in size");
        }
        if (nodes_.size() >= kNoNode) {
            throw InputError("too many nodes");
        }
        predecessors_.resize(nodes_.size());
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            if (nodes_[v].id != v) {
                throw InputError("node ids must be dense and in order (node " + std::to_string(v) + ")");
            }
            for (NodeId w : successors_[v]) {
                if (w >= nodes_.size()) {
                    throw InputError("edge " + std::to_string(v) + " -> " + std::to_string(w) +
                                     " points outside the game");
                }
                auto &preds = predecessors_[w];
                if (preds.empty() || preds.back() != v) preds.push_back(static_cast<NodeId>(v));
            }
            edge_count_ += successors_[v].size();
        }
        if (sink_ && *sink_ >= nodes_.size()) {
            throw InputError("sink id " + std::to_string(*sink_) + " is not a node");
        }
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const NodeRecord &node(NodeId v) const { return nodes_.at(v); }
    std::span<const NodeRecord> nodes() const noexcept { return nodes_; }

    Player owner(NodeId v) const { return nodes_[v].owner; }
    Priority priority(NodeId v) const { return nodes_[v].priority; }
    const std::optional<std::string> &label(NodeId v) const { return nodes_[v].label; }

    std::span<const NodeId> successors(NodeId v) const { return successors_[v]; }
    /// Distinct predecessors of v, ascending.
    std::span<const NodeId> predecessors(NodeId v) const { return predecessors_[v]; }

    bool has_edge(NodeId from, NodeId to) const
    {
        if (from >= size()) return false;
        const auto &succ = successors_[from];
        return std::find(succ.begin(), succ.end(), to) != succ.end();
    }

    std::optional<NodeId> sink() const noexcept { return sink_; }
    bool is_sink(NodeId v) const noexcept { return sink_ && *sink_ == v; }

    /// Nodes owned by p, ascending.
    std::vector<NodeId> nodes_of(Player p) const
    {
        std::vector<NodeId> out;
        for (const auto &n : nodes_) {
            if (n.owner == p) out.push_back(n.id);
        }
        return out;
    }

    Priority min_priority() const
    {
        Priority m = std::numeric_limits<Priority>::max();
        for (const auto &n : nodes_) m = std::min(m, n.priority);
        return m;
    }

    Priority max_priority() const
    {
        Priority m = std::numeric_limits<Priority>::min();
        for (const auto &n : nodes_) m = std::max(m, n.priority);
        return m;
    }

    /// Identity on the model: nodes, adjacency (in order), and sink.
    friend bool operator==(const ParityGame &a, const ParityGame &b)
    {
        return a.nodes_ == b.nodes_ && a.successors_ == b.successors_ && a.sink_ == b.sink_;
    }

private:
    std::vector<NodeRecord> nodes_;
    std::vector<std::vector<NodeId>> successors_;
    std::vector<std::vector<NodeId>> predecessors_;
    std::optional<NodeId> sink_;
    std::size_t edge_count_ = 0;
};

class GameBuilder
{
public:
    NodeId add_node(Player owner, Priority priority, std::optional<std::string> label = std::nullopt)
    {
        auto id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back(NodeRecord{id, owner, priority, std::move(label)});
        successors_.emplace_back();
        return id;
    }

    void add_edge(NodeId from, NodeId to) { successors_.at(from).push_back(to); }

    void set_sink(NodeId v) { sink_ = v; }

    std::size_t size() const noexcept { return nodes_.size(); }

    ParityGame build() && { return ParityGame(std::move(nodes_), std::move(successors_), sink_); }
    ParityGame build() const & { return ParityGame(nodes_, successors_, sink_); }

private:
    std::vector<NodeRecord> nodes_;
    std::vector<std::vector<NodeId>> successors_;
    std::optional<NodeId> sink_;
};

// ---------------------------------------------------------------------------
// Structural validation

enum class Rule : std::uint8_t {
    NodeWithoutSuccessor,
    SinkSelfLoopOnly,
    SinkPriorityNotMinimal,
};

inline const char *describe(Rule r) noexcept
{
    switch (r) {
    case Rule::NodeWithoutSuccessor: return "node without successor";
    case Rule::SinkSelfLoopOnly: return "sink self-loop only";
    case Rule::SinkPriorityNotMinimal: return "sink priority not strictly minimal";
    }
    return "unknown rule";
}

struct Violation
{
    Rule rule;
    NodeId node = kNoNode;
    std::optional<Edge> edge;

    std::string message() const
    {
        std::string m = describe(rule);
        m += " at node " + std::to_string(node);
        if (edge) m += " (edge " + std::to_string(edge->from) + " -> " + std::to_string(edge->to) + ")";
        return m;
    }
};

/// Empty report iff every node has a successor and, when a sink is set, the
/// sink has only its self-loop and the strictly smallest priority.
inline std::vector<Violation> validate_game(const ParityGame &g)
{
    std::vector<Violation> report;
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.successors(v).empty()) report.push_back({Rule::NodeWithoutSuccessor, v, std::nullopt});
    }
    if (auto sink = g.sink()) {
        const NodeId t = *sink;
        for (NodeId w : g.successors(t)) {
            if (w != t) report.push_back({Rule::SinkSelfLoopOnly, t, Edge{t, w}});
        }
        auto succ = g.successors(t);
        if (!succ.empty() && std::count(succ.begin(), succ.end(), t) > 1) {
            report.push_back({Rule::SinkSelfLoopOnly, t, Edge{t, t}});
        }
        for (NodeId v = 0; v < g.size(); ++v) {
            if (v != t && g.priority(v) <= g.priority(t)) {
                report.push_back({Rule::SinkPriorityNotMinimal, v, std::nullopt});
            }
        }
    }
    return report;
}

/// The unique node that could serve as sink: self-loop only, priority
/// strictly below all others. Returns nullopt if there is none.
inline std::optional<NodeId> find_sink_candidate(const ParityGame &g)
{
    if (g.size() == 0) return std::nullopt;
    NodeId best = 0;
    for (NodeId v = 1; v < g.size(); ++v) {
        if (g.priority(v) < g.priority(best)) best = v;
    }
    for (NodeId v = 0; v < g.size(); ++v) {
        if (v != best && g.priority(v) == g.priority(best)) return std::nullopt;
    }
    auto succ = g.successors(best);
    if (succ.size() != 1 || succ[0] != best) return std::nullopt;
    return best;
}

/// Copy of g with the sink marker set (or cleared).
inline ParityGame with_sink(const ParityGame &g, std::optional<NodeId> sink)
{
    std::vector<NodeRecord> nodes(g.nodes().begin(), g.nodes().end());
    std::vector<std::vector<NodeId>> succ(g.size());
    for (NodeId v = 0; v < g.size(); ++v) succ[v].assign(g.successors(v).begin(), g.successors(v).end());
    return ParityGame(std::move(nodes), std::move(succ), sink);
}

} // namespace ssi
