#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ssi/valuation.hpp"

namespace ssi {

/// What an improvement rule may look at besides the candidate edges.
/// Either valuation may be absent (plain strategy improvement has one).
struct RuleContext
{
    const ParityGame &game;
    const Valuation *even = nullptr; // valuation of the current Even strategy
    const Valuation *odd = nullptr;  // valuation of the current Odd strategy
};

/// One edge per source node: the target that is best for the node's owner
/// under that owner's own valuation, lowest target id on ties.
inline EdgeSet rule_switch_all(const EdgeSet &candidates, const RuleContext &ctx)
{
    EdgeSet out;
    auto it = candidates.begin();
    while (it != candidates.end()) {
        const NodeId v = it->from;
        const Player owner = ctx.game.owner(v);
        const Valuation *xi = owner == Player::Even ? ctx.even : ctx.odd;
        Edge best = *it;
        for (++it; it != candidates.end() && it->from == v; ++it) {
            // Candidates are sorted by target, so strict improvement keeps the lowest id on ties.
            if (xi && better_for(owner, (*xi)[it->to], (*xi)[best.to])) best = *it;
        }
        out.insert(best);
    }
    return out;
}

/// The single lexicographically smallest (source, target) edge.
inline EdgeSet rule_single_lowest(const EdgeSet &candidates)
{
    if (candidates.empty()) return {};
    return EdgeSet{*candidates.begin()};
}

/// A uniformly drawn nonempty subset with at most one edge per source node.
inline EdgeSet rule_random_subset(const EdgeSet &candidates, std::mt19937_64 &rng)
{
    if (candidates.empty()) return {};
    std::vector<std::vector<Edge>> groups;
    for (const Edge &e : candidates) {
        if (groups.empty() || groups.back().front().from != e.from) groups.emplace_back();
        groups.back().push_back(e);
    }
    // Each group picks one of its edges or nothing; resample the all-nothing outcome.
    for (;;) {
        EdgeSet out;
        for (const auto &grp : groups) {
            std::uniform_int_distribution<std::size_t> pick(0, grp.size());
            std::size_t k = pick(rng);
            if (k < grp.size()) out.insert(grp[k]);
        }
        if (!out.empty()) return out;
    }
}

inline EdgeSet rule_random_subset(const EdgeSet &candidates, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return rule_random_subset(candidates, rng);
}

/**
 * Improvement rule value type. Copies carry their own random state, so a
 * solver run that takes a rule by value is deterministic per seed.
 */
class ImprovementRule
{
public:
    enum class Kind : std::uint8_t { SwitchAll, SingleLowest, RandomSubset };

    static ImprovementRule switch_all() { return ImprovementRule(Kind::SwitchAll, std::nullopt); }
    static ImprovementRule single_lowest() { return ImprovementRule(Kind::SingleLowest, std::nullopt); }
    static ImprovementRule random_subset(std::uint64_t seed) { return ImprovementRule(Kind::RandomSubset, seed); }

    /// Parses "all", "single" or "random".
    static ImprovementRule from_name(std::string_view name, std::uint64_t seed = 0)
    {
        if (name == "all" || name == "switch-all") return switch_all();
        if (name == "single" || name == "single-lowest") return single_lowest();
        if (name == "random" || name == "random-subset") return random_subset(seed);
        throw InputError("unknown improvement rule '" + std::string(name) + "'");
    }

    Kind kind() const noexcept { return kind_; }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }

    std::string_view name() const noexcept
    {
        switch (kind_) {
        case Kind::SwitchAll: return "all";
        case Kind::SingleLowest: return "single";
        case Kind::RandomSubset: return "random";
        }
        return "?";
    }

    EdgeSet operator()(const EdgeSet &candidates, const RuleContext &ctx)
    {
        switch (kind_) {
        case Kind::SwitchAll: return rule_switch_all(candidates, ctx);
        case Kind::SingleLowest: return rule_single_lowest(candidates);
        case Kind::RandomSubset: return rule_random_subset(candidates, rng_);
        }
        return {};
    }

private:
    ImprovementRule(Kind k, std::optional<std::uint64_t> seed) : kind_(k), seed_(seed), rng_(seed.value_or(0)) {}

    Kind kind_;
    std::optional<std::uint64_t> seed_;
    std::mt19937_64 rng_;
};

/// Throws InvariantViolation unless chosen obeys the rule axioms w.r.t. candidates.
inline void check_rule_axioms(const EdgeSet &candidates, const EdgeSet &chosen)
{
    if (!candidates.empty() && chosen.empty()) throw InvariantViolation("rule chose nothing from a nonempty set");
    NodeId last = kNoNode;
    for (const Edge &e : chosen) {
        if (!candidates.contains(e)) throw InvariantViolation("rule chose an edge outside the candidates");
        if (e.from == last) throw InvariantViolation("rule chose two edges from one node");
        last = e.from;
    }
}

} // namespace ssi
