#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ssi/strategy.hpp"
#include "ssi/valuation.hpp"

namespace ssi {

struct SwitchedEdge
{
    Player owner;
    Edge edge;
    friend bool operator==(const SwitchedEdge &, const SwitchedEdge &) = default;
};

/// One pass of a solver loop. The last pass of a finished run switches nothing.
struct IterationRecord
{
    std::size_t index = 0; // 1-based
    std::vector<SwitchedEdge> switched;
    std::size_t improving_even = 0; // |I| for the Even strategy
    std::size_t improving_odd = 0;  // |I| for the Odd strategy
    std::size_t candidates = 0;     // size of the set handed to the rule
};

struct IterationTrace
{
    std::vector<IterationRecord> iterations;
    std::optional<Strategy> final_even;
    std::optional<Strategy> final_odd;

    /// Number of passes that switched at least one edge.
    std::size_t switching_iterations() const
    {
        std::size_t n = 0;
        for (const auto &it : iterations) n += !it.switched.empty();
        return n;
    }
};

/**
 * Re-applies the recorded switches to the initial strategies. After every
 * switching pass, visit(index, even, odd) is called with the strategies that
 * pass produced. Either initial strategy may be absent for one-sided runs.
 */
template <class Visit>
void replay(const IterationTrace &trace, std::optional<Strategy> even, std::optional<Strategy> odd, Visit &&visit)
{
    for (const auto &it : trace.iterations) {
        if (it.switched.empty()) continue;
        for (const auto &sw : it.switched) {
            auto &target = sw.owner == Player::Even ? even : odd;
            if (!target) throw InputError("trace switches a strategy that was not supplied");
            target->set(sw.edge.from, sw.edge.to);
        }
        visit(it.index, even, odd);
    }
}

inline std::pair<std::optional<Strategy>, std::optional<Strategy>>
replay(const IterationTrace &trace, std::optional<Strategy> even, std::optional<Strategy> odd)
{
    std::optional<Strategy> e, o;
    e = even;
    o = odd;
    replay(trace, std::move(even), std::move(odd), [&](std::size_t, const auto &ev, const auto &od) {
        e = ev;
        o = od;
    });
    return {std::move(e), std::move(o)};
}

} // namespace ssi
