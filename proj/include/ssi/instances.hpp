#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssi/game.hpp"
#include "ssi/strategy.hpp"

namespace ssi {

/// A generated game together with its starting strategies and node roles.
struct LabeledInstance
{
    ParityGame game;
    Strategy even0; // initial strategy of player 0
    Strategy odd0;  // initial strategy of player 1
    std::vector<std::string> labels;

    /// Node id for a role name such as "a3"; throws InputError if absent.
    NodeId id(const std::string &role) const
    {
        for (NodeId v = 0; v < labels.size(); ++v) {
            if (labels[v] == role) return v;
        }
        throw InputError("no node labelled '" + role + "'");
    }
};

namespace detail {

inline LabeledInstance finish(GameBuilder &&b, const std::map<NodeId, NodeId> &even,
                              const std::map<NodeId, NodeId> &odd)
{
    ParityGame g = std::move(b).build();
    std::vector<std::string> labels;
    labels.reserve(g.size());
    for (NodeId v = 0; v < g.size(); ++v) labels.push_back(*g.label(v));
    Strategy e = make_strategy(g, Player::Even, even);
    Strategy o = make_strategy(g, Player::Odd, odd);
    return LabeledInstance{std::move(g), std::move(e), std::move(o), std::move(labels)};
}

inline std::string role(char kind, int i) { return std::string(1, kind) + std::to_string(i); }

} // namespace detail

/**
 * The ladder family: nodes a_1..a_{n+1} (player 0) and d_1..d_{n+1}
 * (player 1), with back edges to a_1 / d_1 from every rung above the first.
 * a_{n+1} is the sink. Ids are assigned a_1..a_{n+1}, then d_1..d_{n+1}.
 *
 * Starting strategies climb the ladder: a_i -> a_{i+1}, d_i -> d_{i+1}.
 */
inline LabeledInstance gen_table1(int n)
{
    if (n < 1) throw InputError("ladder size must be at least 1");
    GameBuilder b;
    std::vector<NodeId> a(n + 2), d(n + 2);
    for (int i = 1; i <= n + 1; ++i) {
        a[i] = b.add_node(Player::Even, i == 1 ? 3 : (i == n + 1 ? 1 : 2 * i + 1), detail::role('a', i));
    }
    for (int i = 1; i <= n + 1; ++i) {
        d[i] = b.add_node(Player::Odd, i == 1 ? 4 : (i == n + 1 ? 2 * n + 4 : 2 * i + 2), detail::role('d', i));
    }
    for (int i = 1; i <= n; ++i) {
        if (i > 1) b.add_edge(a[i], a[1]);
        b.add_edge(a[i], a[i + 1]);
        b.add_edge(a[i], d[i + 1]);
    }
    for (int i = 1; i <= n; ++i) {
        if (i > 1) b.add_edge(d[i], d[1]);
        b.add_edge(d[i], a[i + 1]);
        b.add_edge(d[i], d[i + 1]);
    }
    b.add_edge(a[n + 1], a[n + 1]);
    b.add_edge(d[n + 1], a[n + 1]);
    b.set_sink(a[n + 1]);

    std::map<NodeId, NodeId> even, odd;
    for (int i = 1; i <= n; ++i) {
        even[a[i]] = a[i + 1];
        odd[d[i]] = d[i + 1];
    }
    even[a[n + 1]] = a[n + 1];
    odd[d[n + 1]] = a[n + 1];
    return detail::finish(std::move(b), even, odd);
}

/// The unique optimal pair on the ladder: climb, except a_n -> d_{n+1} and d_n -> a_{n+1}.
inline std::pair<Strategy, Strategy> table1_optimal(const LabeledInstance &inst, int n)
{
    Strategy e = inst.even0, o = inst.odd0;
    e.set(inst.id(detail::role('a', n)), inst.id(detail::role('d', n + 1)));
    o.set(inst.id(detail::role('d', n)), inst.id(detail::role('a', n + 1)));
    return {std::move(e), std::move(o)};
}

/**
 * The ladder with every rung (a_i, d_i) expanded into a ten-node gadget
 * c, e, m, f (entered from a_i) and g, k, h, l (entered from d_i). Ladder
 * priorities sit above N = 16n+16, gadget priorities below it. Ids are
 * a_1..a_{n+1}, d_1..d_{n+1}, then per i: c, e, m, f, g, k, h, l.
 */
inline LabeledInstance gen_table2(int n)
{
    if (n < 1) throw InputError("ladder size must be at least 1");
    const Priority N = 16 * Priority(n) + 16;
    GameBuilder b;
    std::vector<NodeId> a(n + 2), d(n + 2);
    for (int i = 1; i <= n + 1; ++i) {
        a[i] = b.add_node(Player::Even, i == n + 1 ? 1 : N + 2 * i - 1, detail::role('a', i));
    }
    for (int i = 1; i <= n + 1; ++i) {
        d[i] = b.add_node(Player::Odd, i == n + 1 ? N + 2 * n + 2 : N + 2 * i, detail::role('d', i));
    }
    struct Gadget
    {
        NodeId c, e, m, f, g, k, h, l;
    };
    std::vector<Gadget> gad(n + 1);
    for (int i = 1; i <= n; ++i) {
        const Priority base = 14 * Priority(i);
        auto &x = gad[i];
        x.c = b.add_node(Player::Even, base + 1, detail::role('c', i));
        x.e = b.add_node(Player::Odd, base + 4, detail::role('e', i));
        x.m = b.add_node(Player::Even, base + 3, detail::role('m', i));
        x.f = b.add_node(Player::Odd, base + 6, detail::role('f', i));
        x.g = b.add_node(Player::Odd, base + 8, detail::role('g', i));
        x.k = b.add_node(Player::Even, base + 11, detail::role('k', i));
        x.h = b.add_node(Player::Odd, base + 10, detail::role('h', i));
        x.l = b.add_node(Player::Even, base + 13, detail::role('l', i));
    }
    for (int i = 1; i <= n; ++i) {
        const auto &x = gad[i];
        b.add_edge(a[i], x.c);
        b.add_edge(d[i], x.h);

        b.add_edge(x.c, x.e);
        b.add_edge(x.c, x.m);
        if (i > 1) b.add_edge(x.c, a[1]);

        b.add_edge(x.e, x.m);
        b.add_edge(x.e, a[i + 1]);

        b.add_edge(x.m, x.f);
        b.add_edge(x.m, x.c);
        if (i > 1) b.add_edge(x.m, a[1]);

        b.add_edge(x.f, x.c);
        b.add_edge(x.f, d[i + 1]);

        b.add_edge(x.g, x.k);
        b.add_edge(x.g, x.h);
        if (i > 1) b.add_edge(x.g, d[1]);

        b.add_edge(x.k, x.h);
        b.add_edge(x.k, a[i + 1]);

        b.add_edge(x.h, x.l);
        b.add_edge(x.h, x.g);
        if (i > 1) b.add_edge(x.h, d[1]);

        b.add_edge(x.l, x.g);
        b.add_edge(x.l, d[i + 1]);
    }
    b.add_edge(a[n + 1], a[n + 1]);
    b.add_edge(d[n + 1], a[n + 1]);
    b.set_sink(a[n + 1]);

    std::map<NodeId, NodeId> even, odd;
    for (int i = 1; i <= n; ++i) {
        const auto &x = gad[i];
        even[a[i]] = x.c;
        odd[d[i]] = x.h;
        even[x.c] = x.e;
        even[x.m] = x.c;
        odd[x.g] = x.h;
        odd[x.h] = x.l;
        odd[x.e] = a[i + 1];
        odd[x.f] = d[i + 1];
        even[x.k] = a[i + 1];
        even[x.l] = d[i + 1];
    }
    even[a[n + 1]] = a[n + 1];
    odd[d[n + 1]] = a[n + 1];
    return detail::finish(std::move(b), even, odd);
}

} // namespace ssi
