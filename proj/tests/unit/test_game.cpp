#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace ssi;

TEST(Game, BuilderKeepsAdjacencyOrderAndDistinctPredecessors)
{
    GameBuilder b;
    const auto x = b.add_node(Player::Even, 2), y = b.add_node(Player::Odd, 3, "y");
    b.add_edge(x, y);
    b.add_edge(x, x);
    b.add_edge(y, x);
    b.add_edge(y, x);
    const auto g = std::move(b).build();
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(std::vector<NodeId>(g.successors(x).begin(), g.successors(x).end()), (std::vector<NodeId>{y, x}));
    EXPECT_EQ(std::vector<NodeId>(g.predecessors(x).begin(), g.predecessors(x).end()), (std::vector<NodeId>{x, y}));
    EXPECT_EQ(g.label(y), "y");
    EXPECT_FALSE(g.label(x).has_value());
    EXPECT_EQ(g.nodes_of(Player::Odd), std::vector<NodeId>{y});
    EXPECT_EQ(g.min_priority(), 2);
    EXPECT_EQ(g.max_priority(), 3);
}

TEST(Game, RejectsMalformedTables)
{
    EXPECT_THROW(ParityGame({{1, Player::Even, 0, {}}}, {{0}}), InputError);
    EXPECT_THROW(ParityGame({{0, Player::Even, 0, {}}}, {{5}}), InputError);
    EXPECT_THROW(ParityGame({{0, Player::Even, 0, {}}}, {{0}}, NodeId{3}), InputError);
}

TEST(Game, ValidateReportsEachRule)
{
    GameBuilder b;
    const auto t = b.add_node(Player::Even, 1), x = b.add_node(Player::Odd, 1), y = b.add_node(Player::Even, 4);
    b.add_edge(t, t);
    b.add_edge(t, x);
    b.add_edge(x, t);
    b.set_sink(t);
    (void)y;
    const auto report = validate_game(std::move(b).build());
    ASSERT_EQ(report.size(), 3u);
    EXPECT_EQ(report[0].rule, Rule::NodeWithoutSuccessor);
    EXPECT_EQ(report[0].node, y);
    EXPECT_EQ(report[1].rule, Rule::SinkSelfLoopOnly);
    EXPECT_EQ(report[1].message(), "sink self-loop only at node 0 (edge 0 -> 1)");
    EXPECT_EQ(report[2].rule, Rule::SinkPriorityNotMinimal);
    EXPECT_EQ(report[2].node, x);
}

TEST(Game, LadderValidatesAndHasItsSink)
{
    const auto inst = gen_table1(3);
    EXPECT_TRUE(validate_game(inst.game).empty());
    EXPECT_EQ(find_sink_candidate(inst.game), inst.game.sink());
    EXPECT_EQ(inst.game.sink(), inst.id("a4"));
}

TEST(Game, SinkCandidateNeedsUniqueMinimumAndSelfLoop)
{
    GameBuilder b;
    const auto t = b.add_node(Player::Even, 0), x = b.add_node(Player::Odd, 0);
    b.add_edge(t, t);
    b.add_edge(x, t);
    EXPECT_FALSE(find_sink_candidate(b.build()).has_value());
    GameBuilder c;
    const auto u = c.add_node(Player::Even, 0), z = c.add_node(Player::Odd, 3);
    c.add_edge(u, z);
    c.add_edge(z, u);
    EXPECT_FALSE(find_sink_candidate(c.build()).has_value());
}

TEST(Strategy, CheckAndBuild)
{
    const auto g = parse_pgsolver(test_support::kG1Text);
    const auto s = make_strategy(g, Player::Even, {{0, 3}});
    EXPECT_EQ(s[0], 3u);
    EXPECT_EQ(s[1], 1u); // single successor filled in
    EXPECT_FALSE(s.defined_at(2));
    EXPECT_THROW(make_strategy(g, Player::Even, {{0, 2}}), InvalidStrategy);
    EXPECT_THROW(make_strategy(g, Player::Even, {{2, 1}}), InvalidStrategy);
    Strategy partial(Player::Odd, g.size());
    partial.set(2, 1);
    EXPECT_FALSE(is_valid_strategy(g, partial));
    EXPECT_THROW(check_strategy(g, Strategy(Player::Odd, 3)), InvalidStrategy);
}

TEST(Strategy, SubgraphFixesOnlyOwnedNodes)
{
    const auto g = parse_pgsolver(test_support::kG1Text);
    const auto s = make_strategy(g, Player::Even, {{0, 3}});
    const auto sub = strategy_subgraph(g, s);
    ASSERT_EQ(sub.successors(0).size(), 1u);
    EXPECT_EQ(sub.successors(0)[0], 3u);
    EXPECT_EQ(sub.successors(2).size(), 2u);
}
