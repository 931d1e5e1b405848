#include <random>

#include <gtest/gtest.h>

#include "../support/random_games.hpp"
#include "fixtures.hpp"

using namespace ssi;

TEST(Oracle, StrategyCounting)
{
    const auto inst = gen_table1(3);
    EXPECT_EQ(oracle::strategy_count(inst.game, Player::Even), 18u);
    EXPECT_EQ(oracle::strategy_count(inst.game, Player::Odd), 18u);
    EXPECT_EQ(oracle::all_strategies(inst.game, Player::Even).size(), 18u);
}

TEST(Oracle, WalkPlayOnSmallestLadder)
{
    const auto inst = gen_table1(1);
    EXPECT_EQ(oracle::walk_play(inst.game, inst.even0, inst.odd0, inst.id("d1")), PlayValue::from_counts({{6, 1}, {4, 1}}));
    EXPECT_EQ(oracle::walk_play(inst.game, inst.even0, inst.odd0, inst.id("a2")), PlayValue{});
}

TEST(Oracle, WalkPlayDetectsCyclesAvoidingTheSink)
{
    GameBuilder b;
    const auto t = b.add_node(Player::Even, 0), x = b.add_node(Player::Even, 3), y = b.add_node(Player::Odd, 2);
    b.add_edge(t, t);
    b.add_edge(x, y);
    b.add_edge(x, t);
    b.add_edge(y, x);
    b.set_sink(t);
    const auto g = std::move(b).build();
    const auto e = make_strategy(g, Player::Even, {{x, y}});
    const auto o = make_strategy(g, Player::Odd, {});
    EXPECT_EQ(oracle::walk_play(g, e, o, x), PlayValue::neg_infinity());
    EXPECT_EQ(oracle::play_winner(g, e, o, y), Player::Odd);
    EXPECT_FALSE(oracle::admissible_by_cycles(g, e));
    EXPECT_FALSE(oracle::admissible_by_enumeration(g, e));
}

TEST(Oracle, AdmissibilityAgreesWithValuation)
{
    std::mt19937_64 rng(31);
    int tested = 0, rejected = 0;
    for (int i = 0; i < 400; ++i) {
        const auto g = test_support::random_sink_game(rng);
        for (Player p : {Player::Even, Player::Odd}) {
            const auto s = test_support::random_strategy(rng, g, p);
            const bool cycles = oracle::admissible_by_cycles(g, s);
            ASSERT_EQ(is_admissible(g, s), cycles) << write_pgsolver(g);
            ASSERT_EQ(oracle::admissible_by_enumeration(g, s), cycles);
            ++tested;
            rejected += !cycles;
        }
    }
    EXPECT_GT(rejected, 0);
    EXPECT_GT(tested - rejected, 0);
}

TEST(Oracle, BudgetIsEnforced)
{
    const auto inst = gen_table1(6);
    EXPECT_THROW(oracle::enumerate_optimal_strategy(inst.game, Player::Even), BudgetExceeded);
    oracle::EnumerationBudget big{64, std::uint64_t{1} << 40};
    EXPECT_NO_THROW(oracle::enumerate_optimal_response(inst.game, inst.even0, big));
}

TEST(Oracle, OptimalStrategyOfLadder)
{
    for (int n = 1; n <= 3; ++n) {
        const auto inst = gen_table1(n);
        const auto [e, o] = table1_optimal(inst, n);
        const auto oe = oracle::enumerate_optimal_strategy(inst.game, Player::Even);
        const auto oo = oracle::enumerate_optimal_strategy(inst.game, Player::Odd);
        EXPECT_EQ(oe.strategy, e);
        EXPECT_EQ(oo.strategy, o);
        EXPECT_EQ(oe.values, oo.values);
    }
}

TEST(Oracle, BruteForceWinnersOnTinyGame)
{
    GameBuilder b;
    const auto x = b.add_node(Player::Even, 2), y = b.add_node(Player::Odd, 1), z = b.add_node(Player::Even, 3);
    b.add_edge(x, x);
    b.add_edge(y, x);
    b.add_edge(y, z);
    b.add_edge(z, z);
    const auto w = oracle::brute_force_winners(std::move(b).build());
    EXPECT_TRUE(w.determined);
    EXPECT_EQ(w.of(Player::Even), (std::vector<NodeId>{x}));
    EXPECT_EQ(w.of(Player::Odd), (std::vector<NodeId>{y, z}));
}
