#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace ssi;

namespace {

struct RuleFixture : ::testing::Test
{
    LabeledInstance inst = gen_table1(3);
    Valuation xe = valuate(inst.game, inst.even0);
    Valuation xo = valuate(inst.game, inst.odd0);
    RuleContext ctx{inst.game, &xe, &xo};
    EdgeSet cands = [this] {
        EdgeSet all;
        for (NodeId v = 0; v < inst.game.size(); ++v) {
            if (inst.game.is_sink(v)) continue;
            for (NodeId w : inst.game.successors(v)) all.insert({v, w});
        }
        return all;
    }();
};

} // namespace

TEST_F(RuleFixture, SwitchAllPicksBestPerSource)
{
    const auto chosen = rule_switch_all(cands, ctx);
    check_rule_axioms(cands, chosen);
    std::set<NodeId> sources;
    for (const auto &e : cands) sources.insert(e.from);
    EXPECT_EQ(chosen.size(), sources.size());
    for (const auto &e : chosen) {
        const Player p = inst.game.owner(e.from);
        const auto &xi = p == Player::Even ? xe : xo;
        for (const auto &f : cands) {
            if (f.from != e.from) continue;
            EXPECT_FALSE(better_for(p, xi[f.to], xi[e.to]));
            if (xi[f.to] == xi[e.to]) {
                EXPECT_GE(f.to, e.to);
            }
        }
    }
}

TEST_F(RuleFixture, SingleLowestIsLexicographicMinimum)
{
    EXPECT_EQ(rule_single_lowest(cands), EdgeSet{*cands.begin()});
    EXPECT_TRUE(rule_single_lowest({}).empty());
}

TEST_F(RuleFixture, RandomSubsetObeysAxiomsAndIsSeeded)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto chosen = rule_random_subset(cands, seed);
        check_rule_axioms(cands, chosen);
        EXPECT_EQ(chosen, rule_random_subset(cands, seed));
    }
    EXPECT_TRUE(rule_random_subset(EdgeSet{}, 1).empty());
}

TEST_F(RuleFixture, RuleObjectCarriesItsStream)
{
    auto r1 = ImprovementRule::random_subset(5), r2 = ImprovementRule::random_subset(5);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(r1(cands, ctx), r2(cands, ctx));
    EXPECT_EQ(ImprovementRule::from_name("single").kind(), ImprovementRule::Kind::SingleLowest);
    EXPECT_EQ(ImprovementRule::from_name("all").name(), "all");
    EXPECT_EQ(ImprovementRule::from_name("random", 9).seed(), std::optional<std::uint64_t>(9));
    EXPECT_THROW(ImprovementRule::from_name("greedy"), InputError);
}

TEST(RuleAxioms, RejectsBadChoices)
{
    const EdgeSet c{{0, 1}, {0, 2}, {1, 0}};
    EXPECT_THROW(check_rule_axioms(c, {}), InvariantViolation);
    EXPECT_THROW(check_rule_axioms(c, {{0, 1}, {0, 2}}), InvariantViolation);
    EXPECT_THROW(check_rule_axioms(c, {{2, 0}}), InvariantViolation);
    EXPECT_NO_THROW(check_rule_axioms({}, {}));
    EXPECT_NO_THROW(check_rule_axioms(c, {{0, 2}, {1, 0}}));
}
