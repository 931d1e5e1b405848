#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ssi/play_value.hpp"

using namespace ssi;

namespace {

// Dense count vector indexed by priority; independent of the sparse code path.
struct Dense
{
    int kind = 1; // 0 = -inf, 1 = finite, 2 = +inf
    std::vector<unsigned> counts;
};

int dense_compare(const Dense &a, const Dense &b)
{
    if (a.kind != b.kind || a.kind != 1) return a.kind < b.kind ? -1 : (a.kind > b.kind ? 1 : 0);
    const std::size_t n = std::max(a.counts.size(), b.counts.size());
    for (std::size_t q = n; q-- > 0;) {
        const unsigned ca = q < a.counts.size() ? a.counts[q] : 0;
        const unsigned cb = q < b.counts.size() ? b.counts[q] : 0;
        if (ca == cb) continue;
        const bool more = ca > cb;
        return (q % 2 == 0) == more ? 1 : -1;
    }
    return 0;
}

PlayValue to_sparse(const Dense &d)
{
    if (d.kind == 0) return PlayValue::neg_infinity();
    if (d.kind == 2) return PlayValue::pos_infinity();
    PlayValue v;
    for (std::size_t q = 0; q < d.counts.size(); ++q) v.add(static_cast<Priority>(q), d.counts[q]);
    return v;
}

Dense random_dense(std::mt19937_64 &rng)
{
    Dense d;
    const int r = std::uniform_int_distribution<int>(0, 19)(rng);
    d.kind = r == 0 ? 0 : (r == 1 ? 2 : 1);
    d.counts.resize(std::uniform_int_distribution<std::size_t>(0, 6)(rng));
    for (auto &c : d.counts) c = std::uniform_int_distribution<unsigned>(0, 2)(rng);
    return d;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

} // namespace

TEST(PlayValue, InfinitiesBracketFiniteValues)
{
    const auto f = PlayValue::from_counts({{5, 3}, {2, 1}});
    EXPECT_LT(PlayValue::neg_infinity(), f);
    EXPECT_LT(f, PlayValue::pos_infinity());
    EXPECT_LT(PlayValue::neg_infinity(), PlayValue{});
    EXPECT_EQ(PlayValue::pos_infinity(), PlayValue::pos_infinity());
}

TEST(PlayValue, HighestDifferingPriorityDecides)
{
    EXPECT_GT(PlayValue::from_counts({{2, 1}}), PlayValue{});
    EXPECT_LT(PlayValue::from_counts({{3, 1}}), PlayValue{});
    EXPECT_LT(PlayValue::from_counts({{4, 1}, {3, 1}}), PlayValue::from_counts({{4, 1}}));
    EXPECT_GT(PlayValue::from_counts({{6, 1}}), PlayValue::from_counts({{5, 9}, {4, 9}}));
    EXPECT_LT(PlayValue::from_counts({{7, 2}}), PlayValue::from_counts({{7, 1}, {6, 0}}));
    EXPECT_GT(PlayValue::from_counts({{4, 2}, {3, 1}}), PlayValue::from_counts({{4, 1}}));
}

TEST(PlayValue, SparseFormIsCanonical)
{
    const auto a = PlayValue::from_counts({{1, 1}, {4, 2}, {1, 1}, {3, 0}});
    ASSERT_EQ(a.entries().size(), 2u);
    EXPECT_EQ(a.entries()[0].priority, 4);
    EXPECT_EQ(a.count(1), 2u);
    EXPECT_EQ(a.count(3), 0u);
    EXPECT_EQ(a.to_string(), "{4:2, 1:2}");
    EXPECT_EQ(PlayValue::neg_infinity().to_string(), "-inf");
}

TEST(PlayValue, InfinitiesAbsorbAddition)
{
    EXPECT_EQ(add_priority(PlayValue::pos_infinity(), 3), PlayValue::pos_infinity());
    EXPECT_EQ(add_priority(PlayValue::neg_infinity(), 2), PlayValue::neg_infinity());
}

TEST(PlayValue, BetterForFollowsOwnerDirection)
{
    const auto lo = PlayValue::from_counts({{3, 1}}), hi = PlayValue::from_counts({{2, 1}});
    EXPECT_TRUE(better_for(Player::Even, hi, lo));
    EXPECT_TRUE(better_for(Player::Odd, lo, hi));
    EXPECT_FALSE(better_for(Player::Even, hi, hi));
}

TEST(PlayValue, AgreesWithDenseReference)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        const Dense a = random_dense(rng), b = random_dense(rng);
        ASSERT_EQ(sign(compare(to_sparse(a), to_sparse(b))), dense_compare(a, b));
    }
}

TEST(PlayValue, TotalOrderLaws)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const auto a = to_sparse(random_dense(rng)), b = to_sparse(random_dense(rng)), c = to_sparse(random_dense(rng));
        EXPECT_EQ(sign(a <=> b), -sign(b <=> a));
        EXPECT_EQ(a == b, (a <=> b) == 0);
        if (a <= b && b <= c) {
            EXPECT_LE(a, c);
        }
    }
}

TEST(PlayValue, TranslationInvariance)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10000; ++i) {
        Dense da = random_dense(rng), db = random_dense(rng);
        da.kind = db.kind = 1;
        const auto a = to_sparse(da), b = to_sparse(db);
        const Priority q = std::uniform_int_distribution<Priority>(0, 7)(rng);
        EXPECT_EQ(sign(add_priority(a, q) <=> add_priority(b, q)), sign(a <=> b));
    }
}
