#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "../support/random_games.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

using namespace ssi;

namespace {

struct Run
{
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = ssi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CliTest : ::testing::Test
{
    std::filesystem::path dir;

    void SetUp() override
    {
        dir = std::filesystem::temp_directory_path() /
              ("ssi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }

    std::string path(const std::string &name) const { return (dir / name).string(); }
    void put(const std::string &name, const std::string &text) const { std::ofstream(dir / name) << text; }
};

} // namespace

TEST_F(CliTest, GenerateWritesGameAndStrategies)
{
    const auto r = invoke({"generate", "table1", "--n", "2", "--out", path("g.pg"), "--sigma0-out", path("s0"),
                        "--tau0-out", path("t0")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_pgsolver(slurp(path("g.pg"))), gen_table1(2).game);
    EXPECT_EQ(slurp(path("s0")), write_strategy(gen_table1(2).even0));
    const auto s = invoke({"generate", "table1", "--n", "2"});
    EXPECT_EQ(s.out, write_pgsolver(gen_table1(2).game));
}

TEST_F(CliTest, SolveFamilyAndFileGiveSameTrace)
{
    ASSERT_EQ(invoke({"generate", "table2", "--n", "2", "--out", path("g.pg"), "--sigma0-out", path("s0"), "--tau0-out",
                   path("t0")})
                  .code,
              0);
    const auto a = invoke({"solve", "--algo", "gssi", "--rule", "all", "--family", "table2", "--n", "2", "--trace",
                        path("a.csv"), "--sigma-out", path("sig"), "--tau-out", path("tau")});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("iterations: 9\n"), std::string::npos);
    EXPECT_NE(a.out.find("optimal: true\n"), std::string::npos);
    const auto b = invoke({"solve", "--algo", "gssi", "--game", path("g.pg"), "--sigma0", path("s0"), "--tau0",
                        path("t0"), "--trace", path("b.json")});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(trace_from_csv(slurp(path("a.csv"))).rows, trace_from_json(nlohmann::json::parse(slurp(path("b.json")))).rows);
    const auto g = gen_table2(2).game;
    const auto sig = parse_strategy(slurp(path("sig")), g, Player::Even);
    const auto tau = parse_strategy(slurp(path("tau")), g, Player::Odd);
    EXPECT_TRUE(verify_optimal(g, sig, tau).optimal);
}

TEST_F(CliTest, SolveIsDeterministicPerSeed)
{
    std::vector<std::string> args{"solve", "--algo", "ssi", "--rule", "random", "--seed", "17",
                                  "--family", "table1", "--n", "4", "--trace", path("x.csv")};
    ASSERT_EQ(invoke(args).code, 0);
    const auto first = slurp(path("x.csv"));
    ASSERT_EQ(invoke(args).code, 0);
    EXPECT_EQ(slurp(path("x.csv")), first);
    EXPECT_NE(first.find("rule=random seed=17"), std::string::npos);
}

TEST_F(CliTest, SingleSidedSolve)
{
    const auto r = invoke({"solve", "--algo", "si", "--family", "table1", "--n", "3", "--player", "1", "--tau-out",
                        path("tau")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("optimal: true"), std::string::npos);
    EXPECT_EQ(invoke({"solve", "--algo", "si", "--family", "table1", "--n", "3", "--sigma-out", path("x")}).code, 0);
    EXPECT_EQ(invoke({"solve", "--algo", "si", "--family", "table1", "--n", "3", "--tau-out", path("y")}).code, 2);
}

TEST_F(CliTest, ExperimentTables)
{
    const auto a = invoke({"experiment", "iteration-table", "--family", "table1", "--algo", "ssi", "--n-max", "5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, "n,measured,expected,match\n1,1,1,yes\n2,5,5,yes\n3,13,13,yes\n4,29,29,yes\n5,61,61,yes\n");
    const auto b = invoke({"experiment", "iteration-table", "--family", "table2", "--algo", "gssi", "--n-max", "4"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(b.out, "n,measured,expected,match\n1,2,2,yes\n2,9,9,yes\n3,23,23,yes\n4,51,51,yes\n");
    const auto c = invoke({"experiment", "iteration-table", "--family", "table1", "--algo", "gssi", "--n-max", "2"});
    EXPECT_EQ(c.out, "n,measured,expected,match\n1,1,n/a,n/a\n2,2,n/a,n/a\n");
}

TEST_F(CliTest, ReduceAndWinners)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const auto g = test_support::random_parity_game(rng, {2, 6, 3, 6});
        put("g.pg", write_pgsolver(g));
        ASSERT_EQ(invoke({"reduce", "--game", path("g.pg"), "--out", path("r.pg")}).code, 0);
        EXPECT_TRUE(parse_pgsolver(slurp(path("r.pg"))).sink().has_value());
        const auto w = invoke({"winners", "--game", path("g.pg"), "--sigma-out", path("s"), "--tau-out", path("t")});
        ASSERT_EQ(w.code, 0) << w.err;
        const auto ref = oracle::brute_force_winners(with_sink(g, find_sink_candidate(g)));
        std::ostringstream expect;
        expect << "W0:";
        for (NodeId v : ref.of(Player::Even)) expect << ' ' << v;
        expect << "\nW1:";
        for (NodeId v : ref.of(Player::Odd)) expect << ' ' << v;
        expect << '\n';
        EXPECT_EQ(w.out, expect.str());
        // Strategy files parse against the original game.
        const auto pg = parse_pgsolver(slurp(path("g.pg")));
        EXPECT_NO_THROW(parse_strategy(slurp(path("s")), pg, Player::Even));
        EXPECT_NO_THROW(parse_strategy(slurp(path("t")), pg, Player::Odd));
    }
}

TEST_F(CliTest, InputErrorsExitTwo)
{
    EXPECT_EQ(invoke({}).code, 2);
    const auto unknown = invoke({"solve", "--algo", "ssi", "--bogus"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    EXPECT_EQ(invoke({"generate", "table3", "--n", "2"}).code, 2);
    EXPECT_EQ(invoke({"generate", "table1", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"solve", "--algo", "ssi", "--game", path("missing.pg")}).code, 2);
    put("bad.pg", "0 1 0 99;");
    const auto bad = invoke({"winners", "--game", path("bad.pg")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("99"), std::string::npos);
    EXPECT_EQ(invoke({"solve", "--algo", "ssi", "--family", "table1", "--n", "2", "--seed", "3"}).code, 2);
    EXPECT_EQ(invoke({"solve", "--algo", "ssi", "--family", "table1"}).code, 2);
    EXPECT_EQ(invoke({"solve", "--algo", "ssi", "--family", "table1", "--n", "2", "--trace", path("t.txt")}).code, 2);
}

TEST_F(CliTest, InadmissibleStartIsAnInputError)
{
    // x -> y -> x closes an odd cycle when player 0 stays away from the sink.
    put("g.pg", "0 0 0 0; 1 3 0 2,0; 2 2 1 1;");
    put("s0", "1 2\n");
    put("t0", "");
    EXPECT_EQ(invoke({"solve", "--algo", "ssi", "--game", path("g.pg"), "--sigma0", path("s0"), "--tau0", path("t0")}).code,
              2);
    put("s1", "1 0\n");
    EXPECT_EQ(invoke({"solve", "--algo", "ssi", "--game", path("g.pg"), "--sigma0", path("s1"), "--tau0", path("t0")}).code,
              0);
}

TEST_F(CliTest, HelpExitsZero)
{
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("experiment"), std::string::npos);
}
