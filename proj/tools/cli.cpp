#include "cli.hpp"

#include <fstream>
#include <future>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssi/ssi.hpp"

namespace ssi::cli {

namespace {

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out) throw InputError("failed writing '" + path + "'");
}

bool ends_with(const std::string &s, const std::string &suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

LabeledInstance generate_family(const std::string &family, int n)
{
    if (n < 1) throw InputError("--n must be at least 1");
    if (family == "table1") return gen_table1(n);
    if (family == "table2") return gen_table2(n);
    throw InputError("unknown family '" + family + "'");
}

void write_id_list(std::ostream &out, const char *name, const std::vector<NodeId> &ids)
{
    out << name << ':';
    for (NodeId v : ids) out << ' ' << v;
    out << '\n';
}

struct GenerateArgs
{
    std::string family;
    int n = 0;
    std::string out, sigma0_out, tau0_out;
};

int do_generate(const GenerateArgs &a, std::ostream &out)
{
    const auto inst = generate_family(a.family, a.n);
    const auto text = write_pgsolver(inst.game);
    if (a.out.empty()) out << text;
    else write_file(a.out, text);
    if (!a.sigma0_out.empty()) write_file(a.sigma0_out, write_strategy(inst.even0));
    if (!a.tau0_out.empty()) write_file(a.tau0_out, write_strategy(inst.odd0));
    return kExitOk;
}

struct SolveArgs
{
    std::string algo, rule = "all";
    std::optional<std::uint64_t> seed;
    std::string game, family;
    int n = 0;
    std::string trace, sigma0, tau0, sigma_out, tau_out;
    int player = 0;
};

int do_solve(const SolveArgs &a, std::ostream &out)
{
    const Algorithm algo = algorithm_from_name(a.algo);
    ImprovementRule rule = ImprovementRule::from_name(a.rule, a.seed.value_or(0));
    if (a.seed && rule.kind() != ImprovementRule::Kind::RandomSubset) {
        throw InputError("--seed only applies to --rule random");
    }

    std::optional<ParityGame> game;
    std::optional<Strategy> even, odd;
    std::string game_id;
    if (!a.family.empty()) {
        auto inst = generate_family(a.family, a.n);
        game_id = a.family + "-n" + std::to_string(a.n);
        even = std::move(inst.even0);
        odd = std::move(inst.odd0);
        game = std::move(inst.game);
    } else {
        game = parse_pgsolver(read_file(a.game));
        game_id = a.game;
    }
    if (!game->sink()) throw InputError("game has no sink node (a lowest-priority self-loop)");
    if (!a.sigma0.empty()) even = parse_strategy(read_file(a.sigma0), *game, Player::Even);
    if (!a.tau0.empty()) odd = parse_strategy(read_file(a.tau0), *game, Player::Odd);

    if (algo == Algorithm::StrategyImprovement) {
        // One-sided: improve the side whose file was given, else --player.
        if (!a.sigma0.empty() && !a.tau0.empty()) throw InputError("si takes only one of --sigma0 and --tau0");
        if (!a.tau0.empty() || (a.sigma0.empty() && a.player == 1)) even.reset();
        else odd.reset();
    }
    if (!even && (algo != Algorithm::StrategyImprovement || !odd)) {
        throw InputError("an initial strategy for player 0 is required (--sigma0)");
    }
    if (!odd && (algo != Algorithm::StrategyImprovement || !even)) {
        throw InputError("an initial strategy for player 1 is required (--tau0)");
    }
    for (const auto *s : {even ? &*even : nullptr, odd ? &*odd : nullptr}) {
        if (s && !is_admissible(*game, *s)) {
            throw InputError(std::string("initial strategy of player ") + (s->player() == Player::Even ? "0" : "1") +
                             " is not admissible");
        }
    }

    const SolveResult result = solve(*game, algo, even, odd, rule, {});
    bool optimal = false;
    if (result.even && result.odd) {
        optimal = verify_optimal(*game, *result.even, *result.odd).optimal;
        if (!optimal) throw InvariantViolation("symmetric solver stopped at a non-optimal pair");
    } else {
        const auto &s = result.even ? *result.even : *result.odd;
        optimal = improving_moves(*game, s, valuate(*game, s)).empty();
    }

    if (!a.trace.empty()) {
        TraceHeader h{game_id,
                      std::string(name_of(algo)),
                      std::string(rule.name()),
                      rule.seed(),
                      game->size(),
                      game->edge_count()};
        const TraceFile file = make_trace_file(std::move(h), result.trace, optimal);
        if (ends_with(a.trace, ".json")) write_file(a.trace, to_json(file).dump(2) + "\n");
        else if (ends_with(a.trace, ".csv")) write_file(a.trace, to_csv(file));
        else throw InputError("--trace needs a .csv or .json file name");
    }
    if (!a.sigma_out.empty()) {
        if (!result.even) throw InputError("--sigma-out: no player 0 strategy was computed");
        write_file(a.sigma_out, write_strategy(*result.even));
    }
    if (!a.tau_out.empty()) {
        if (!result.odd) throw InputError("--tau-out: no player 1 strategy was computed");
        write_file(a.tau_out, write_strategy(*result.odd));
    }

    out << "algorithm: " << name_of(algo) << '\n';
    out << "rule: " << rule.name() << '\n';
    out << "iterations: " << result.iterations << '\n';
    out << "optimal: " << (optimal ? "true" : "false") << '\n';
    return kExitOk;
}

int do_reduce(const std::string &game, const std::string &dest, std::ostream &out)
{
    const auto g = parse_pgsolver(read_file(game));
    const auto [reduced, map] = reduce_to_sink_game(g);
    write_file(dest, write_pgsolver(reduced));
    out << "nodes: " << g.size() << " -> " << reduced.size() << '\n';
    out << "top: " << map.top << '\n';
    out << "w: " << map.w << '\n';
    return kExitOk;
}

struct WinnersArgs
{
    std::string game, algo = "si", rule = "all", sigma_out, tau_out;
};

int do_winners(const WinnersArgs &a, std::ostream &out)
{
    const auto g = parse_pgsolver(read_file(a.game));
    const auto regions = solve_winners(g, algorithm_from_name(a.algo), ImprovementRule::from_name(a.rule));
    write_id_list(out, "W0", regions.even);
    write_id_list(out, "W1", regions.odd);
    if (!a.sigma_out.empty()) write_file(a.sigma_out, write_strategy(regions.even_strategy));
    if (!a.tau_out.empty()) write_file(a.tau_out, write_strategy(regions.odd_strategy));
    return kExitOk;
}

struct ExperimentArgs
{
    std::string family, algo;
    int n_max = 0;
};

std::optional<long long> closed_form(const std::string &family, Algorithm algo, int n)
{
    if (family == "table1" && algo == Algorithm::SymmetricImprovement) return (1LL << (n + 1)) - 3;
    if (family == "table2" && algo == Algorithm::GeneralizedSymmetricImprovement) return 7 * (1LL << (n - 1)) - 5;
    return std::nullopt;
}

int do_experiment(const ExperimentArgs &a, std::ostream &out)
{
    const Algorithm algo = algorithm_from_name(a.algo);
    if (algo == Algorithm::StrategyImprovement) throw InputError("iteration-table runs ssi or gssi");
    if (a.n_max < 1) throw InputError("--n-max must be at least 1");
    generate_family(a.family, 1); // validates the family name before spawning work

    std::vector<std::future<std::size_t>> runs;
    for (int n = 1; n <= a.n_max; ++n) {
        runs.push_back(std::async(std::launch::async, [&a, algo, n] {
            auto inst = generate_family(a.family, n);
            SolveOptions opt;
            opt.record_trace = false;
            const auto r = solve(inst.game, algo, inst.even0, inst.odd0, ImprovementRule::switch_all(), opt);
            if (!verify_optimal(inst.game, *r.even, *r.odd).optimal) {
                throw InvariantViolation("run ended at a non-optimal pair for n=" + std::to_string(n));
            }
            return r.iterations;
        }));
    }
    out << "n,measured,expected,match\n";
    for (int n = 1; n <= a.n_max; ++n) {
        const std::size_t measured = runs[n - 1].get();
        const auto expected = closed_form(a.family, algo, n);
        out << n << ',' << measured << ',';
        if (expected) out << *expected << ',' << (static_cast<long long>(measured) == *expected ? "yes" : "no");
        else out << "n/a,n/a";
        out << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Symmetric strategy improvement for sink parity games", "ssi"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Write a lower-bound family instance in PGSolver format");
    generate->add_option("family", gen.family, "table1 or table2")->required()->check(CLI::IsMember({"table1", "table2"}));
    generate->add_option("--n", gen.n, "Family parameter")->required();
    generate->add_option("--out", gen.out, "Output file (default: stdout)");
    generate->add_option("--sigma0-out", gen.sigma0_out, "Write the initial player 0 strategy");
    generate->add_option("--tau0-out", gen.tau0_out, "Write the initial player 1 strategy");

    SolveArgs sol;
    auto *solve_cmd = app.add_subcommand("solve", "Run a solver and report the iteration count");
    solve_cmd->add_option("--algo", sol.algo, "si, ssi or gssi")->required()->check(CLI::IsMember({"si", "ssi", "gssi"}));
    solve_cmd->add_option("--rule", sol.rule, "all, single or random")->check(CLI::IsMember({"all", "single", "random"}));
    solve_cmd->add_option("--seed", sol.seed, "Seed for --rule random");
    auto *game_opt = solve_cmd->add_option("--game", sol.game, "PGSolver input file");
    auto *family_opt =
        solve_cmd->add_option("--family", sol.family, "table1 or table2")->check(CLI::IsMember({"table1", "table2"}));
    auto *n_opt = solve_cmd->add_option("--n", sol.n, "Family parameter");
    game_opt->excludes(family_opt);
    family_opt->needs(n_opt);
    n_opt->needs(family_opt);
    solve_cmd->add_option("--trace", sol.trace, "Write the switch trace (.csv or .json)");
    solve_cmd->add_option("--sigma0", sol.sigma0, "Initial player 0 strategy file");
    solve_cmd->add_option("--tau0", sol.tau0, "Initial player 1 strategy file");
    solve_cmd->add_option("--sigma-out", sol.sigma_out, "Write the final player 0 strategy");
    solve_cmd->add_option("--tau-out", sol.tau_out, "Write the final player 1 strategy");
    solve_cmd->add_option("--player", sol.player, "Player improved by si when no strategy file is given")
        ->check(CLI::Range(0, 1));

    std::string reduce_game, reduce_out;
    auto *reduce = app.add_subcommand("reduce", "Break same-owner cycles and build the sink game");
    reduce->add_option("--game", reduce_game, "PGSolver input file")->required();
    reduce->add_option("--out", reduce_out, "PGSolver output file")->required();

    WinnersArgs win;
    auto *winners = app.add_subcommand("winners", "Compute winning regions via the sink-game reduction");
    winners->add_option("--game", win.game, "PGSolver input file")->required();
    winners->add_option("--algo", win.algo, "si, ssi or gssi")->check(CLI::IsMember({"si", "ssi", "gssi"}));
    winners->add_option("--rule", win.rule, "all or single")->check(CLI::IsMember({"all", "single"}));
    winners->add_option("--sigma-out", win.sigma_out, "Write a player 0 strategy for the original game");
    winners->add_option("--tau-out", win.tau_out, "Write a player 1 strategy for the original game");

    ExperimentArgs exp;
    auto *experiment = app.add_subcommand("experiment", "Reproduction experiments");
    experiment->require_subcommand(1);
    auto *table = experiment->add_subcommand("iteration-table", "Measured versus closed-form iteration counts");
    table->add_option("--family", exp.family, "table1 or table2")->required()->check(CLI::IsMember({"table1", "table2"}));
    table->add_option("--algo", exp.algo, "ssi or gssi")->required()->check(CLI::IsMember({"ssi", "gssi"}));
    table->add_option("--n-max", exp.n_max, "Largest n")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInput;
    }

    try {
        if (*generate) return do_generate(gen, out);
        if (*solve_cmd) {
            if (sol.game.empty() && sol.family.empty()) throw InputError("solve needs --game or --family");
            return do_solve(sol, out);
        }
        if (*reduce) return do_reduce(reduce_game, reduce_out, out);
        if (*winners) return do_winners(win, out);
        if (*table) return do_experiment(exp, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NotAdmissible &e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    err << app.help();
    return kExitInput;
}

} // namespace ssi::cli
