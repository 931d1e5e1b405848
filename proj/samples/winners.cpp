// Reads a PGSolver file and prints both winning regions.

#include <fstream>
#include <iostream>
#include <iterator>

#include "ssi/ssi.hpp"

int main(int argc, char **argv)
{
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " GAME.pg\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    try {
        const auto game = ssi::parse_pgsolver(text);
        const auto w = ssi::solve_winners(game);
        for (ssi::NodeId v = 0; v < game.size(); ++v) {
            const bool even = w.winner(v) == ssi::Player::Even;
            const auto &s = even ? w.even_strategy : w.odd_strategy;
            std::cout << v << (game.label(v) ? " " + *game.label(v) : "") << ": player " << (even ? 0 : 1);
            if (game.owner(v) == w.winner(v)) std::cout << ", plays " << s[v];
            std::cout << '\n';
        }
    } catch (const ssi::InputError &e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
