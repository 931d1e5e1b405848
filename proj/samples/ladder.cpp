// Runs both symmetric solvers on the ladder family and prints the switches.

#include <cstdlib>
#include <iostream>

#include "ssi/ssi.hpp"

int main(int argc, char **argv)
{
    const int n = argc > 1 ? std::atoi(argv[1]) : 3;
    const auto inst = ssi::gen_table1(n);
    const auto &labels = inst.labels;

    const auto r = ssi::run_ssi(inst.game, inst.even0, inst.odd0, ssi::ImprovementRule::switch_all());
    for (const auto &it : r.trace.iterations) {
        if (it.switched.empty()) continue;
        std::cout << it.index << ':';
        for (const auto &sw : it.switched) std::cout << ' ' << labels[sw.edge.from] << "->" << labels[sw.edge.to];
        std::cout << '\n';
    }
    std::cout << "ssi iterations: " << r.iterations << '\n';

    const auto g = ssi::run_gssi(inst.game, inst.even0, inst.odd0, ssi::ImprovementRule::switch_all());
    std::cout << "gssi iterations: " << g.iterations << '\n';
    std::cout << "same optimum: " << std::boolalpha << (*r.even == *g.even && *r.odd == *g.odd) << '\n';
}
