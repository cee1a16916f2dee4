// Samples phi(k) = dim_f^k across [1, kappa] for a path and prints the
// piecewise-linear profile.

#include <iostream>

#include "mdim/mdim.hpp"

int main() {
    using namespace mdim;

    const Graph g = generate(FamilySpec::parse("path:7"));
    const int kappa = pair_system(g).kappa;
    const auto samples = default_sweep_grid(kappa, 2);
    std::cout << "k,value\n";
    for (const auto& [k, value] : sweep_phi(g, samples))
        std::cout << k << "," << value << "\n";
    return 0;
}
