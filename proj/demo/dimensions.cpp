// Computes the four dimension parameters of one graph end to end.

#include <iostream>

#include "mdim/mdim.hpp"

int main() {
    using namespace mdim;

    const Graph g = generate(FamilySpec::parse("petersen"));
    const PairSystem ps = pair_system(g);
    std::cout << "Petersen graph: n=" << g.n << ", kappa=" << ps.kappa << "\n";

    const DimensionResult fd = fractional_dimension(ps);
    std::cout << "dim_f  = " << fd.value << "\n";

    const DimensionResult f3 = fractional_k_dimension(ps, Rational(3));
    std::cout << "dim_f^3 = " << f3.value << "\n";

    const IntegerDimResult d = k_metric_dimension(ps, 1);
    std::cout << "dim    = " << d.value << "  (witness:";
    for (int v : to_vertex_list(d.witness)) std::cout << ' ' << v;
    std::cout << ")\n";

    const IntegerDimResult d3 = k_metric_dimension(ps, 3);
    std::cout << "dim^3  = " << d3.value << "\n";
    return 0;
}
