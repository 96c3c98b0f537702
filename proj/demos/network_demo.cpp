// Builds the standard network for n = 3, prints its weight matrix and checks
// every minor against the count of vertex-disjoint path families.

#include <iostream>

#include "totpos/totpos.hpp"

int main() {
    using namespace totpos;
    const std::vector<Scalar> w{2, 3, 5, 7, 11, 13, 17, 19, 23};
    const Gamma0 g = gamma0(3, w);
    const Matrix x = weight_matrix(g.network);
    std::cout << x << "\n\n";

    for (const auto& e : g.essential)
        std::cout << "edge " << e.edge << "  weight " << g.network.edges()[e.edge].weight << "  leads " << to_string(e.minor) << '\n';

    std::size_t agree = 0;
    const auto specs = all_minor_specs(3);
    for (const auto& s : specs)
        if (minor(x, s) == disjoint_path_minor(g.network, s)) ++agree;
    std::cout << '\n' << agree << " of " << specs.size() << " minors match the path-family sums\n";
    return agree == specs.size() ? 0 : 1;
}
