// Factors a totally positive matrix along the scheme "2~ 1 @3 2 1~ @1 2~ 1 @2"
// and writes each parameter as a monomial in chamber minors of the twisted matrix.

#include <iostream>

#include "totpos/totpos.hpp"

int main() {
    using namespace totpos;
    const Matrix x{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
    const Word scheme = Word::parse("2~ 1 @3 2 1~ @1 2~ 1 @2", 3);

    const auto t = factor_scheme(x, scheme);
    std::cout << "scheme  " << scheme.str() << "\nparams ";
    for (const auto& v : t) std::cout << ' ' << v;
    std::cout << "\n\nx' =\n" << twist(x) << "\n\n";

    const auto d = DoubleWiringDiagram::of_scheme(scheme);
    const auto fit = fit_twist_monomials(x, scheme, d);
    if (!fit) {
        std::cout << "no monomial fit\n";
        return 1;
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
        std::cout << "t" << k + 1 << " =";
        for (std::size_t j = 0; j < fit->chambers.size(); ++j)
            if (fit->exponents[k][j] != 0) std::cout << ' ' << to_string(fit->chambers[j]) << '^' << fit->exponents[k][j];
        std::cout << '\n';
    }
    return 0;
}
