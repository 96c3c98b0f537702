// Prints Somos-5 terms as Laurent polynomials and their values at the unit seed.

#include <iostream>

#include "totpos/totpos.hpp"

int main() {
    using namespace totpos;
    const auto symbolic = somos5_symbolic(10);
    const auto numeric = somos5_numeric({1, 1, 1, 1, 1}, 10);
    for (const auto& t : symbolic)
        std::cout << "a" << t.index << " = " << numeric[t.index - 1] << "   " << t.value.term_count() << " terms"
                  << (t.nonnegative ? "" : "  negative coefficient") << '\n';
    std::cout << "\na8 = " << symbolic[7].value << '\n';
    return 0;
}
