#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/laurent.hpp"
#include "totpos/scalar.hpp"

namespace totpos {

/// a_{k+5} = (a_{k+1} a_{k+4} + a_{k+2} a_{k+3}) / a_k over exact rationals; returns `count` terms.
inline std::vector<Scalar> somos5_numeric(const std::array<Scalar, 5>& init, std::size_t count) {
    std::vector<Scalar> a;
    for (std::size_t k = 0; k < init.size() && k < count; ++k) {
        if (init[k].is_zero()) throw InvalidArgument("Somos-5 seed term a" + std::to_string(k + 1) + " is zero");
        a.push_back(init[k]);
    }
    while (a.size() < count) {
        const std::size_t k = a.size() - 5;
        if (a[k].is_zero()) throw DivisionByZero("Somos-5 division by a" + std::to_string(k + 1) + " = 0");
        a.push_back((a[k + 1] * a[k + 4] + a[k + 2] * a[k + 3]) / a[k]);
    }
    return a;
}

struct SomosTerm {
    std::size_t index = 0;  ///< 1-based
    LaurentPoly value;
    bool nonnegative = true;  ///< all coefficients are nonnegative integers
};

/// The recurrence failed to divide exactly in the Laurent ring.
class LaurentnessFailure : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t somos_symbolic_guard = 12;

/// Terms a_1..a_count as Laurent polynomials in a1..a5, each division checked exact.
inline std::vector<SomosTerm> somos5_symbolic(std::size_t count, std::size_t guard = somos_symbolic_guard) {
    if (count > guard) throw GuardExceeded(static_cast<int>(count), static_cast<int>(guard));
    const std::vector<std::string> vars{"a1", "a2", "a3", "a4", "a5"};
    std::vector<SomosTerm> out;
    for (std::size_t k = 0; k < 5 && k < count; ++k) out.push_back({k + 1, LaurentPoly::variable(vars, k), true});
    while (out.size() < count) {
        const std::size_t k = out.size() - 5;
        const LaurentPoly num = out[k + 1].value * out[k + 4].value + out[k + 2].value * out[k + 3].value;
        auto q = laurent_divide_exact(num, out[k].value);
        if (!q)
            throw LaurentnessFailure("Somos-5 term a" + std::to_string(out.size() + 1) + " is not a Laurent polynomial: (" +
                                     num.str() + ") / (" + out[k].value.str() + ")");
        const bool nonneg = q->has_nonnegative_integer_coeffs();
        out.push_back({out.size() + 1, std::move(*q), nonneg});
    }
    return out;
}

}  // namespace totpos
