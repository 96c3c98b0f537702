#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/scalar.hpp"

namespace totpos {

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// A polynomial with an empty variable list is a constant and combines with a
/// polynomial over any variable list.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, Scalar, GradedLex>;

    LaurentPoly() = default;

    template <std::integral I>
    LaurentPoly(I c) : LaurentPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

    LaurentPoly(const Scalar& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Exponent{}, c);
    }

    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, const Scalar& c) {
        LaurentPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
        return p;
    }

    static LaurentPoly variable(std::vector<std::string> vars, std::size_t index) {
        if (index >= vars.size()) throw InvalidArgument("variable index out of range");
        Exponent e(vars.size(), 0);
        e[index] = 1;
        return monomial(std::move(vars), std::move(e), Scalar(1));
    }

    static LaurentPoly monomial(std::vector<std::string> vars, Exponent exp, const Scalar& coeff) {
        if (exp.size() != vars.size()) throw InvalidArgument("exponent length does not match variables");
        LaurentPoly p(std::move(vars));
        if (!coeff.is_zero()) p.terms_.emplace(std::move(exp), coeff);
        return p;
    }

    /// Builds from raw terms; zero coefficients are dropped.
    static LaurentPoly from_terms(std::vector<std::string> vars, const std::vector<std::pair<Exponent, Scalar>>& terms) {
        LaurentPoly p(std::move(vars));
        for (const auto& [e, c] : terms) {
            if (e.size() != p.vars_.size()) throw InvalidArgument("exponent length does not match variables");
            p.add_term(e, c);
        }
        return p;
    }

    [[nodiscard]] const std::vector<std::string>& vars() const noexcept { return vars_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }

    [[nodiscard]] bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    /// Leading term under graded-lex order. Precondition: nonzero.
    [[nodiscard]] const std::pair<const Exponent, Scalar>& leading() const {
        if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    [[nodiscard]] bool has_nonnegative_integer_coeffs() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second.sign() >= 0 && t.second.is_integer(); });
    }

    [[nodiscard]] Scalar eval(std::span<const Scalar> point) const {
        if (point.size() != vars_.size() && !is_constant())
            throw InvalidArgument("evaluation point has wrong dimension");
        Scalar acc;
        for (const auto& [e, c] : terms_) {
            Scalar m = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) m *= point[k].pow(e[k]);
            acc += m;
        }
        return acc;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        adopt_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(o.lift(e, vars_.size()), c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        adopt_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(o.lift(e, vars_.size()), -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.vars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.vars_);
        r.adopt_vars(b);
        const std::size_t nv = r.vars_.size();
        for (const auto& [ea, ca] : a.terms_) {
            const Exponent la = a.lift(ea, nv);
            for (const auto& [eb, cb] : b.terms_) {
                const Exponent lb = b.lift(eb, nv);
                Exponent e(nv);
                for (std::size_t k = 0; k < nv; ++k) e[k] = la[k] + lb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        const LaurentPoly d = a - b;
        return d.is_zero();
    }

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[k];
                if (e[k] != 1) mono += "^" + std::to_string(e[k]);
            }
            Scalar mag = c.sign() < 0 ? -c : c;
            std::string coeff = mag.str();
            std::string piece;
            if (mono.empty()) piece = coeff;
            else if (mag == Scalar(1)) piece = mono;
            else piece = coeff + "*" + mono;
            if (first) out += (c.sign() < 0 ? "-" : "") + piece;
            else out += (c.sign() < 0 ? " - " : " + ") + piece;
            first = false;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    friend std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly&, const LaurentPoly&);

    void add_term(const Exponent& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Constants (empty variable list) promote to the other operand's variables.
    void adopt_vars(const LaurentPoly& o) {
        if (vars_ == o.vars_ || o.vars_.empty()) return;
        if (!vars_.empty()) throw InvalidArgument("Laurent polynomials over different variable lists");
        Terms lifted;
        for (const auto& [e, c] : terms_) lifted.emplace(Exponent(o.vars_.size(), 0), c);
        vars_ = o.vars_;
        terms_ = std::move(lifted);
    }

    Exponent lift(const Exponent& e, std::size_t nv) const {
        if (e.size() == nv) return e;
        return Exponent(nv, 0);
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Exact quotient in the Laurent ring, or nullopt when no Laurent quotient exists.
///
/// Both operands are split as (monomial) * (polynomial with no variable factor);
/// the polynomial parts are divided by leading-term elimination under graded-lex
/// order, and any surviving remainder means the quotient is not Laurent.
inline std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    LaurentPoly a = num;
    LaurentPoly b = den;
    a.adopt_vars(b);
    b.adopt_vars(a);
    const std::size_t nv = a.vars_.size();
    if (a.is_zero()) return LaurentPoly(a.vars_);

    auto min_exponent = [nv](const LaurentPoly& p) {
        Exponent m(nv, 0);
        bool first = true;
        for (const auto& [e0, c] : p.terms_) {
            const Exponent e = p.lift(e0, nv);
            for (std::size_t k = 0; k < nv; ++k) m[k] = first ? e[k] : std::min(m[k], e[k]);
            first = false;
        }
        return m;
    };
    auto shifted = [nv](const LaurentPoly& p, const Exponent& by) {
        LaurentPoly r(p.vars_);
        for (const auto& [e0, c] : p.terms_) {
            Exponent e = p.lift(e0, nv);
            for (std::size_t k = 0; k < nv; ++k) e[k] -= by[k];
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    };

    const Exponent ma = min_exponent(a);
    const Exponent mb = min_exponent(b);
    LaurentPoly rem = shifted(a, ma);
    const LaurentPoly divisor = shifted(b, mb);
    const auto& [lead_exp, lead_coeff] = divisor.leading();

    LaurentPoly quotient(a.vars_);
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        Exponent diff(nv);
        for (std::size_t k = 0; k < nv; ++k) {
            diff[k] = re[k] - lead_exp[k];
            if (diff[k] < 0) return std::nullopt;
        }
        const LaurentPoly step = LaurentPoly::monomial(a.vars_, diff, rc / lead_coeff);
        quotient += step;
        rem -= step * divisor;
    }
    Exponent shift(nv);
    for (std::size_t k = 0; k < nv; ++k) shift[k] = mb[k] - ma[k];
    return shifted(quotient, shift);
}

/// True iff every stored coefficient is a nonnegative integer (zero polynomial included).
inline bool laurent_has_nonnegative_coeffs(const LaurentPoly& p) { return p.has_nonnegative_integer_coeffs(); }

}  // namespace totpos
