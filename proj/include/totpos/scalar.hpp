#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "totpos/error.hpp"

namespace totpos {

/// Exact rational number in canonical form (denominator > 0, reduced).
class Scalar {
public:
    Scalar() = default;

    template <std::integral I>
    Scalar(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Scalar(const mpz_class& v) : q_(v) {}

    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Scalar(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Scalar parse(std::string_view text) {
        std::string s(text);
        const auto first = s.find_first_not_of(" \t\r\n");
        const auto last = s.find_last_not_of(" \t\r\n");
        if (first == std::string::npos) throw ParseError("empty scalar");
        s = s.substr(first, last - first + 1);
        const auto slash = s.find('/');
        auto parse_int = [&](const std::string& part) {
            mpz_class z;
            std::string digits = part;
            if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
            const bool ok = !digits.empty() && digits != "-" &&
                            digits.find_first_not_of("-0123456789") == std::string::npos &&
                            digits.find('-', 1) == std::string::npos;
            if (!ok || z.set_str(digits, 10) != 0) throw ParseError("malformed scalar '" + s + "'");
            return z;
        };
        if (slash == std::string::npos) return Scalar(parse_int(s));
        const mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero();
        return Scalar(parse_int(s.substr(0, slash)), den);
    }

    [[nodiscard]] const mpq_class& value() const noexcept { return q_; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    [[nodiscard]] int sign() const noexcept { return sgn(q_); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    [[nodiscard]] Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Scalar(mpq_class(1) / q_);
    }

    [[nodiscard]] Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Scalar(num, den);
    }

    [[nodiscard]] std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.q_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class q_;
};

}  // namespace totpos
