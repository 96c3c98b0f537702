#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/gamma0.hpp"
#include "totpos/matrix.hpp"
#include "totpos/permutation.hpp"
#include "totpos/positivity.hpp"
#include "totpos/random.hpp"
#include "totpos/wiring.hpp"
#include "totpos/words.hpp"

namespace totpos {

/// Rebuilds the unique matrix with the given initial minors, entry by entry in order of i + j.
/// Each initial minor is Delta' * x_ij + P, where Delta' is the initial minor one step up-left
/// and P is the same determinant with x_ij replaced by zero.
inline Matrix reconstruct_from_initial_minors(const std::map<MinorSpec, Scalar>& values, int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    auto value = [&](const MinorSpec& s) {
        auto it = values.find(s);
        if (it == values.end()) throw InvalidArgument("missing initial minor " + to_string(s));
        return it->second;
    };
    Matrix x(static_cast<std::size_t>(n), Scalar(0));
    for (int sum = 2; sum <= 2 * n; ++sum)
        for (int i = std::max(1, sum - n); i <= std::min(n, sum - 1); ++i) {
            const int j = sum - i;
            const MinorSpec spec = initial_minor_at(i, j);
            const Scalar delta = value(spec);
            if (spec.order() == 1) {
                x(i, j) = delta;
                continue;
            }
            const MinorSpec inner = initial_minor_at(i - 1, j - 1);
            const Scalar lead = value(inner);
            if (lead.is_zero()) throw InvalidArgument("initial minor " + to_string(inner) + " vanishes; reconstruction is not unique");
            x(i, j) = Scalar(0);
            const Scalar rest = minor(x, spec);
            x(i, j) = (delta - rest) / lead;
        }
    return x;
}

inline std::map<MinorSpec, Scalar> initial_minor_values(const Matrix& x) {
    std::map<MinorSpec, Scalar> out;
    for (const auto& s : initial_minor_specs(static_cast<int>(x.size()))) out.emplace(s, minor(x, s));
    return out;
}

/// Parameters t with product_map(i_max(n), t) = x, for totally positive x.
inline std::vector<Scalar> factor_imax(const Matrix& x) {
    const int n = static_cast<int>(x.size());
    const auto report = initial_minors_report(x);
    if (!report.verdict)
        throw PositivityViolation("matrix is not totally positive: initial minor " + to_string(report.witnesses.front().minor) +
                                  " = " + report.witnesses.front().value.str());
    const auto& tab = imax_monomial_table(n);
    std::vector<Scalar> minors;
    for (const auto& s : tab.minors) minors.push_back(minor(x, s));
    std::vector<Scalar> t;
    for (std::size_t k = 0; k < tab.inverse.size(); ++k) {
        Scalar v(1);
        for (std::size_t m = 0; m < minors.size(); ++m)
            if (tab.inverse[k][m] != 0) v *= minors[m].pow(tab.inverse[k][m]);
        t.push_back(v);
    }
    return t;
}

/// Sum of the i_max parameters as a Laurent expression in leading principal and near-principal minors.
inline Scalar imax_parameter_sum(const Matrix& x) {
    const int n = static_cast<int>(x.size());
    auto lead = [&](int i) { return minor(x, MinorSpec{interval(1, i), interval(1, i)}); };
    Scalar s;
    for (int i = 1; i <= n; ++i) s += lead(i) / lead(i - 1);
    for (int i = 1; i < n; ++i) {
        auto shifted = interval(1, i - 1);
        shifted.push_back(i + 1);
        s += (minor(x, MinorSpec{shifted, interval(1, i)}) + minor(x, MinorSpec{interval(1, i), shifted})) / lead(i);
    }
    return s;
}

namespace detail {

// Reduced words of w_o joined by commutations and braid moves, as a breadth-first tree rooted at the staircase.
struct StaircaseTree {
    std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
};

inline const StaircaseTree& staircase_tree(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const StaircaseTree>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (slot) return *slot;
    auto tree = std::make_shared<StaircaseTree>();
    const auto root = staircase_word(n);
    tree->parent.emplace(root, std::make_pair(root, Move{}));
    std::deque<std::vector<int>> queue{root};
    while (!queue.empty()) {
        const auto w = queue.front();
        queue.pop_front();
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            auto v = w;
            Move m;
            if (std::abs(w[p] - w[p + 1]) >= 2) {
                std::swap(v[p], v[p + 1]);
                m = {MoveKind::Commute, p};
            } else if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
                v[p] = v[p + 2] = w[p + 1];
                v[p + 1] = w[p];
                m = {MoveKind::Braid, p};
            } else {
                continue;
            }
            if (tree->parent.emplace(v, std::make_pair(w, m)).second) queue.push_back(std::move(v));
        }
    }
    slot = tree;
    return *slot;
}

// Records moves rewriting a full-type scheme into i_max.
class PathBuilder {
public:
    explicit PathBuilder(Word w) : word_(std::move(w)) {}

    [[nodiscard]] const Word& word() const noexcept { return word_; }
    [[nodiscard]] const std::vector<Move>& moves() const noexcept { return moves_; }

    void apply(const Move& m) {
        word_ = apply_move(word_, m);
        moves_.push_back(m);
    }

    void move_letter(std::size_t from, std::size_t to) {
        while (from < to) apply({MoveKind::Commute, from++});
        while (from > to) apply({MoveKind::Commute, --from});
    }

    std::size_t find(const Letter& l) const {
        return static_cast<std::size_t>(std::find(word_.letters.begin(), word_.letters.end(), l) - word_.letters.begin());
    }

    void circled_to_front() {
        for (int i = 1; i <= word_.n; ++i) move_letter(find(Letter::diag(i)), static_cast<std::size_t>(i - 1));
    }

    // With the circled block at the front, swap an unbarred i at p with the barred i at p + 1.
    void mixed_swap(std::size_t p) {
        const int n = word_.n;
        const int i = word_[p].index;
        const auto c = static_cast<std::size_t>(n);
        // Circled letters sit between the pair: ... i @1 .. @n i~ ...
        for (int k = n; k >= 1; --k) move_letter(static_cast<std::size_t>(k - 1), p - c + static_cast<std::size_t>(k));
        std::size_t left = p - c;  // position of i
        for (int k = i - 1; k >= 1; --k) {
            move_letter(left + static_cast<std::size_t>(k), left);
            ++left;
        }
        std::size_t right = left + 1 + 2 + static_cast<std::size_t>(n - i - 1);  // position of i~
        for (int k = i + 2; k <= n; ++k) {
            const std::size_t pos = left + 3;
            move_letter(pos, right);
            --right;
        }
        apply({MoveKind::Mixed, left});
        circled_to_front();
    }

private:
    Word word_;
    std::vector<Move> moves_;
};

inline std::vector<Move> path_to_imax(const Word& scheme) {
    const int n = scheme.n;
    PathBuilder b(scheme);
    b.circled_to_front();
    const auto c = static_cast<std::size_t>(n);
    // Barred letters before unbarred ones.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = c; p + 1 < b.word().size(); ++p) {
            const Letter& x = b.word()[p];
            const Letter& y = b.word()[p + 1];
            if (x.kind != LetterKind::Unbarred || y.kind != LetterKind::Barred) continue;
            if (x.index != y.index) b.apply({MoveKind::Commute, p});
            else b.mixed_swap(p);
            changed = true;
            break;
        }
    }
    // Circled block between the two halves.
    const std::size_t barred = b.word().subword(LetterKind::Barred).size();
    for (int k = n; k >= 1; --k) b.move_letter(static_cast<std::size_t>(k - 1), barred + static_cast<std::size_t>(k - 1));
    // Each half to the staircase word.
    const auto& tree = staircase_tree(n);
    auto straighten = [&](std::size_t offset) {
        for (;;) {
            std::vector<int> half;
            for (std::size_t k = 0; k < barred; ++k) half.push_back(b.word()[offset + k].index);
            const auto it = tree.parent.find(half);
            if (it == tree.parent.end()) throw InvalidScheme("subword is not a reduced word for the longest permutation");
            if (it->second.first == half) return;
            Move m = it->second.second;
            m.position += offset;
            b.apply(m);
        }
    };
    straighten(0);
    straighten(barred + c);
    if (!(b.word() == i_max(n))) throw Error("failed to rewrite the scheme into i_max");
    return b.moves();
}

}  // namespace detail

/// Moves that rewrite the scheme into i_max. Each move is undone by the same move at the same position.
inline std::vector<Move> path_to_imax(const Word& scheme) {
    const auto type = validate_scheme(scheme);
    const auto w0 = Permutation::longest(scheme.n);
    if (!(type.u == w0 && type.v == w0)) throw InvalidScheme("scheme is not of type (w_o, w_o)");
    return detail::path_to_imax(scheme);
}

/// Positive parameters t with product_map(scheme, t) = x, for totally positive x.
inline std::vector<Scalar> factor_scheme(const Matrix& x, const Word& scheme) {
    if (static_cast<int>(x.size()) != scheme.n) throw InvalidArgument("matrix and scheme sizes differ");
    const auto path = path_to_imax(scheme);
    Word w = i_max(scheme.n);
    std::vector<Scalar> t = factor_imax(x);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto r = transport(w, t, *it);
        w = std::move(r.word);
        t = std::move(r.params);
    }
    return t;
}

/// x' = [x^T w_o]_+ w_o (x^T)^{-1} w_o [w_o x^T]_-
inline Matrix twist(const Matrix& x) {
    const std::size_t n = x.size();
    const Matrix w0 = antidiagonal(n);
    const Matrix xt = x.transpose();
    auto ldu = [](const Matrix& y, const char* name) {
        auto r = ldu_decompose(y);
        if (auto* f = std::get_if<LduFailure>(&r))
            throw PositivityViolation(std::string("no LDU decomposition of ") + name + ": leading principal minor of order " +
                                      std::to_string(f->k) + " vanishes");
        return std::get<Ldu>(std::move(r));
    };
    const Ldu right = ldu(xt * w0, "x^T w_o");
    const Ldu left = ldu(w0 * xt, "w_o x^T");
    return right.upper * w0 * inverse(xt) * w0 * left.lower;
}

namespace detail {

// Pairwise coprime integers > 1 over which every input factors.
inline std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& inputs) {
    std::vector<mpz_class> base;
    std::vector<mpz_class> work;
    for (const auto& z : inputs) work.push_back(abs(z));
    while (!work.empty()) {
        mpz_class z = work.back();
        work.pop_back();
        if (z <= 1) continue;
        bool merged = false;
        for (std::size_t k = 0; k < base.size(); ++k) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), z.get_mpz_t(), base[k].get_mpz_t());
            if (g == 1) continue;
            const mpz_class b = base[k];
            base.erase(base.begin() + static_cast<long>(k));
            work.push_back(g);
            work.push_back(b / g);
            work.push_back(z / g);
            merged = true;
            break;
        }
        if (!merged) base.push_back(z);
    }
    return base;
}

inline long valuation(const Scalar& v, const mpz_class& b) {
    long e = 0;
    mpz_class num = abs(v.numerator()), den = v.denominator();
    while (num % b == 0) {
        num /= b;
        ++e;
    }
    while (den % b == 0) {
        den /= b;
        --e;
    }
    return e;
}

// One exact solution of A a = rhs (free variables zero), or nullopt if inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> rhs, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        const Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || a[q][c].is_zero()) continue;
            const Scalar f = a[q][c];
            for (std::size_t j = c; j < cols; ++j) a[q][j] -= f * a[r][j];
            rhs[q] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < rows; ++q)
        if (!rhs[q].is_zero()) return std::nullopt;
    std::vector<Scalar> sol(cols);
    for (std::size_t k = 0; k < r; ++k) sol[pivot_col[k]] = rhs[k];
    return sol;
}

struct TwistSample {
    std::vector<Scalar> params;
    std::vector<Scalar> chambers;
};

inline TwistSample twist_sample(const Matrix& x, const Word& scheme, const std::vector<MinorSpec>& chamber_specs) {
    TwistSample s;
    s.params = factor_scheme(x, scheme);
    const Matrix xp = twist(x);
    for (const auto& c : chamber_specs) s.chambers.push_back(minor(xp, c));
    return s;
}

}  // namespace detail

/// Fitted integer exponents: params[k] = prod_j chamber_j(twist(x))^exponents[k][j].
struct TwistMonomials {
    std::vector<MinorSpec> chambers;
    std::vector<std::vector<long>> exponents;
};

/// Fits each factorization parameter of the scheme as a Laurent monomial in the chamber minors
/// of the twisted matrix, then checks the fit on fresh samples. Returns nullopt on failure.
inline std::optional<TwistMonomials> fit_twist_monomials(const Matrix& x, const Word& scheme, const DoubleWiringDiagram& d,
                                                         std::uint64_t seed = 1, std::size_t fresh = 5) {
    const int n = scheme.n;
    if (static_cast<int>(x.size()) != n || d.n() != n) throw InvalidArgument("matrix, scheme and diagram sizes differ");
    TwistMonomials fit;
    fit.chambers = chamber_minors(d);
    const std::size_t m = fit.chambers.size();
    const std::size_t len = scheme.size();
    Rng rng(seed);

    std::vector<detail::TwistSample> samples{detail::twist_sample(x, scheme, fit.chambers)};
    while (samples.size() < m + 1) samples.push_back(detail::twist_sample(random_tp(rng, n), scheme, fit.chambers));

    std::vector<std::vector<Scalar>> rows;
    std::vector<std::vector<Scalar>> rhs(len);
    for (const auto& s : samples) {
        std::vector<mpz_class> ints;
        for (const auto* vec : {&s.params, &s.chambers})
            for (const auto& v : *vec) {
                ints.push_back(v.numerator());
                ints.push_back(v.denominator());
            }
        for (const auto& b : detail::coprime_base(ints)) {
            std::vector<Scalar> row;
            for (const auto& c : s.chambers) row.emplace_back(detail::valuation(c, b));
            rows.push_back(std::move(row));
            for (std::size_t k = 0; k < len; ++k) rhs[k].emplace_back(detail::valuation(s.params[k], b));
        }
    }
    for (std::size_t k = 0; k < len; ++k) {
        const auto sol = detail::solve_linear(rows, rhs[k], m);
        if (!sol) return std::nullopt;
        std::vector<long> e;
        for (const auto& v : *sol) {
            if (!v.is_integer()) return std::nullopt;
            e.push_back(v.numerator().get_si());
        }
        fit.exponents.push_back(std::move(e));
    }
    for (std::size_t f = 0; f < fresh; ++f) {
        const auto s = detail::twist_sample(random_tp(rng, n), scheme, fit.chambers);
        for (std::size_t k = 0; k < len; ++k) {
            Scalar v(1);
            for (std::size_t j = 0; j < m; ++j)
                if (fit.exponents[k][j] != 0) v *= s.chambers[j].pow(fit.exponents[k][j]);
            if (v != s.params[k]) return std::nullopt;
        }
    }
    return fit;
}

inline bool verify_twist_monomial(const Matrix& x, const Word& scheme, const DoubleWiringDiagram& d) {
    try {
        return fit_twist_monomials(x, scheme, d).has_value();
    } catch (const Error&) {
        return false;
    }
}

}  // namespace totpos
