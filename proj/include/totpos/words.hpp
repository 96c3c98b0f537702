#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/matrix.hpp"
#include "totpos/permutation.hpp"
#include "totpos/scalar.hpp"

namespace totpos {

enum class LetterKind { Unbarred, Barred, Circled };

/// One symbol of the alphabet {1..n-1, barred 1..n-1, circled 1..n}.
struct Letter {
    LetterKind kind = LetterKind::Unbarred;
    int index = 1;

    static constexpr Letter up(int i) { return {LetterKind::Unbarred, i}; }
    static constexpr Letter down(int i) { return {LetterKind::Barred, i}; }
    static constexpr Letter diag(int i) { return {LetterKind::Circled, i}; }

    [[nodiscard]] bool circled() const noexcept { return kind == LetterKind::Circled; }

    [[nodiscard]] bool valid_for(int n) const noexcept {
        return kind == LetterKind::Circled ? (index >= 1 && index <= n) : (index >= 1 && index <= n - 1);
    }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// ASCII encoding: "i", "i~" (barred), "@i" (circled).
inline std::string to_string(const Letter& l) {
    switch (l.kind) {
        case LetterKind::Unbarred: return std::to_string(l.index);
        case LetterKind::Barred: return std::to_string(l.index) + "~";
        case LetterKind::Circled: return "@" + std::to_string(l.index);
    }
    return {};
}

inline Letter parse_letter(std::string_view tok) {
    std::string t(tok);
    Letter l;
    if (!t.empty() && t.front() == '@') {
        l.kind = LetterKind::Circled;
        t.erase(0, 1);
    } else if (!t.empty() && t.back() == '~') {
        l.kind = LetterKind::Barred;
        t.pop_back();
    }
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6)
        throw ParseError("malformed letter '" + std::string(tok) + "'");
    l.index = std::stoi(t);
    return l;
}

/// A word over the alphabet for ambient size n.
struct Word {
    int n = 1;
    std::vector<Letter> letters;

    Word() = default;
    Word(int size, std::vector<Letter> ls) : n(size), letters(std::move(ls)) {
        if (n < 1) throw InvalidArgument("ambient size must be positive");
        for (const auto& l : letters)
            if (!l.valid_for(n)) throw InvalidArgument("letter " + to_string(l) + " is invalid for n=" + std::to_string(n));
    }

    static Word parse(std::string_view text, int size) {
        std::istringstream in{std::string(text)};
        std::vector<Letter> ls;
        std::string tok;
        while (in >> tok) ls.push_back(parse_letter(tok));
        return Word(size, std::move(ls));
    }

    [[nodiscard]] std::size_t size() const noexcept { return letters.size(); }
    const Letter& operator[](std::size_t k) const { return letters[k]; }

    [[nodiscard]] std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < letters.size(); ++k) s += (k ? " " : "") + to_string(letters[k]);
        return s;
    }

    /// Indices of the letters of one kind, in order.
    [[nodiscard]] std::vector<int> subword(LetterKind kind) const {
        std::vector<int> out;
        for (const auto& l : letters)
            if (l.kind == kind) out.push_back(l.index);
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
};

/// Elementary Jacobi matrix x_i(t), x_{i~}(t) or x_{@i}(t) over any exact ring.
template <class T>
BasicMatrix<T> elementary_matrix(const Letter& letter, const T& t, int n) {
    if (!letter.valid_for(n)) throw InvalidArgument("letter " + to_string(letter) + " is invalid for n=" + std::to_string(n));
    auto m = BasicMatrix<T>::identity(static_cast<std::size_t>(n));
    const auto i = static_cast<std::size_t>(letter.index);
    switch (letter.kind) {
        case LetterKind::Unbarred: m(i, i + 1) = t; break;
        case LetterKind::Barred: m(i + 1, i) = t; break;
        case LetterKind::Circled:
            if (t.is_zero()) throw InvalidArgument("circled factor with zero parameter is undefined");
            m(i, i) = t;
            break;
    }
    return m;
}

/// Ordered product x_{i_1}(t_1) ... x_{i_l}(t_l).
template <class T>
BasicMatrix<T> product_map(const Word& word, std::span<const T> params) {
    if (params.size() != word.size()) throw InvalidArgument("parameter count does not match word length");
    auto x = BasicMatrix<T>::identity(static_cast<std::size_t>(word.n));
    for (std::size_t k = 0; k < word.size(); ++k) x = x * elementary_matrix(word[k], params[k], word.n);
    return x;
}

inline Matrix product_map(const Word& word, const std::vector<Scalar>& params) {
    return product_map<Scalar>(word, std::span<const Scalar>(params));
}

/// The reduced word (n-1 | n-2, n-1 | ... | 1, 2, ..., n-1) for w_o.
inline std::vector<int> staircase_word(int n) {
    std::vector<int> w;
    for (int k = n - 1; k >= 1; --k)
        for (int j = k; j <= n - 1; ++j) w.push_back(j);
    return w;
}

/// The scheme whose chip network is Gamma_0: barred staircase, circled 1..n, unbarred staircase.
inline Word i_max(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<Letter> ls;
    for (int j : staircase_word(n)) ls.push_back(Letter::down(j));
    for (int i = 1; i <= n; ++i) ls.push_back(Letter::diag(i));
    for (int j : staircase_word(n)) ls.push_back(Letter::up(j));
    return Word(n, std::move(ls));
}

/// Type (u, v) of a factorization scheme: u from the barred subword, v from the unbarred one.
struct SchemeType {
    Permutation u;
    Permutation v;
    friend bool operator==(const SchemeType&, const SchemeType&) = default;
};

/// Checks the factorization-scheme conditions and returns the type, or throws InvalidScheme.
inline SchemeType validate_scheme(const Word& word) {
    std::vector<int> circled_count(static_cast<std::size_t>(word.n) + 1, 0);
    for (const auto& l : word.letters)
        if (l.circled()) ++circled_count[static_cast<std::size_t>(l.index)];
    for (int i = 1; i <= word.n; ++i) {
        const int c = circled_count[static_cast<std::size_t>(i)];
        if (c != 1)
            throw InvalidScheme("circled letter @" + std::to_string(i) + (c == 0 ? " is missing" : " appears more than once"));
    }
    const auto barred = word.subword(LetterKind::Barred);
    const auto unbarred = word.subword(LetterKind::Unbarred);
    if (!is_reduced(barred, word.n)) throw InvalidScheme("barred subword is not reduced");
    if (!is_reduced(unbarred, word.n)) throw InvalidScheme("unbarred subword is not reduced");
    return {Permutation::from_word(barred, word.n), Permutation::from_word(unbarred, word.n)};
}

inline bool is_factorization_scheme(const Word& word) {
    try {
        validate_scheme(word);
        return true;
    } catch (const InvalidScheme&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Parameter transport across local moves.

enum class MoveKind {
    Commute,  ///< swap two adjacent letters that commute, possibly rescaling one parameter
    Braid,    ///< i j i <-> j i j within one color, |i - j| = 1
    Mixed,    ///< i @i @i+1 i~ <-> i~ @i @i+1 i
};

/// A local move at a 0-based word position (first letter of the affected block).
struct Move {
    MoveKind kind = MoveKind::Commute;
    std::size_t position = 0;
    friend bool operator==(const Move&, const Move&) = default;
};

namespace detail {

inline bool same_color(const Letter& a, const Letter& b) { return !a.circled() && a.kind == b.kind; }

inline bool commutable(const Letter& a, const Letter& b) {
    if (a == b) return false;
    if (a.circled() || b.circled()) return true;
    if (a.kind == b.kind) return std::abs(a.index - b.index) >= 2;
    return a.index != b.index;
}

inline bool braid_site(const Word& w, std::size_t p) {
    if (p + 2 >= w.size()) return false;
    const Letter &a = w[p], &b = w[p + 1], &c = w[p + 2];
    return same_color(a, b) && same_color(a, c) && a.index == c.index && std::abs(a.index - b.index) == 1;
}

inline bool mixed_site(const Word& w, std::size_t p) {
    if (p + 3 >= w.size()) return false;
    const Letter &a = w[p], &b = w[p + 1], &c = w[p + 2], &d = w[p + 3];
    if (a.circled() || d.circled() || a.kind == d.kind || a.index != d.index) return false;
    if (!b.circled() || !c.circled()) return false;
    const int i = a.index;
    return (b.index == i && c.index == i + 1) || (b.index == i + 1 && c.index == i);
}

// Ratio D_i / D_{i+1} contributed by a single circled factor @k with parameter t.
inline Scalar diag_ratio(int k, const Scalar& t, int i) {
    if (k == i) return t;
    if (k == i + 1) return t.inverse();
    return Scalar(1);
}

}  // namespace detail

inline bool move_applicable(const Word& w, const Move& m) {
    switch (m.kind) {
        case MoveKind::Commute:
            return m.position + 1 < w.size() && detail::commutable(w[m.position], w[m.position + 1]);
        case MoveKind::Braid: return detail::braid_site(w, m.position);
        case MoveKind::Mixed: return detail::mixed_site(w, m.position);
    }
    return false;
}

/// Every move applicable to the word as it stands.
inline std::vector<Move> applicable_moves(const Word& w) {
    std::vector<Move> out;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (MoveKind k : {MoveKind::Commute, MoveKind::Braid, MoveKind::Mixed})
            if (move_applicable(w, {k, p})) out.push_back({k, p});
    return out;
}

/// Applies the move to the word alone (no parameters).
inline Word apply_move(const Word& w, const Move& m) {
    if (!move_applicable(w, m)) throw InvalidArgument("move not applicable at position " + std::to_string(m.position));
    Word r = w;
    auto& ls = r.letters;
    const std::size_t p = m.position;
    switch (m.kind) {
        case MoveKind::Commute: std::swap(ls[p], ls[p + 1]); break;
        case MoveKind::Braid: {
            const int i = ls[p].index, j = ls[p + 1].index;
            ls[p].index = j;
            ls[p + 1].index = i;
            ls[p + 2].index = j;
            break;
        }
        case MoveKind::Mixed: std::swap(ls[p].kind, ls[p + 3].kind); break;
    }
    return r;
}

struct Transported {
    Word word;
    std::vector<Scalar> params;
};

/// Rewrites (word, params) by one local move so that the product map is unchanged.
///
/// Braid:  t' = (t2 t3 / T, T, t1 t2 / T) with T = t1 + t3, either color.
/// Mixed:  i @i @j i~ (t1..t4) -> i~ @i @j i with t' = (t3 t4/T, T, t2 t3/T, t1 t3/T), T = t2 + t1 t3 t4,
///         and the inverse i~ @i @j i -> i @i @j i~ with T' = t3 + t1 t2 t4,
///         t' = (t2 t4/T', t2 t3/T', T', t1 t2/T').
/// Commute: a circled factor D passing an off-diagonal factor rescales its parameter by a
///         ratio of diagonal entries; all other commuting swaps keep parameters.
inline Transported transport(const Word& w, std::span<const Scalar> params, const Move& m) {
    if (params.size() != w.size()) throw InvalidArgument("parameter count does not match word length");
    Word nw = apply_move(w, m);
    std::vector<Scalar> t(params.begin(), params.end());
    const std::size_t p = m.position;
    switch (m.kind) {
        case MoveKind::Commute: {
            const Letter a = w[p], b = w[p + 1];
            Scalar ta = t[p], tb = t[p + 1];
            if (a.circled() && !b.circled()) {
                // @k(ta) L(tb) = L(tb') @k(ta)
                const Scalar r = detail::diag_ratio(a.index, ta, b.index);
                tb = b.kind == LetterKind::Unbarred ? tb * r : tb / r;
            } else if (!a.circled() && b.circled()) {
                // L(ta) @k(tb) = @k(tb) L(ta')
                const Scalar r = detail::diag_ratio(b.index, tb, a.index);
                ta = a.kind == LetterKind::Unbarred ? ta / r : ta * r;
            }
            t[p] = tb;
            t[p + 1] = ta;
            break;
        }
        case MoveKind::Braid: {
            const Scalar t1 = t[p], t2 = t[p + 1], t3 = t[p + 2];
            const Scalar big = t1 + t3;
            t[p] = t2 * t3 / big;
            t[p + 1] = big;
            t[p + 2] = t1 * t2 / big;
            break;
        }
        case MoveKind::Mixed: {
            const bool low_circled_first = w[p + 1].index == w[p].index;
            const std::size_t lo = low_circled_first ? p + 1 : p + 2;
            const std::size_t hi = low_circled_first ? p + 2 : p + 1;
            const Scalar t1 = t[p], t2 = t[lo], t3 = t[hi], t4 = t[p + 3];
            if (w[p].kind == LetterKind::Unbarred) {
                const Scalar big = t2 + t1 * t3 * t4;
                t[p] = t3 * t4 / big;
                t[lo] = big;
                t[hi] = t2 * t3 / big;
                t[p + 3] = t1 * t3 / big;
            } else {
                const Scalar big = t3 + t1 * t2 * t4;
                t[p] = t2 * t4 / big;
                t[lo] = t2 * t3 / big;
                t[hi] = big;
                t[p + 3] = t1 * t2 / big;
            }
            break;
        }
    }
    return {std::move(nw), std::move(t)};
}

inline Transported transport(const Word& w, const std::vector<Scalar>& params, const Move& m) {
    return transport(w, std::span<const Scalar>(params), m);
}

}  // namespace totpos
