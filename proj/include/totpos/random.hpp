#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "totpos/matrix.hpp"
#include "totpos/permutation.hpp"
#include "totpos/scalar.hpp"
#include "totpos/words.hpp"

namespace totpos {

using Rng = std::mt19937_64;

/// Uniform p/q with 1 <= p <= max_num, 1 <= q <= max_den.
inline Scalar random_positive(Rng& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    return Scalar(num(rng), den(rng));
}

/// Uniform p/q with |p| <= max_abs, 1 <= q <= max_den.
inline Scalar random_signed(Rng& rng, int max_abs = 6, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs), den(1, max_den);
    return Scalar(num(rng), den(rng));
}

inline std::vector<Scalar> random_positive_vector(Rng& rng, std::size_t len) {
    std::vector<Scalar> t;
    for (std::size_t k = 0; k < len; ++k) t.push_back(random_positive(rng));
    return t;
}

inline Matrix random_matrix(Rng& rng, int n) {
    Matrix x(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) x(i, j) = random_signed(rng);
    return x;
}

/// Totally positive matrix: i_max product at random positive parameters.
inline Matrix random_tp(Rng& rng, int n) {
    const Word w = i_max(n);
    return product_map(w, random_positive_vector(rng, w.size()));
}

/// A uniformly chosen reduced word for w, built by random right descents.
inline std::vector<int> random_reduced_word(Rng& rng, const Permutation& w) {
    std::vector<int> suffix;
    Permutation cur = w;
    while (cur.length() > 0) {
        std::vector<int> descents;
        for (int j = 1; j < cur.n(); ++j)
            if (cur.has_right_descent(j)) descents.push_back(j);
        const int j = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
        suffix.push_back(j);
        cur = cur.times_simple(j);
    }
    return {suffix.rbegin(), suffix.rend()};
}

inline Permutation random_permutation(Rng& rng, int n) {
    auto w = Permutation::identity(n).images();
    std::shuffle(w.begin(), w.end(), rng);
    return Permutation(w);
}

/// Random shuffle of a barred reduced word for u, an unbarred one for v, and the circled letters.
inline Word random_scheme(Rng& rng, const Permutation& u, const Permutation& v) {
    const int n = u.n();
    std::vector<Letter> bar, unbar, circ;
    for (int j : random_reduced_word(rng, u)) bar.push_back(Letter::down(j));
    for (int j : random_reduced_word(rng, v)) unbar.push_back(Letter::up(j));
    for (int i = 1; i <= n; ++i) circ.push_back(Letter::diag(i));
    std::shuffle(circ.begin(), circ.end(), rng);
    std::vector<int> tags;
    tags.insert(tags.end(), bar.size(), 0);
    tags.insert(tags.end(), unbar.size(), 1);
    tags.insert(tags.end(), circ.size(), 2);
    std::shuffle(tags.begin(), tags.end(), rng);
    std::vector<Letter> ls;
    std::size_t k[3] = {0, 0, 0};
    for (int t : tags) {
        const auto& src = t == 0 ? bar : t == 1 ? unbar : circ;
        ls.push_back(src[k[t]++]);
    }
    return Word(n, std::move(ls));
}

inline Word random_full_scheme(Rng& rng, int n) {
    return random_scheme(rng, Permutation::longest(n), Permutation::longest(n));
}

/// Invertible totally nonnegative matrix: positive product over a random scheme of random type.
inline Matrix random_invertible_tnn(Rng& rng, int n) {
    const Word w = random_scheme(rng, random_permutation(rng, n), random_permutation(rng, n));
    return product_map(w, random_positive_vector(rng, w.size()));
}

}  // namespace totpos
