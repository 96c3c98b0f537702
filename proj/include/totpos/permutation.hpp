#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "totpos/error.hpp"

namespace totpos {

/// Permutation of [1,n] in one-line notation: w(k) = images[k-1].
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<int> sorted = images_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != static_cast<int>(k) + 1) throw InvalidArgument("not a permutation of [1,n]");
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// The order-reversing permutation w_o(k) = n + 1 - k.
    static Permutation longest(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = n - k;
        return Permutation(std::move(v));
    }

    /// s_{j_1} s_{j_2} ... s_{j_l} as a composition of maps (rightmost applied first).
    static Permutation from_word(const std::vector<int>& word, int n) {
        Permutation w = identity(n);
        for (int j : word) w = w.times_simple(j);
        return w;
    }

    [[nodiscard]] int n() const noexcept { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
    [[nodiscard]] const std::vector<int>& images() const noexcept { return images_; }

    /// Number of inversions.
    [[nodiscard]] int length() const {
        int inv = 0;
        for (std::size_t a = 0; a < images_.size(); ++a)
            for (std::size_t b = a + 1; b < images_.size(); ++b)
                if (images_[a] > images_[b]) ++inv;
        return inv;
    }

    /// w * s_j, i.e. swap the values in positions j and j+1.
    [[nodiscard]] Permutation times_simple(int j) const {
        if (j < 1 || j >= n()) throw InvalidArgument("simple reflection index out of range");
        Permutation r = *this;
        std::swap(r.images_[static_cast<std::size_t>(j - 1)], r.images_[static_cast<std::size_t>(j)]);
        return r;
    }

    [[nodiscard]] bool has_right_descent(int j) const { return (*this)(j) > (*this)(j + 1); }

    /// "[3 1 2]"
    [[nodiscard]] std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < images_.size(); ++k) s += (k ? " " : "") + std::to_string(images_[k]);
        return s + "]";
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// True iff the word multiplies to w and has length l(w).
inline bool is_reduced(const std::vector<int>& word, const Permutation& w) {
    return static_cast<int>(word.size()) == w.length() && Permutation::from_word(word, w.n()) == w;
}

/// True iff the word is a reduced word for the permutation it multiplies to.
inline bool is_reduced(const std::vector<int>& word, int n) {
    return Permutation::from_word(word, n).length() == static_cast<int>(word.size());
}

namespace detail {
inline void reduced_words_into(const Permutation& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
    if (w.length() == 0) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    for (int j = 1; j < w.n(); ++j) {
        if (!w.has_right_descent(j)) continue;
        suffix.push_back(j);
        reduced_words_into(w.times_simple(j), suffix, out);
        suffix.pop_back();
    }
}
}  // namespace detail

/// Every reduced word for w, by backtracking over right descents.
inline std::vector<std::vector<int>> reduced_words(const Permutation& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> suffix;
    detail::reduced_words_into(w, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace totpos
