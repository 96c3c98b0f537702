#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/matrix.hpp"
#include "totpos/scalar.hpp"
#include "totpos/words.hpp"

namespace totpos {

/// Grid position of a vertex: column x and level (1 = bottom).
struct Vertex {
    int x = 0;
    int level = 1;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Scalar weight = Scalar(1);
};

/// Weighted planar acyclic network drawn on a leveled grid, edges pointing rightwards.
/// Sources and sinks are numbered bottom-to-top.
class PlanarNetwork {
public:
    PlanarNetwork() = default;

    /// Validates the network. Empty source/sink lists default to the leftmost
    /// (resp. rightmost) vertex on each level 1..n.
    PlanarNetwork(int n, std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<std::size_t> sources = {},
                  std::vector<std::size_t> sinks = {})
        : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)), sources_(std::move(sources)), sinks_(std::move(sinks)) {
        if (n_ < 1) throw InvalidArgument("network must have at least one source");
        for (const auto& v : vertices_)
            if (v.level < 1 || v.level > n_) throw InvalidArgument("vertex level outside [1,n]");
        for (std::size_t a = 0; a < vertices_.size(); ++a)
            for (std::size_t b = a + 1; b < vertices_.size(); ++b)
                if (vertices_[a] == vertices_[b]) throw InvalidArgument("two vertices share a grid position");
        for (const auto& e : edges_) {
            if (e.from >= vertices_.size() || e.to >= vertices_.size()) throw InvalidArgument("edge endpoint out of range");
            if (vertices_[e.from].x >= vertices_[e.to].x) throw InvalidArgument("edges must point strictly rightwards");
        }
        if (sources_.empty()) sources_ = boundary(true);
        if (sinks_.empty()) sinks_ = boundary(false);
        if (sources_.size() != static_cast<std::size_t>(n_) || sinks_.size() != static_cast<std::size_t>(n_))
            throw InvalidArgument("network needs exactly n sources and n sinks");
        for (auto s : sources_)
            if (s >= vertices_.size()) throw InvalidArgument("source index out of range");
        for (auto s : sinks_)
            if (s >= vertices_.size()) throw InvalidArgument("sink index out of range");
        check_planar();
        order_ = topological_order();
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::size_t>& sources() const noexcept { return sources_; }
    [[nodiscard]] const std::vector<std::size_t>& sinks() const noexcept { return sinks_; }

    /// Vertices sorted by x (a topological order, since edges point rightwards).
    [[nodiscard]] const std::vector<std::size_t>& order() const noexcept { return order_; }

    [[nodiscard]] std::vector<std::vector<std::size_t>> out_edges() const {
        std::vector<std::vector<std::size_t>> out(vertices_.size());
        for (std::size_t k = 0; k < edges_.size(); ++k) out[edges_[k].from].push_back(k);
        return out;
    }

    /// Same graph with every weight replaced.
    [[nodiscard]] PlanarNetwork reweighted(const std::vector<Scalar>& weights) const {
        if (weights.size() != edges_.size()) throw InvalidArgument("weight count does not match edge count");
        PlanarNetwork r = *this;
        for (std::size_t k = 0; k < weights.size(); ++k) r.edges_[k].weight = weights[k];
        return r;
    }

private:
    std::vector<std::size_t> boundary(bool left) const {
        std::vector<std::size_t> out;
        for (int lvl = 1; lvl <= n_; ++lvl) {
            std::size_t best = vertices_.size();
            for (std::size_t k = 0; k < vertices_.size(); ++k) {
                if (vertices_[k].level != lvl) continue;
                if (best == vertices_.size() || (left ? vertices_[k].x < vertices_[best].x : vertices_[k].x > vertices_[best].x))
                    best = k;
            }
            if (best == vertices_.size()) throw InvalidArgument("level " + std::to_string(lvl) + " has no vertex");
            out.push_back(best);
        }
        return out;
    }

    static long orient(const Vertex& a, const Vertex& b, const Vertex& c) {
        const long v = static_cast<long>(b.x - a.x) * (c.level - a.level) - static_cast<long>(b.level - a.level) * (c.x - a.x);
        return (v > 0) - (v < 0);
    }

    static bool on_segment(const Vertex& a, const Vertex& b, const Vertex& p) {
        return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.level, b.level) <= p.level &&
               p.level <= std::max(a.level, b.level);
    }

    // Straight-line edges may meet only at shared endpoints; vertices may not lie inside edges.
    void check_planar() const {
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            const Vertex &a = vertices_[edges_[k].from], &b = vertices_[edges_[k].to];
            for (std::size_t v = 0; v < vertices_.size(); ++v) {
                if (v == edges_[k].from || v == edges_[k].to) continue;
                if (orient(a, b, vertices_[v]) == 0 && on_segment(a, b, vertices_[v]))
                    throw InvalidArgument("vertex lies in the interior of an edge");
            }
            for (std::size_t m = k + 1; m < edges_.size(); ++m) {
                const Vertex &c = vertices_[edges_[m].from], &d = vertices_[edges_[m].to];
                const std::size_t ends[4] = {edges_[k].from, edges_[k].to, edges_[m].from, edges_[m].to};
                if (ends[0] == ends[2] || ends[0] == ends[3] || ends[1] == ends[2] || ends[1] == ends[3]) continue;
                const long o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
                if (o1 != o2 && o3 != o4) throw InvalidArgument("edges cross away from a vertex; network is not planar");
            }
        }
    }

    std::vector<std::size_t> topological_order() const {
        std::vector<std::size_t> ord(vertices_.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return vertices_[a].x < vertices_[b].x; });
        return ord;
    }

    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> sources_;
    std::vector<std::size_t> sinks_;
    std::vector<std::size_t> order_;
};

/// Entry (i,j) is the weighted path count from source i to sink j.
inline Matrix weight_matrix(const PlanarNetwork& net) {
    const auto n = static_cast<std::size_t>(net.n());
    const auto out = net.out_edges();
    Matrix w(n, Scalar(0));
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Scalar> acc(net.vertices().size());
        acc[net.sources()[i - 1]] = Scalar(1);
        for (std::size_t v : net.order()) {
            if (acc[v].is_zero()) continue;
            for (std::size_t e : out[v]) acc[net.edges()[e].to] += acc[v] * net.edges()[e].weight;
        }
        for (std::size_t j = 1; j <= n; ++j) w(i, j) = acc[net.sinks()[j - 1]];
    }
    return w;
}

namespace detail {

struct PathSearch {
    const PlanarNetwork& net;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> from, to;
    bool count_only = false;
    std::map<std::pair<std::size_t, std::vector<bool>>, Scalar> memo;

    PathSearch(const PlanarNetwork& g, const MinorSpec& spec, bool counting) : net(g), out(g.out_edges()), count_only(counting) {
        spec.validate(static_cast<std::size_t>(g.n()));
        for (int r : spec.rows) from.push_back(g.sources()[static_cast<std::size_t>(r - 1)]);
        for (int c : spec.cols) to.push_back(g.sinks()[static_cast<std::size_t>(c - 1)]);
    }

    // Sum over families for pairs k.. avoiding `used`.
    Scalar families(std::size_t k, std::vector<bool>& used) {
        if (k == from.size()) return Scalar(1);
        auto key = std::make_pair(k, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Scalar total;
        if (!used[from[k]]) {
            used[from[k]] = true;
            total = paths(k, from[k], Scalar(1), used);
            used[from[k]] = false;
        }
        memo.emplace(std::move(key), total);
        return total;
    }

    // Extend the k-th path from v; `used` already contains v.
    Scalar paths(std::size_t k, std::size_t v, const Scalar& weight, std::vector<bool>& used) {
        Scalar total;
        if (v == to[k]) total += weight * families(k + 1, used);
        for (std::size_t e : out[v]) {
            const std::size_t w = net.edges()[e].to;
            if (used[w]) continue;
            used[w] = true;
            total += paths(k, w, count_only ? weight : weight * net.edges()[e].weight, used);
            used[w] = false;
        }
        return total;
    }
};

inline void enumerate_paths(const PlanarNetwork& net, const std::vector<std::vector<std::size_t>>& out, std::size_t v,
                            std::size_t target, const Scalar& weight, Scalar& acc) {
    if (v == target) acc += weight;
    for (std::size_t e : out[v]) enumerate_paths(net, out, net.edges()[e].to, target, weight * net.edges()[e].weight, acc);
}

}  // namespace detail

/// Sum over vertex-disjoint families of paths joining sources I to sinks J in order,
/// by exhaustive search memoized on (pair index, used vertices).
inline Scalar disjoint_path_minor(const PlanarNetwork& net, const MinorSpec& spec) {
    detail::PathSearch s(net, spec, false);
    std::vector<bool> used(net.vertices().size(), false);
    return s.families(0, used);
}

/// Number of vertex-disjoint families joining sources I to sinks J.
inline Scalar disjoint_path_count(const PlanarNetwork& net, const MinorSpec& spec) {
    detail::PathSearch s(net, spec, true);
    std::vector<bool> used(net.vertices().size(), false);
    return s.families(0, used);
}

/// Signed sum over all path collections, sum_sigma sgn(sigma) prod_k P(i_k, j_sigma(k)),
/// with every path enumerated explicitly. Equals the minor of the weight matrix.
inline Scalar signed_path_sum(const PlanarNetwork& net, const MinorSpec& spec) {
    spec.validate(static_cast<std::size_t>(net.n()));
    const std::size_t k = spec.order();
    const auto out = net.out_edges();
    std::vector<Scalar> p(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            detail::enumerate_paths(net, out, net.sources()[static_cast<std::size_t>(spec.rows[a] - 1)],
                                    net.sinks()[static_cast<std::size_t>(spec.cols[b] - 1)], Scalar(1), p[a * k + b]);
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    Scalar total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (sigma[a] > sigma[b]) ++inversions;
        Scalar term(inversions % 2 ? -1 : 1);
        for (std::size_t a = 0; a < k && !term.is_zero(); ++a) term *= p[a * k + sigma[a]];
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

/// True iff every pair of equal-size source and sink sets is joined by a vertex-disjoint family.
inline bool is_totally_connected(const PlanarNetwork& net) {
    for (const auto& spec : all_minor_specs(net.n()))
        if (disjoint_path_count(net, spec).is_zero()) return false;
    return true;
}

/// Two-column network realizing the elementary matrix of one letter.
inline PlanarNetwork chip(const Letter& letter, const Scalar& t, int n) {
    if (!letter.valid_for(n)) throw InvalidArgument("letter " + to_string(letter) + " is invalid for n=" + std::to_string(n));
    if (letter.circled() && t.is_zero()) throw InvalidArgument("circled chip with zero weight is undefined");
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int lvl = 1; lvl <= n; ++lvl) {
        vs.push_back({0, lvl});
        vs.push_back({1, lvl});
    }
    auto left = [](int lvl) { return static_cast<std::size_t>(2 * (lvl - 1)); };
    auto right = [](int lvl) { return static_cast<std::size_t>(2 * (lvl - 1) + 1); };
    const int i = letter.index;
    for (int lvl = 1; lvl <= n; ++lvl)
        es.push_back({left(lvl), right(lvl), letter.circled() && lvl == i ? t : Scalar(1)});
    if (letter.kind == LetterKind::Unbarred) es.push_back({left(i), right(i + 1), t});
    if (letter.kind == LetterKind::Barred) es.push_back({left(i + 1), right(i), t});
    return PlanarNetwork(n, std::move(vs), std::move(es));
}

/// Glues the sinks of a to the sources of b; the weight matrix is the product.
inline PlanarNetwork concatenate(const PlanarNetwork& a, const PlanarNetwork& b) {
    if (a.n() != b.n()) throw InvalidArgument("cannot concatenate networks of different sizes");
    const int n = a.n();
    int max_a = a.vertices().front().x, min_b = b.vertices().front().x;
    for (const auto& v : a.vertices()) max_a = std::max(max_a, v.x);
    for (const auto& v : b.vertices()) min_b = std::min(min_b, v.x);
    bool flush = true;
    for (int k = 0; k < n; ++k) {
        const Vertex& s = a.vertices()[a.sinks()[static_cast<std::size_t>(k)]];
        const Vertex& t = b.vertices()[b.sources()[static_cast<std::size_t>(k)]];
        if (s.x != max_a || t.x != min_b || s.level != t.level) flush = false;
    }
    std::vector<Vertex> vs = a.vertices();
    std::vector<Edge> es = a.edges();
    const int shift = flush ? max_a - min_b : max_a + 1 - min_b;
    std::vector<std::size_t> remap(b.vertices().size());
    for (std::size_t v = 0; v < b.vertices().size(); ++v) {
        const auto src = std::find(b.sources().begin(), b.sources().end(), v);
        if (flush && src != b.sources().end()) {
            remap[v] = a.sinks()[static_cast<std::size_t>(src - b.sources().begin())];
            continue;
        }
        remap[v] = vs.size();
        vs.push_back({b.vertices()[v].x + shift, b.vertices()[v].level});
    }
    for (const auto& e : b.edges()) es.push_back({remap[e.from], remap[e.to], e.weight});
    if (!flush)
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) es.push_back({a.sinks()[k], remap[b.sources()[k]], Scalar(1)});
    std::vector<std::size_t> sinks;
    for (auto s : b.sinks()) sinks.push_back(remap[s]);
    return PlanarNetwork(n, std::move(vs), std::move(es), a.sources(), std::move(sinks));
}

/// Network of the word: concatenation of its chips. The edge carrying parameter k
/// is reported in `param_edges[k]`.
struct WordNetwork {
    PlanarNetwork network;
    std::vector<std::size_t> param_edges;
};

inline WordNetwork word_network(const Word& word, const std::vector<Scalar>& params) {
    if (params.size() != word.size()) throw InvalidArgument("parameter count does not match word length");
    const int n = word.n;
    // Build directly on a grid of width |word| so every chip shares the horizontal lines.
    std::vector<Vertex> vs;
    const int width = static_cast<int>(word.size());
    for (int x = 0; x <= width; ++x)
        for (int lvl = 1; lvl <= n; ++lvl) vs.push_back({x, lvl});
    auto at = [n](int x, int lvl) { return static_cast<std::size_t>(x * n + (lvl - 1)); };
    std::vector<Edge> es;
    std::vector<std::size_t> param_edges;
    for (int x = 0; x < width; ++x) {
        const Letter& l = word[static_cast<std::size_t>(x)];
        const Scalar& t = params[static_cast<std::size_t>(x)];
        if (l.circled() && t.is_zero()) throw InvalidArgument("circled chip with zero weight is undefined");
        for (int lvl = 1; lvl <= n; ++lvl) {
            if (l.circled() && lvl == l.index) param_edges.push_back(es.size());
            es.push_back({at(x, lvl), at(x + 1, lvl), l.circled() && lvl == l.index ? t : Scalar(1)});
        }
        if (l.kind == LetterKind::Unbarred) {
            param_edges.push_back(es.size());
            es.push_back({at(x, l.index), at(x + 1, l.index + 1), t});
        } else if (l.kind == LetterKind::Barred) {
            param_edges.push_back(es.size());
            es.push_back({at(x, l.index + 1), at(x + 1, l.index), t});
        }
    }
    return {PlanarNetwork(n, std::move(vs), std::move(es)), std::move(param_edges)};
}

/// Unit-weight network of the barred staircase; its weight matrix is the lower-triangular Pascal matrix.
inline PlanarNetwork pascal_network(int n) {
    std::vector<Letter> ls;
    for (int j : staircase_word(n)) ls.push_back(Letter::down(j));
    const Word w(n, std::move(ls));
    return word_network(w, std::vector<Scalar>(w.size(), Scalar(1))).network;
}

/// Network whose only edges are horizontal unit edges; weight matrix is the identity.
inline PlanarNetwork diagonal_network(int n) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int lvl = 1; lvl <= n; ++lvl) {
        vs.push_back({0, lvl});
        vs.push_back({1, lvl});
        es.push_back({vs.size() - 2, vs.size() - 1, Scalar(1)});
    }
    return PlanarNetwork(n, std::move(vs), std::move(es));
}

}  // namespace totpos
