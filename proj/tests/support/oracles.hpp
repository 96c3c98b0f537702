#pragma once

// Independent reference implementations used only by the test suites.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "totpos/totpos.hpp"

namespace oracle {

using totpos::Matrix;
using totpos::MinorSpec;
using totpos::Scalar;

/// Determinant of the submatrix on rows I, columns J by the permutation expansion.
inline Scalar leibniz(const Matrix& x, const std::vector<int>& rows, const std::vector<int>& cols) {
    const std::size_t k = rows.size();
    if (k == 0) return Scalar(1);
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    Scalar sum(0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (p[a] > p[b]) ++inversions;
        Scalar term(inversions % 2 ? -1 : 1);
        for (std::size_t a = 0; a < k; ++a)
            term *= x(static_cast<std::size_t>(rows[a]), static_cast<std::size_t>(cols[p[a]]));
        sum += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

inline Scalar leibniz(const Matrix& x, const MinorSpec& s) { return leibniz(x, s.rows, s.cols); }

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) s.push_back(i + 1);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// Minimum over all minors of their sign: +1 if all positive, 0 if all nonnegative with a zero, -1 otherwise.
inline int minor_sign_floor(const Matrix& x) {
    const int n = static_cast<int>(x.size());
    int floor = 1;
    for (int k = 1; k <= n; ++k)
        for (const auto& r : subsets(n, k))
            for (const auto& c : subsets(n, k)) floor = std::min(floor, leibniz(x, r, c).sign());
    return floor;
}

inline bool is_tp(const Matrix& x) { return minor_sign_floor(x) > 0; }
inline bool is_tnn(const Matrix& x) { return minor_sign_floor(x) >= 0; }

inline Matrix mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, Scalar(0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

/// Elementary Jacobi factor: kind 0 = I + t E_{i,i+1}, 1 = I + t E_{i+1,i}, 2 = diagonal with entry t at (i,i).
inline Matrix jacobi(std::size_t n, int kind, std::size_t i, const Scalar& t) {
    Matrix m = Matrix::identity(n);
    if (kind == 0) m(i, i + 1) = t;
    else if (kind == 1) m(i + 1, i) = t;
    else m(i, i) = t;
    return m;
}

/// Product of elementary Jacobi factors with parameters; letters use the library encoding.
inline Matrix word_product(const totpos::Word& w, const std::vector<Scalar>& t) {
    Matrix x = Matrix::identity(static_cast<std::size_t>(w.n));
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto& l = w.letters[k];
        const int kind = l.kind == totpos::LetterKind::Unbarred ? 0 : l.kind == totpos::LetterKind::Barred ? 1 : 2;
        x = mul(x, jacobi(static_cast<std::size_t>(w.n), kind, static_cast<std::size_t>(l.index), t[k]));
    }
    return x;
}

inline Scalar positive(std::mt19937_64& rng) {
    return Scalar(static_cast<long>(1 + rng() % 9)) / Scalar(static_cast<long>(1 + rng() % 4));
}

inline Scalar signed_value(std::mt19937_64& rng) {
    return Scalar(static_cast<long>(rng() % 13) - 6) / Scalar(static_cast<long>(1 + rng() % 3));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    Matrix x(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) x(i, j) = signed_value(rng);
    return x;
}

/// Random product of elementary Jacobi factors covering every generator; totally positive.
inline Matrix random_tp(std::mt19937_64& rng, std::size_t n) {
    Matrix x = Matrix::identity(n);
    for (std::size_t i = 1; i <= n; ++i) x = mul(x, jacobi(n, 2, i, positive(rng)));
    for (int round = 0; round < 2; ++round)
        for (std::size_t k = n - 1; k >= 1; --k)
            for (std::size_t i = k; i <= n - 1; ++i) {
                x = mul(jacobi(n, 1, i, positive(rng)), x);
                x = mul(x, jacobi(n, 0, i, positive(rng)));
            }
    return x;
}

/// Vertex-disjoint path families from sources I to sinks J, summed with weights (planar networks admit only the identity pairing).
inline Scalar path_family_sum(const totpos::PlanarNetwork& net, const MinorSpec& s) {
    const auto& vs = net.vertices();
    const auto& es = net.edges();
    std::vector<std::vector<std::size_t>> out(vs.size());
    for (std::size_t e = 0; e < es.size(); ++e) out[es[e].from].push_back(e);

    struct Path {
        std::vector<std::size_t> vertices;
        Scalar weight;
    };
    auto paths_between = [&](std::size_t a, std::size_t b) {
        std::vector<Path> found;
        std::vector<std::size_t> stack{a};
        std::function<void(std::size_t, Scalar)> go = [&](std::size_t v, Scalar w) {
            if (v == b) found.push_back({stack, w});
            for (auto e : out[v]) {
                stack.push_back(es[e].to);
                go(es[e].to, w * es[e].weight);
                stack.pop_back();
            }
        };
        go(a, Scalar(1));
        return found;
    };

    const std::size_t k = s.order();
    std::vector<std::vector<Path>> options(k);
    for (std::size_t a = 0; a < k; ++a)
        options[a] = paths_between(net.sources()[static_cast<std::size_t>(s.rows[a] - 1)],
                                   net.sinks()[static_cast<std::size_t>(s.cols[a] - 1)]);
    Scalar total(0);
    std::vector<int> used(vs.size(), 0);
    std::function<void(std::size_t, Scalar)> pick = [&](std::size_t a, Scalar w) {
        if (a == k) {
            total += w;
            return;
        }
        for (const auto& p : options[a]) {
            if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](std::size_t v) { return used[v] != 0; })) continue;
            for (auto v : p.vertices) used[v] = 1;
            pick(a + 1, w * p.weight);
            for (auto v : p.vertices) used[v] = 0;
        }
    };
    pick(0, Scalar(1));
    return total;
}

/// Random planar leveled network with at most `max_vertices` vertices; edges that would break planarity are skipped.
inline totpos::PlanarNetwork random_network(std::mt19937_64& rng, int n, std::size_t max_vertices) {
    const int width = 5;
    std::vector<totpos::Vertex> vs;
    for (int h = 1; h <= n; ++h) vs.push_back({0, h});
    for (int h = 1; h <= n; ++h) vs.push_back({width, h});
    while (vs.size() < max_vertices) {
        const totpos::Vertex v{1 + static_cast<int>(rng() % (width - 1)), 1 + static_cast<int>(rng() % static_cast<unsigned>(n))};
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        if (rng() % 4 == 0) break;
    }
    std::vector<totpos::Edge> es;
    totpos::PlanarNetwork best(n, vs, es);
    for (int attempt = 0; attempt < 40; ++attempt) {
        const std::size_t a = rng() % vs.size(), b = rng() % vs.size();
        if (vs[a].x >= vs[b].x || std::abs(vs[a].level - vs[b].level) > 1) continue;
        es.push_back({a, b, positive(rng)});
        try {
            best = totpos::PlanarNetwork(n, vs, es);
        } catch (const totpos::InvalidArgument&) {
            es.pop_back();
        }
    }
    return best;
}

/// Direct transcription of the recurrence a_{k+5} a_k = a_{k+1} a_{k+4} + a_{k+2} a_{k+3}.
inline std::vector<Scalar> somos5(std::array<Scalar, 5> seed, std::size_t count) {
    std::vector<Scalar> a(seed.begin(), seed.end());
    while (a.size() < count) {
        const std::size_t k = a.size() - 5;
        a.push_back((a[k + 1] * a[k + 4] + a[k + 2] * a[k + 3]) / a[k]);
    }
    a.resize(count);
    return a;
}

/// Closed forms of the twist for n = 2 and n = 3.
inline Matrix twist_closed_form(const Matrix& x) {
    auto d = [&](std::vector<int> r, std::vector<int> c) { return leibniz(x, r, c); };
    if (x.size() == 2) {
        const Scalar det = d({1, 2}, {1, 2});
        return Matrix{{x(1, 1) / (x(1, 2) * x(2, 1)), Scalar(1) / x(2, 1)}, {Scalar(1) / x(1, 2), x(2, 2) / det}};
    }
    const Scalar det = d({1, 2, 3}, {1, 2, 3});
    const Scalar d2312 = d({2, 3}, {1, 2}), d1223 = d({1, 2}, {2, 3});
    return Matrix{{x(1, 1) / (x(3, 1) * x(1, 3)), d({1, 2}, {1, 3}) / (x(3, 1) * d1223), Scalar(1) / x(3, 1)},
                  {d({1, 3}, {1, 2}) / (x(1, 3) * d2312), (x(3, 3) * d({1, 2}, {1, 2}) - det) / (d2312 * d1223), x(3, 2) / d2312},
                  {Scalar(1) / x(1, 3), x(2, 3) / d1223, d({2, 3}, {2, 3}) / det}};
}

}  // namespace oracle
