#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/matrix.hpp"
#include "totpos/network.hpp"
#include "totpos/words.hpp"

namespace totpos {

/// Monomial relation between the parameters of i_max(n) and the initial minors of
/// the product: minor m = prod_k t_k^exponents[m][k] and t_k = prod_m minor_m^inverse[k][m].
struct MonomialTable {
    int n = 0;
    std::vector<MinorSpec> minors;            ///< initial minors, row-major by corner
    std::vector<std::vector<int>> exponents;  ///< minors x parameters, entries 0/1
    std::vector<std::vector<int>> inverse;    ///< parameters x minors
    std::vector<std::size_t> leading;         ///< leading parameter e(minor) for each minor
};

namespace detail {

inline std::vector<long> first_primes(std::size_t count, long start = 2) {
    std::vector<long> ps;
    for (long p = start; ps.size() < count; ++p) {
        bool prime = p > 1;
        for (long d = 2; d * d <= p && prime; ++d)
            if (p % d == 0) prime = false;
        if (prime) ps.push_back(p);
    }
    return ps;
}

inline MonomialTable build_monomial_table(int n) {
    const Word w = i_max(n);
    const std::size_t m = w.size();
    MonomialTable tab;
    tab.n = n;
    tab.minors = initial_minor_specs(n);

    const auto primes = first_primes(m);
    std::vector<Scalar> t(primes.begin(), primes.end());
    const Matrix x = product_map(w, t);
    for (const auto& spec : tab.minors) {
        Scalar v = minor(x, spec);
        if (!v.is_integer() || v.sign() <= 0) throw Error("initial minor of the i_max product is not a monomial");
        mpz_class z = v.numerator();
        std::vector<int> row(m, 0);
        for (std::size_t k = 0; k < m; ++k)
            while (z % primes[k] == 0) {
                z /= primes[k];
                ++row[k];
            }
        if (z != 1) throw Error("initial minor of the i_max product is not a monomial");
        tab.exponents.push_back(std::move(row));
    }

    // Confirm the monomials at an unrelated point.
    const auto other = first_primes(m, 1000);
    std::vector<Scalar> s;
    for (std::size_t k = 0; k < m; ++k) s.emplace_back(other[k], primes[(k + 1) % m]);
    const Matrix y = product_map(w, s);
    for (std::size_t r = 0; r < tab.minors.size(); ++r) {
        Scalar expect(1);
        for (std::size_t k = 0; k < m; ++k) expect *= s[k].pow(tab.exponents[r][k]);
        if (minor(y, tab.minors[r]) != expect) throw Error("initial minor of the i_max product is not a monomial");
    }

    // Exact inverse of the exponent matrix.
    Matrix e(m, Scalar(0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k) e(r + 1, k + 1) = Scalar(tab.exponents[r][k]);
    const Matrix inv = totpos::inverse(e);
    tab.inverse.assign(m, std::vector<int>(m, 0));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < m; ++r) {
            const Scalar& v = inv(k + 1, r + 1);
            if (!v.is_integer()) throw Error("monomial transformation is not unimodular");
            tab.inverse[k][r] = static_cast<int>(v.numerator().get_si());
        }

    // Leading edges: by increasing support size each minor adds exactly one new parameter.
    std::vector<std::size_t> by_size(m);
    std::iota(by_size.begin(), by_size.end(), 0);
    auto support = [&](std::size_t r) {
        int c = 0;
        for (int v : tab.exponents[r]) c += v;
        return c;
    };
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) { return support(a) < support(b); });
    tab.leading.assign(m, m);
    std::vector<bool> taken(m, false);
    for (std::size_t r : by_size) {
        std::size_t fresh = m, count = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (tab.exponents[r][k] != 0 && !taken[k]) {
                fresh = k;
                ++count;
            }
        if (count != 1) throw Error("leading-edge map of initial minors is not a bijection");
        taken[fresh] = true;
        tab.leading[r] = fresh;
    }
    return tab;
}

}  // namespace detail

/// Cached per n; thread-safe.
inline const MonomialTable& imax_monomial_table(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const MonomialTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const MonomialTable>(detail::build_monomial_table(n));
    return *slot;
}

struct EssentialEdge {
    std::size_t edge = 0;       ///< index into network.edges()
    std::size_t parameter = 0;  ///< position in i_max(n)
    MinorSpec minor;            ///< initial minor whose leading edge this is
};

struct Gamma0 {
    PlanarNetwork network;
    std::vector<EssentialEdge> essential;  ///< one per i_max position
};

/// The standard network for i_max(n) with the given essential weights (all other edges weigh 1).
inline Gamma0 gamma0(int n, const std::vector<Scalar>& weights) {
    const Word w = i_max(n);
    auto wn = word_network(w, weights);
    const auto& tab = imax_monomial_table(n);
    Gamma0 g{std::move(wn.network), {}};
    for (std::size_t k = 0; k < w.size(); ++k) {
        EssentialEdge e{wn.param_edges[k], k, {}};
        for (std::size_t r = 0; r < tab.leading.size(); ++r)
            if (tab.leading[r] == k) e.minor = tab.minors[r];
        g.essential.push_back(std::move(e));
    }
    return g;
}

inline Gamma0 gamma0(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    return gamma0(n, std::vector<Scalar>(static_cast<std::size_t>(n * n), Scalar(1)));
}

}  // namespace totpos
