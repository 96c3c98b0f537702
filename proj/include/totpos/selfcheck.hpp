#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "totpos/factorization.hpp"
#include "totpos/gamma0.hpp"
#include "totpos/matrix.hpp"
#include "totpos/network.hpp"
#include "totpos/parallel.hpp"
#include "totpos/positivity.hpp"
#include "totpos/random.hpp"
#include "totpos/somos.hpp"
#include "totpos/wiring.hpp"
#include "totpos/words.hpp"

namespace totpos {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  ///< first failing case, if any
};

namespace detail {

// Runs `cases` independent trials in parallel; each trial gets its own generator.
inline SuiteResult run_suite(const std::string& name, std::size_t cases, std::uint64_t seed,
                             const std::function<std::string(Rng&, std::size_t)>& trial) {
    SuiteResult r{name, true, cases, {}};
    std::vector<std::string> failures(cases);
    parallel_for(cases, [&](std::size_t k) {
        Rng rng(seed * 1000003ULL + k);
        try {
            failures[k] = trial(rng, k);
        } catch (const std::exception& e) {
            failures[k] = std::string("exception: ") + e.what();
        }
    });
    for (std::size_t k = 0; k < cases; ++k)
        if (!failures[k].empty()) {
            r.passed = false;
            r.detail = "case " + std::to_string(k) + ": " + failures[k];
            break;
        }
    return r;
}

}  // namespace detail

/// Cross-oracle property suites at desk scale. `scale` multiplies the case counts.
inline std::vector<SuiteResult> selfcheck(std::size_t scale = 1) {
    std::vector<SuiteResult> out;

    out.push_back(detail::run_suite("lindstrom", 40 * scale, 1, [](Rng& rng, std::size_t) -> std::string {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Letter> ls;
        for (int k = 0; k < 3; ++k) {
            const int kind = static_cast<int>(rng() % 3);
            ls.push_back(kind == 2 ? Letter::diag(1 + static_cast<int>(rng() % static_cast<unsigned>(n)))
                                   : Letter{kind ? LetterKind::Barred : LetterKind::Unbarred, 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1))});
        }
        const Word w(n, ls);
        const auto net = word_network(w, random_positive_vector(rng, w.size())).network;
        const Matrix x = weight_matrix(net);
        for (const auto& s : all_minor_specs(n))
            if (minor(x, s) != disjoint_path_minor(net, s)) return "minor " + to_string(s) + " of " + w.str();
        return {};
    }));

    out.push_back(detail::run_suite("criteria", 60 * scale, 2, [](Rng& rng, std::size_t k) -> std::string {
        const Matrix x = k % 2 ? random_tp(rng, 3) : random_matrix(rng, 3);
        const bool tp = is_tp_bruteforce(x);
        if (test_initial_minors(x) != tp) return "initial minors";
        if (test_fekete_solid(x) != tp) return "solid minors";
        if (test_chamber_minors(x, DoubleWiringDiagram::parse("2~ 1 2 1~ 2~ 1", 3)) != tp) return "chamber minors";
        return {};
    }));

    out.push_back(detail::run_suite("transport", 40 * scale, 3, [](Rng& rng, std::size_t) -> std::string {
        const int n = 2 + static_cast<int>(rng() % 3);
        Word w = random_full_scheme(rng, n);
        std::vector<Scalar> t = random_positive_vector(rng, w.size());
        const Matrix x = product_map(w, t);
        for (int step = 0; step < 20; ++step) {
            const auto moves = applicable_moves(w);
            if (moves.empty()) break;
            auto r = transport(w, t, moves[rng() % moves.size()]);
            w = std::move(r.word);
            t = std::move(r.params);
            for (const auto& v : t)
                if (v.sign() <= 0) return "nonpositive parameter";
        }
        return product_map(w, t) == x ? std::string{} : "product changed";
    }));

    out.push_back(detail::run_suite("round-trip", 20 * scale, 4, [](Rng& rng, std::size_t) -> std::string {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto t = random_positive_vector(rng, static_cast<std::size_t>(n * n));
        const Matrix x = product_map(i_max(n), t);
        if (factor_imax(x) != t) return "factor_imax";
        if (reconstruct_from_initial_minors(initial_minor_values(x), n) != x) return "reconstruction";
        const Word s = random_full_scheme(rng, n);
        const auto p = factor_scheme(x, s);
        if (product_map(s, p) != x) return "factor_scheme " + s.str();
        return {};
    }));

    out.push_back(detail::run_suite("desnanot", 40 * scale, 5, [](Rng& rng, std::size_t) -> std::string {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Matrix x = random_matrix(rng, n);
        return desnanot_residual(x, 1, n, 1, n).is_zero() ? std::string{} : "nonzero residual";
    }));

    out.push_back(detail::run_suite("tnn-efficient", 40 * scale, 6, [](Rng& rng, std::size_t k) -> std::string {
        const int n = 2 + static_cast<int>(rng() % 3);
        const Matrix x = k % 2 ? random_invertible_tnn(rng, n) : random_matrix(rng, n);
        if (determinant(x).is_zero()) return {};
        return test_tnn_efficient(x) == is_tnn_bruteforce(x) ? std::string{} : "verdicts differ";
    }));

    out.push_back(detail::run_suite("bruhat", 40 * scale, 7, [](Rng& rng, std::size_t) -> std::string {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto u = random_permutation(rng, n), v = random_permutation(rng, n);
        const Word w = random_scheme(rng, u, v);
        const auto t = bruhat_type(product_map(w, random_positive_vector(rng, w.size())));
        return t.u == u && t.v == v ? std::string{} : "type of " + w.str();
    }));

    out.push_back(detail::run_suite("oscillatory", 40 * scale, 8, [](Rng& rng, std::size_t) -> std::string {
        const int n = 2 + static_cast<int>(rng() % 3);
        const Matrix x = random_invertible_tnn(rng, n);
        const bool b = is_oscillatory(x, OscillatoryCriterion::Adjacent);
        if (b != is_oscillatory(x, OscillatoryCriterion::Power) || b != is_oscillatory(x, OscillatoryCriterion::Irreducible))
            return "criteria disagree";
        return {};
    }));

    out.push_back(detail::run_suite("somos", 1, 9, [](Rng& rng, std::size_t) -> std::string {
        const auto terms = somos5_symbolic(12);
        std::array<Scalar, 5> seed;
        for (auto& s : seed) s = random_positive(rng);
        const auto nums = somos5_numeric(seed, 12);
        for (const auto& t : terms) {
            if (!t.nonnegative) return "negative coefficient in a" + std::to_string(t.index);
            if (t.value.eval(seed) != nums[t.index - 1]) return "mismatch at a" + std::to_string(t.index);
        }
        return {};
    }));

    out.push_back(detail::run_suite("phi3", 1, 10, [](Rng& rng, std::size_t) -> std::string {
        const auto g = enumerate_phi(3);
        if (g.vertices.size() != 34) return std::to_string(g.vertices.size()) + " vertices";
        const Matrix x = random_matrix(rng, 3);
        for (const auto& e : g.edges) {
            const auto& m = e.move;
            if (minor(x, m.a) * minor(x, m.c) + minor(x, m.b) * minor(x, m.d) != minor(x, m.y) * minor(x, m.z))
                return "exchange identity fails";
        }
        return {};
    }));

    return out;
}

}  // namespace totpos
