// Acceptance criteria: one PASS/FAIL line each; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "../support/oracles.hpp"
#include "totpos/totpos.hpp"

using namespace totpos;

namespace {

using Check = std::function<std::string()>;  // empty string = pass

MinorSpec spec(std::vector<int> r, std::vector<int> c) { return {std::move(r), std::move(c)}; }

std::string phi3_classes() {
    const auto start = std::chrono::steady_clock::now();
    const auto g = enumerate_phi(3);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g.vertices.size() != 34) return std::to_string(g.vertices.size()) + " classes";
    if (secs >= 10.0) return "took " + std::to_string(secs) + " s";
    std::set<MinorSpec> common;
    bool first = true;
    for (const auto& v : g.vertices) {
        std::set<MinorSpec> unbounded(v.key.begin(), v.key.end());
        for (const auto& b : v.bounded) unbounded.erase(b);
        if (first) common = unbounded;
        else {
            std::set<MinorSpec> keep;
            for (const auto& m : common)
                if (unbounded.count(m)) keep.insert(m);
            common = keep;
        }
        first = false;
    }
    const std::set<MinorSpec> expected{spec({3}, {1}), spec({1}, {3}), spec({2, 3}, {1, 2}), spec({1, 2}, {2, 3}),
                                       spec({1, 2, 3}, {1, 2, 3})};
    return common == expected ? std::string{} : "common unbounded minors differ";
}

std::string running_example_chambers() {
    const auto d = DoubleWiringDiagram::parse("2~ 1 2 1~ 2~ 1", 3);
    const auto all = chamber_minors(d);
    const std::set<MinorSpec> got(all.begin(), all.end());
    const std::set<MinorSpec> expected{spec({3}, {1}),       spec({3}, {2}),       spec({1}, {2}),
                                       spec({1}, {3}),       spec({2, 3}, {1, 2}), spec({1, 3}, {1, 2}),
                                       spec({1, 3}, {2, 3}), spec({1, 2}, {2, 3}), spec({1, 2, 3}, {1, 2, 3})};
    if (all.size() != 9 || got != expected) return "chamber minors differ";
    const auto b = bounded_chambers(d);
    const std::set<MinorSpec> bounded(b.begin(), b.end());
    const std::set<MinorSpec> expected_b{spec({3}, {2}), spec({1}, {2}), spec({1, 3}, {1, 2}), spec({1, 3}, {2, 3})};
    return b.size() == 4 && bounded == expected_b ? std::string{} : "bounded chambers differ";
}

// Diagrams reached by random local moves from the minimal one.
std::vector<DoubleWiringDiagram> sample_diagrams(std::mt19937_64& rng, int n, std::size_t count) {
    std::vector<DoubleWiringDiagram> out{lex_minimal(n)};
    DoubleWiringDiagram d = out.front();
    while (out.size() < count) {
        for (int step = 0; step < 6; ++step) {
            const auto moves = local_moves(d);
            d = moves[rng() % moves.size()].target;
        }
        out.push_back(d);
    }
    return out;
}

std::string criterion_equivalence() {
    std::mt19937_64 rng(3);
    const auto phi = enumerate_phi(3);
    const auto d4 = sample_diagrams(rng, 4, 12);
    std::size_t tp_count = 0;
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = k < 250 ? 3 : 4;
        Matrix x = k % 3 == 0 ? oracle::random_matrix(rng, n) : oracle::random_tp(rng, n);
        if (k % 3 == 2) x(1 + rng() % n, 1 + rng() % n) += oracle::signed_value(rng);
        const bool tp = oracle::is_tp(x);
        tp_count += tp;
        if (is_tp_bruteforce(x) != tp) return "brute force, case " + std::to_string(k);
        if (test_initial_minors(x) != tp) return "initial minors, case " + std::to_string(k);
        if (test_fekete_solid(x) != tp) return "solid minors, case " + std::to_string(k);
        if (n == 3) {
            for (const auto& v : phi.vertices)
                if (test_chamber_minors(x, v.representative) != tp) return "chamber minors of " + v.representative.str();
        } else {
            for (const auto& d : d4)
                if (test_chamber_minors(x, d) != tp) return "chamber minors of " + d.str();
        }
    }
    return tp_count > 100 && tp_count < 450 ? std::string{} : "unbalanced sample";
}

std::string lindstrom() {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 120; ++k) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto net = oracle::random_network(rng, n, 12);
        const Matrix x = weight_matrix(net);
        for (const auto& s : all_minor_specs(n))
            if (minor(x, s) != oracle::path_family_sum(net, s)) return "minor " + to_string(s) + ", case " + std::to_string(k);
    }
    return {};
}

std::string round_trips() {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + k % 5;
        std::vector<Scalar> t(static_cast<std::size_t>(n * n));
        for (auto& v : t) v = oracle::positive(rng);
        const Matrix x = oracle::word_product(i_max(n), t);
        if (factor_imax(x) != t) return "factor_imax, case " + std::to_string(k);
        std::map<MinorSpec, Scalar> values;
        for (const auto& s : initial_minor_specs(n)) values[s] = oracle::leibniz(x, s);
        if (reconstruct_from_initial_minors(values, n) != x) return "reconstruction, case " + std::to_string(k);
    }
    return {};
}

std::string transport_sequences() {
    Rng rng(6);
    for (int k = 0; k < 100; ++k) {
        const int n = 2 + k % 3;
        Word w = random_full_scheme(rng, n);
        std::vector<Scalar> t(w.size());
        for (auto& v : t) v = random_positive(rng);
        const Matrix x = oracle::word_product(w, t);
        for (int step = 0; step < 25; ++step) {
            const auto moves = applicable_moves(w);
            if (moves.empty()) break;
            auto r = transport(w, t, moves[rng() % moves.size()]);
            w = std::move(r.word);
            t = std::move(r.params);
            for (const auto& v : t)
                if (v.sign() <= 0) return "nonpositive parameter, case " + std::to_string(k);
        }
        if (oracle::word_product(w, t) != x) return "product changed, case " + std::to_string(k);
    }
    return {};
}

std::string determinant_identities() {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
        const Matrix x = oracle::random_matrix(rng, n);
        if (!desnanot_residual(x, 1, static_cast<int>(n), 1, static_cast<int>(n)).is_zero())
            return "desnanot, case " + std::to_string(k);
        const auto all = interval(1, static_cast<int>(n));
        const auto inner = interval(2, static_cast<int>(n) - 1);
        auto drop = [&](int a, int b) {
            std::vector<int> s;
            for (int i : all)
                if (i != a && i != b) s.push_back(i);
            return s;
        };
        const int m = static_cast<int>(n);
        const Scalar lhs = oracle::leibniz(x, all, all) * oracle::leibniz(x, inner, inner);
        const Scalar rhs = oracle::leibniz(x, drop(1, 0), drop(1, 0)) * oracle::leibniz(x, drop(m, 0), drop(m, 0)) -
                           oracle::leibniz(x, drop(1, 0), drop(m, 0)) * oracle::leibniz(x, drop(m, 0), drop(1, 0));
        if (lhs != rhs) return "condensation oracle, case " + std::to_string(k);
    }
    const auto g = enumerate_phi(3);
    for (int k = 0; k < 100; ++k) {
        const Matrix x = oracle::random_matrix(rng, 3);
        for (const auto& e : g.edges) {
            const auto& mv = e.move;
            auto d = [&](const MinorSpec& s) { return oracle::leibniz(x, s); };
            if (d(mv.a) * d(mv.c) + d(mv.b) * d(mv.d) != d(mv.y) * d(mv.z)) return "exchange identity on " + mv.source.str();
        }
    }
    return {};
}

std::string twist_checks() {
    std::mt19937_64 rng(8);
    for (std::size_t n : {2U, 3U})
        for (int k = 0; k < 50; ++k) {
            const Matrix x = oracle::random_tp(rng, n);
            const Matrix y = twist(x);
            if (y != oracle::twist_closed_form(x)) return "closed form, n=" + std::to_string(n);
            if (!is_tp_bruteforce(y) || !oracle::is_tp(y)) return "twist not totally positive";
        }
    const Matrix x2{{2, 1}, {3, 5}};
    const Matrix x3{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
    if (!verify_twist_monomial(x2, i_max(2), DoubleWiringDiagram::of_scheme(i_max(2)))) return "monomial fit for n=2";
    if (!verify_twist_monomial(x3, i_max(3), DoubleWiringDiagram::of_scheme(i_max(3)))) return "monomial fit for n=3";
    const Word s = Word::parse("2~ 1 @3 2 1~ @1 2~ 1 @2", 3);
    if (!verify_twist_monomial(x3, s, DoubleWiringDiagram::of_scheme(s))) return "monomial fit for " + s.str();
    return {};
}

std::string tnn_efficient_checks() {
    for (int n = 2; n <= 6; ++n)
        if (tnn_efficient_specs(n).size() != (std::size_t{1} << (n + 1)) - static_cast<std::size_t>(n) - 2)
            return "count for n=" + std::to_string(n);
    Rng rng(9);
    std::size_t tested = 0, tnn = 0;
    for (int k = 0; tested < 300 && k < 5000; ++k) {
        const int n = 2 + k % 3;
        Matrix x = k % 2 ? random_invertible_tnn(rng, n) : oracle::random_matrix(rng, static_cast<std::size_t>(n));
        if (k % 4 == 1) x(1 + rng() % static_cast<unsigned>(n), 1 + rng() % static_cast<unsigned>(n)) += Scalar(1) / Scalar(3);
        if (oracle::leibniz(x, interval(1, n), interval(1, n)).is_zero()) continue;
        ++tested;
        const bool expect = oracle::is_tnn(x);
        tnn += expect;
        if (test_tnn_efficient(x) != expect) return "verdict differs, case " + std::to_string(k);
    }
    return tnn > 50 ? std::string{} : "too few nonnegative instances";
}

std::string bruhat_and_oscillatory() {
    Rng rng(10);
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + k % 4;
        const auto u = random_permutation(rng, n), v = random_permutation(rng, n);
        const Word w = random_scheme(rng, u, v);
        std::vector<Scalar> t(w.size());
        for (auto& p : t) p = random_positive(rng);
        const auto type = bruhat_type(oracle::word_product(w, t));
        if (!(type.u == u && type.v == v)) return "type of " + w.str();
    }
    const OscillatoryCriterion all[] = {OscillatoryCriterion::Adjacent, OscillatoryCriterion::Power, OscillatoryCriterion::Irreducible};
    for (int k = 0; k < 200; ++k) {
        const int n = 2 + k % 3;
        const Matrix x = random_invertible_tnn(rng, n);
        const bool b = is_oscillatory(x, all[0]);
        if (b != is_oscillatory(x, all[1]) || b != is_oscillatory(x, all[2])) return "criteria disagree, case " + std::to_string(k);
        if (b != oracle::is_tp(power(x, static_cast<unsigned>(n - 1)))) return "power oracle, case " + std::to_string(k);
    }
    for (int k = 0; k < 100; ++k) {
        const int n = 2 + k % 3;
        std::vector<Letter> ls;
        for (int i = 1; i <= n; ++i) ls.push_back(Letter::diag(i));
        for (int i = 1; i < n; ++i) {
            ls.push_back(Letter::up(i));
            ls.push_back(Letter::down(i));
        }
        const std::size_t extra = rng() % 4;
        for (std::size_t e = 0; e < extra; ++e)
            ls.push_back(rng() % 2 ? Letter::up(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)))
                                   : Letter::down(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1))));
        std::shuffle(ls.begin(), ls.end(), rng);
        const Word w(n, ls);
        std::vector<Scalar> t(w.size());
        for (auto& p : t) p = random_positive(rng);
        const Matrix x = oracle::word_product(w, t);
        for (auto c : all)
            if (!is_oscillatory(x, c)) return "construction " + w.str() + " not oscillatory";
        if (!oracle::is_tp(power(x, static_cast<unsigned>(n - 1)))) return "power of " + w.str() + " not totally positive";
    }
    return {};
}

std::string somos_checks() {
    const std::array<Scalar, 5> unit{1, 1, 1, 1, 1};
    const auto lib = somos5_numeric(unit, 11);
    const auto hand = oracle::somos5(unit, 11);
    if (lib != hand) return "numeric terms differ";
    if (lib[10] != Scalar(83)) return "a11 = " + lib[10].str();
    std::vector<SomosTerm> sym;
    try {
        sym = somos5_symbolic(12);
    } catch (const LaurentnessFailure& e) {
        std::cerr << "LAURENTNESS COUNTEREXAMPLE: " << e.what() << '\n';
        return std::string("division not exact: ") + e.what();
    }
    std::mt19937_64 rng(11);
    std::array<Scalar, 5> seed;
    for (auto& s : seed) s = oracle::positive(rng);
    const auto values = oracle::somos5(seed, 12);
    for (std::size_t k = 6; k <= 12; ++k) {
        const auto& term = sym[k - 1];
        for (const auto& [exp, coeff] : term.value.terms())
            if (coeff.sign() < 0 || !coeff.is_integer()) {
                std::cerr << "NEGATIVE OR FRACTIONAL COEFFICIENT in a" << k << '\n';
                return "coefficient " + coeff.str() + " in a" + std::to_string(k);
            }
        if (term.value.eval(seed) != values[k - 1]) return "evaluation of a" + std::to_string(k);
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Check>> criteria{
        {"phi3 has 34 classes with five common unbounded minors", phi3_classes},
        {"running example chamber and bounded minors", running_example_chambers},
        {"positivity criteria agree on 500 matrices", criterion_equivalence},
        {"path families match weight-matrix minors", lindstrom},
        {"factorization and reconstruction round trips", round_trips},
        {"move transport preserves products and positivity", transport_sequences},
        {"condensation and three-term exchange identities", determinant_identities},
        {"twist closed forms, positivity and monomiality", twist_checks},
        {"efficient nonnegativity test", tnn_efficient_checks},
        {"double Bruhat type and oscillatory criteria", bruhat_and_oscillatory},
        {"Somos-5 values and Laurent coefficients", somos_checks},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::string why;
        try {
            why = criteria[k].second();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (why.empty() ? "PASS" : "FAIL") << ' ' << k + 1 << ' ' << criteria[k].first;
        if (!why.empty()) std::cout << " (" << why << ')';
        std::cout << std::endl;
        failures += !why.empty();
    }
    return failures == 0 ? 0 : 1;
}
