#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/matrix.hpp"
#include "totpos/permutation.hpp"
#include "totpos/scalar.hpp"
#include "totpos/wiring.hpp"

namespace totpos {

/// A minor that violated the tested sign condition.
struct Witness {
    MinorSpec minor;
    Scalar value;
};

struct CheckReport {
    bool verdict = true;
    std::size_t minors_checked = 0;
    std::vector<Witness> witnesses;
};

enum class Sign { Positive, Nonnegative };

/// Evaluates every listed minor; failures are recorded as witnesses.
inline CheckReport check_minors(const Matrix& x, const std::vector<MinorSpec>& specs, Sign sign) {
    CheckReport r;
    for (const auto& s : specs) {
        const Scalar v = minor(x, s);
        ++r.minors_checked;
        if (sign == Sign::Positive ? v.sign() <= 0 : v.sign() < 0) {
            r.verdict = false;
            r.witnesses.push_back({s, v});
        }
    }
    return r;
}

inline constexpr int default_guard = 6;

inline CheckReport tp_bruteforce(const Matrix& x, int guard = default_guard) {
    const int n = static_cast<int>(x.size());
    if (n > guard) throw GuardExceeded(n, guard);
    return check_minors(x, all_minor_specs(n), Sign::Positive);
}

inline CheckReport tnn_bruteforce(const Matrix& x, int guard = default_guard) {
    const int n = static_cast<int>(x.size());
    if (n > guard) throw GuardExceeded(n, guard);
    return check_minors(x, all_minor_specs(n), Sign::Nonnegative);
}

inline bool is_tp_bruteforce(const Matrix& x, int guard = default_guard) { return tp_bruteforce(x, guard).verdict; }
inline bool is_tnn_bruteforce(const Matrix& x, int guard = default_guard) { return tnn_bruteforce(x, guard).verdict; }

inline CheckReport initial_minors_report(const Matrix& x) {
    return check_minors(x, initial_minor_specs(static_cast<int>(x.size())), Sign::Positive);
}
inline bool test_initial_minors(const Matrix& x) { return initial_minors_report(x).verdict; }

inline CheckReport chamber_minors_report(const Matrix& x, const DoubleWiringDiagram& d) {
    if (static_cast<int>(x.size()) != d.n()) throw InvalidArgument("matrix and diagram sizes differ");
    return check_minors(x, chamber_minors(d), Sign::Positive);
}
inline bool test_chamber_minors(const Matrix& x, const DoubleWiringDiagram& d) { return chamber_minors_report(x, d).verdict; }

inline CheckReport fekete_solid_report(const Matrix& x) {
    return check_minors(x, solid_minor_specs(static_cast<int>(x.size())), Sign::Positive);
}
inline bool test_fekete_solid(const Matrix& x) { return fekete_solid_report(x).verdict; }

/// Minors with row set [1,k] or column set [1,k]; the leading principal ones appear once.
inline std::vector<MinorSpec> tnn_efficient_specs(int n) {
    std::vector<MinorSpec> out;
    for (int k = 1; k <= n; ++k) {
        const auto lead = interval(1, k);
        for (const auto& s : k_subsets(n, k)) out.push_back({lead, s});
        for (const auto& s : k_subsets(n, k))
            if (s != lead) out.push_back({s, lead});
    }
    const std::size_t expected = (std::size_t{1} << (n + 1)) - static_cast<std::size_t>(n) - 2;
    if (out.size() != expected) throw Error("efficient TNN enumeration produced the wrong number of minors");
    return out;
}

/// TNN test for invertible matrices: initial-row and initial-column minors nonnegative,
/// leading principal minors positive.
inline CheckReport tnn_efficient(const Matrix& x) {
    const int n = static_cast<int>(x.size());
    if (determinant(x).is_zero()) throw SingularMatrix("efficient TNN test needs an invertible matrix; use the brute-force method");
    CheckReport r;
    for (const auto& s : tnn_efficient_specs(n)) {
        const Scalar v = minor(x, s);
        ++r.minors_checked;
        const bool principal = s.rows == s.cols;
        if (principal ? v.sign() <= 0 : v.sign() < 0) {
            r.verdict = false;
            r.witnesses.push_back({s, v});
        }
    }
    return r;
}
inline bool test_tnn_efficient(const Matrix& x) { return tnn_efficient(x).verdict; }

/// The 2n-1 distinct corner minors on rows [1,i] with the last i columns and vice versa.
inline std::vector<MinorSpec> antiprincipal_specs(int n) {
    std::vector<MinorSpec> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back({interval(1, i), interval(n - i + 1, n)});
        if (i < n) out.push_back({interval(n - i + 1, n), interval(1, i)});
    }
    return out;
}

/// For a TNN matrix: TP iff all corner minors are nonzero.
inline CheckReport tp_given_tnn(const Matrix& x) {
    CheckReport r;
    for (const auto& s : antiprincipal_specs(static_cast<int>(x.size()))) {
        const Scalar v = minor(x, s);
        ++r.minors_checked;
        if (v.is_zero()) {
            r.verdict = false;
            r.witnesses.push_back({s, v});
        }
    }
    return r;
}
inline bool test_tp_given_tnn(const Matrix& x) { return tp_given_tnn(x).verdict; }

enum class OscillatoryCriterion { Adjacent, Power, Irreducible };

/// Oscillation test for an invertible TNN matrix.
///   Adjacent:    all entries just above and below the diagonal are positive
///   Power:       x^(n-1) is totally positive
///   Irreducible: x is not block-triangular
inline bool is_oscillatory(const Matrix& x, OscillatoryCriterion c, int guard = default_guard) {
    const std::size_t n = x.size();
    if (determinant(x).is_zero()) throw SingularMatrix("oscillation test needs an invertible matrix");
    if (!is_tnn_bruteforce(x, guard)) throw PositivityViolation("oscillation test needs a totally nonnegative matrix");
    switch (c) {
        case OscillatoryCriterion::Adjacent:
            for (std::size_t i = 1; i < n; ++i)
                if (x(i, i + 1).sign() <= 0 || x(i + 1, i).sign() <= 0) return false;
            return true;
        case OscillatoryCriterion::Power:
            return is_tp_bruteforce(power(x, static_cast<unsigned>(n - 1)), guard);
        case OscillatoryCriterion::Irreducible:
            return !is_block_triangular(x);
    }
    return false;
}

struct BruhatType {
    Permutation u;
    Permutation v;
};

/// Double Bruhat cell of an invertible matrix from rank profiles:
///   rank x[i..n, 1..j] = #{k <= j : u(k) >= i}
///   rank x[1..i, j..n] = #{k >= j : v(k) <= i}
inline BruhatType bruhat_type(const Matrix& x) {
    const int n = static_cast<int>(x.size());
    if (determinant(x).is_zero()) throw SingularMatrix("Bruhat type needs an invertible matrix");
    auto sw = [&](int i, int j) { return j < 1 || i > n ? 0 : static_cast<int>(rank(x, interval(i, n), interval(1, j))); };
    auto ne = [&](int i, int j) { return i < 1 || j > n ? 0 : static_cast<int>(rank(x, interval(1, i), interval(j, n))); };
    std::vector<int> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int uj = 0;
        for (int i = 1; i <= n; ++i)
            if (sw(i, j) - sw(i, j - 1) == 1) uj = i;
        u[static_cast<std::size_t>(j - 1)] = uj;
        int vj = 0;
        for (int i = n; i >= 1; --i)
            if (ne(i, j) - ne(i, j + 1) == 1) vj = i;
        v[static_cast<std::size_t>(j - 1)] = vj;
    }
    BruhatType t{Permutation(u), Permutation(v)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cv = 0;
            for (int k = 1; k <= j; ++k) cu += t.u(k) >= i ? 1 : 0;
            for (int k = j; k <= n; ++k) cv += t.v(k) <= i ? 1 : 0;
            if (cu != sw(i, j) || cv != ne(i, j)) throw Error("rank profile is not that of a permutation");
        }
    return t;
}

}  // namespace totpos
