#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/laurent.hpp"
#include "totpos/scalar.hpp"

namespace totpos {

/// Dense square matrix over an exact ring. Public indices are 1-based.
template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;

    explicit BasicMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw InvalidArgument("matrix must be square");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, T(0));
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

    [[nodiscard]] BasicMatrix transpose() const {
        BasicMatrix t(n_);
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.n_ != b.n_) throw InvalidArgument("matrix dimensions differ");
        BasicMatrix c(a.n_, T(0));
        for (std::size_t i = 1; i <= a.n_; ++i)
            for (std::size_t k = 1; k <= a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 1; j <= a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw InvalidArgument("matrix index out of range");
        return (i - 1) * n_ + (j - 1);
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<Scalar>;
using PolyMatrix = BasicMatrix<LaurentPoly>;

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 1; i <= m.size(); ++i) {
        os << (i == 1 ? "[[" : " [");
        for (std::size_t j = 1; j <= m.size(); ++j) os << (j > 1 ? ", " : "") << m(i, j);
        os << (i == m.size() ? "]]" : "]\n");
    }
    return os;
}

/// Row set I and column set J of a minor, 1-based and strictly increasing.
/// The empty spec denotes the empty minor, whose value is 1.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;

    [[nodiscard]] std::size_t order() const noexcept { return rows.size(); }

    void validate(std::size_t n) const {
        if (rows.size() != cols.size()) throw InvalidArgument("minor row and column sets differ in size");
        auto check = [n](const std::vector<int>& s) {
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (s[k] < 1 || static_cast<std::size_t>(s[k]) > n)
                    throw InvalidArgument("minor index out of range");
                if (k > 0 && s[k] <= s[k - 1]) throw InvalidArgument("minor index set must be strictly increasing");
            }
        };
        check(rows);
        check(cols);
    }

    friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
    friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

inline std::vector<int> interval(int lo, int hi) {
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(k);
    return v;
}

/// "D{23,12}" style label; indices above 9 are separated by dots.
inline std::string to_string(const MinorSpec& s) {
    auto part = [](const std::vector<int>& v) {
        const bool wide = std::any_of(v.begin(), v.end(), [](int x) { return x > 9; });
        std::string out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (wide && k > 0) out += ".";
            out += std::to_string(v[k]);
        }
        return out;
    };
    return "D{" + part(s.rows) + "," + part(s.cols) + "}";
}

inline std::ostream& operator<<(std::ostream& os, const MinorSpec& s) { return os << to_string(s); }

namespace detail {

template <class T>
T exact_quotient(const T& a, const T& b) {
    return a / b;
}

inline mpz_class exact_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = laurent_divide_exact(a, b);
    if (!q) throw InvalidArgument("inexact division during fraction-free elimination");
    return *q;
}

inline bool is_zero(const mpz_class& v) { return v == 0; }
template <class T>
bool is_zero(const T& v) {
    return v.is_zero();
}

/// Bareiss fraction-free determinant of a k x k row-major block.
template <class R>
R bareiss_determinant(std::vector<R> a, std::size_t k) {
    if (k == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (is_zero(a[p * k + p])) {
            std::size_t swap_row = p + 1;
            while (swap_row < k && is_zero(a[swap_row * k + p])) ++swap_row;
            if (swap_row == k) return R(0);
            for (std::size_t c = 0; c < k; ++c) std::swap(a[p * k + c], a[swap_row * k + c]);
            negate = !negate;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                R v = a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j];
                a[i * k + j] = exact_quotient(v, prev);
            }
        }
        prev = a[p * k + p];
    }
    R det = a[(k - 1) * k + (k - 1)];
    return negate ? R(0) - det : det;
}

}  // namespace detail

/// Exact minor Delta_{I,J}(x). Rational entries are cleared row by row to
/// integers and the determinant is taken by Bareiss elimination.
inline Scalar minor(const Matrix& x, const MinorSpec& spec) {
    spec.validate(x.size());
    const std::size_t k = spec.order();
    if (k == 0) return Scalar(1);
    std::vector<mpz_class> a(k * k);
    mpz_class scale = 1;
    for (std::size_t r = 0; r < k; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < k; ++c) {
            const mpz_class d = x(spec.rows[r], spec.cols[c]).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t c = 0; c < k; ++c) {
            const Scalar& v = x(spec.rows[r], spec.cols[c]);
            a[r * k + c] = v.numerator() * (l / v.denominator());
        }
        scale *= l;
    }
    return Scalar(detail::bareiss_determinant(std::move(a), k), scale);
}

/// Minor over a generic exact ring (used for symbolic checks).
template <class T>
T minor(const BasicMatrix<T>& x, const MinorSpec& spec) {
    spec.validate(x.size());
    const std::size_t k = spec.order();
    std::vector<T> a;
    a.reserve(k * k);
    for (int r : spec.rows)
        for (int c : spec.cols) a.push_back(x(r, c));
    return detail::bareiss_determinant(std::move(a), k);
}

template <class T>
T determinant(const BasicMatrix<T>& x) {
    const int n = static_cast<int>(x.size());
    return minor(x, MinorSpec{interval(1, n), interval(1, n)});
}

namespace detail {
inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        subsets(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All k-subsets of [1,n] in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::subsets(n, k, 1, cur, out);
    return out;
}

/// Every minor of an n x n matrix, ordered by size; C(2n,n) - 1 entries.
inline std::vector<MinorSpec> all_minor_specs(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<MinorSpec> out;
    for (int k = 1; k <= n; ++k) {
        const auto sets = k_subsets(n, k);
        for (const auto& r : sets)
            for (const auto& c : sets) out.push_back({r, c});
    }
    return out;
}

/// The initial minor whose lower-right corner is entry (i,j).
inline MinorSpec initial_minor_at(int i, int j) {
    const int k = std::min(i, j);
    return {interval(i - k + 1, i), interval(j - k + 1, j)};
}

/// Solid minors containing row or column 1; one per matrix entry, row-major by corner.
inline std::vector<MinorSpec> initial_minor_specs(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<MinorSpec> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(initial_minor_at(i, j));
    return out;
}

inline std::vector<MinorSpec> solid_minor_specs(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<MinorSpec> out;
    for (int k = 1; k <= n; ++k)
        for (int r = 1; r + k - 1 <= n; ++r)
            for (int c = 1; c + k - 1 <= n; ++c) out.push_back({interval(r, r + k - 1), interval(c, c + k - 1)});
    return out;
}

inline bool is_solid(const MinorSpec& s) {
    auto consecutive = [](const std::vector<int>& v) {
        for (std::size_t k = 1; k < v.size(); ++k)
            if (v[k] != v[k - 1] + 1) return false;
        return true;
    };
    return consecutive(s.rows) && consecutive(s.cols);
}

inline bool is_initial(const MinorSpec& s) {
    return !s.rows.empty() && is_solid(s) && (s.rows.front() == 1 || s.cols.front() == 1);
}

/// Minor with the listed rows and columns deleted.
inline MinorSpec complement_spec(int n, const std::vector<int>& del_rows, const std::vector<int>& del_cols) {
    MinorSpec s;
    for (int k = 1; k <= n; ++k) {
        if (std::find(del_rows.begin(), del_rows.end(), k) == del_rows.end()) s.rows.push_back(k);
        if (std::find(del_cols.begin(), del_cols.end(), k) == del_cols.end()) s.cols.push_back(k);
    }
    return s;
}

/// Residual of the Desnanot-Jacobi (condensation) identity; zero for every matrix.
template <class T>
T desnanot_residual(const BasicMatrix<T>& x, int i, int i2, int j, int j2) {
    const int n = static_cast<int>(x.size());
    if (n < 2 || !(1 <= i && i < i2 && i2 <= n && 1 <= j && j < j2 && j2 <= n))
        throw InvalidArgument("Desnanot indices must satisfy 1 <= i < i' <= n and 1 <= j < j' <= n");
    auto del = [&](std::vector<int> r, std::vector<int> c) { return minor(x, complement_spec(n, r, c)); };
    return del({i2}, {j2}) * del({i}, {j}) - del({i2}, {j}) * del({i}, {j2}) - determinant(x) * del({i, i2}, {j, j2});
}

struct Ldu {
    Matrix lower;     ///< unit lower-triangular
    Matrix diagonal;  ///< invertible diagonal
    Matrix upper;     ///< unit upper-triangular
};

/// The leading principal minor of order k vanished.
struct LduFailure {
    std::size_t k;
};

/// Gaussian LDU decomposition without pivoting.
inline std::variant<Ldu, LduFailure> ldu_decompose(const Matrix& y) {
    const std::size_t n = y.size();
    Matrix u = y;
    Matrix l = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (u(k, k).is_zero()) return LduFailure{k};
        for (std::size_t i = k + 1; i <= n; ++i) {
            const Scalar f = u(i, k) / u(k, k);
            l(i, k) = f;
            if (f.is_zero()) continue;
            for (std::size_t j = k; j <= n; ++j) u(i, j) -= f * u(k, j);
        }
    }
    Matrix d(n, Scalar(0));
    for (std::size_t k = 1; k <= n; ++k) {
        d(k, k) = u(k, k);
        const Scalar inv = u(k, k).inverse();
        for (std::size_t j = k; j <= n; ++j) u(k, j) *= inv;
    }
    return Ldu{std::move(l), std::move(d), std::move(u)};
}

inline bool is_block_triangular(const Matrix& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1; i < n; ++i) {
        bool upper_right_zero = true;
        bool lower_left_zero = true;
        for (std::size_t k = 1; k <= i; ++k)
            for (std::size_t l = i + 1; l <= n; ++l) {
                if (!x(k, l).is_zero()) upper_right_zero = false;
                if (!x(l, k).is_zero()) lower_left_zero = false;
            }
        if (upper_right_zero || lower_left_zero) return true;
    }
    return false;
}

/// Exact inverse by Gauss-Jordan elimination.
inline Matrix inverse(const Matrix& x) {
    const std::size_t n = x.size();
    Matrix a = x;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 1; c <= n; ++c) {
        std::size_t p = c;
        while (p <= n && a(p, c).is_zero()) ++p;
        if (p > n) throw SingularMatrix("matrix is singular");
        if (p != c)
            for (std::size_t j = 1; j <= n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Scalar piv = a(c, c).inverse();
        for (std::size_t j = 1; j <= n; ++j) {
            a(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (std::size_t r = 1; r <= n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            const Scalar f = a(r, c);
            for (std::size_t j = 1; j <= n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Rank of the submatrix on the given (1-based) rows and columns.
inline std::size_t rank(const Matrix& x, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::vector<Scalar>> a;
    for (int r : rows) {
        std::vector<Scalar> row;
        for (int c : cols) row.push_back(x(r, c));
        a.push_back(std::move(row));
    }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols.size() && rk < a.size(); ++c) {
        std::size_t p = rk;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t r = rk + 1; r < a.size(); ++r) {
            if (a[r][c].is_zero()) continue;
            const Scalar f = a[r][c] / a[rk][c];
            for (std::size_t j = c; j < cols.size(); ++j) a[r][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

inline Matrix power(const Matrix& x, unsigned e) {
    Matrix result = Matrix::identity(x.size());
    Matrix base = x;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Permutation matrix with ones on the antidiagonal.
inline Matrix antidiagonal(std::size_t n) {
    Matrix w(n, Scalar(0));
    for (std::size_t i = 1; i <= n; ++i) w(i, n + 1 - i) = Scalar(1);
    return w;
}

}  // namespace totpos
