#include "credence/linear_feasibility.hpp"

#include "credence/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace credence {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// ---------------------------------------------------------------------------
// Small-rational scalar: int64 numerator/denominator with eager reduction and
// overflow detection. Desk-scale systems stay entirely within it; anything
// larger falls back to cpp_rational. Both arithmetics are exact, so pivot
// choices (and therefore results) are identical on either path.
// ---------------------------------------------------------------------------

struct SmallOverflow {};

using int128 = __int128;

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Magnitude cap keeping products of two values clear of int128 range.
constexpr std::int64_t kSmallCap = std::int64_t(1) << 62;

struct SmallRat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    SmallRat() = default;
    SmallRat(int v) : num(v) {} // NOLINT: implicit by design, mirrors Rational

    static SmallRat make(int128 n, int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > kSmallCap || n < -kSmallCap || d > kSmallCap) throw SmallOverflow{};
        SmallRat r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }

    friend SmallRat operator+(const SmallRat& a, const SmallRat& b) {
        return make(int128(a.num) * b.den + int128(b.num) * a.den, int128(a.den) * b.den);
    }
    friend SmallRat operator-(const SmallRat& a, const SmallRat& b) {
        return make(int128(a.num) * b.den - int128(b.num) * a.den, int128(a.den) * b.den);
    }
    friend SmallRat operator*(const SmallRat& a, const SmallRat& b) {
        return make(int128(a.num) * b.num, int128(a.den) * b.den);
    }
    friend SmallRat operator/(const SmallRat& a, const SmallRat& b) {
        if (b.num == 0) throw std::logic_error("small-rational division by zero");
        return make(int128(a.num) * b.den, int128(a.den) * b.num);
    }
    SmallRat operator-() const {
        SmallRat r;
        r.num = -num;
        r.den = den;
        return r;
    }
    SmallRat& operator+=(const SmallRat& o) { return *this = *this + o; }
    SmallRat& operator-=(const SmallRat& o) { return *this = *this - o; }
    SmallRat& operator/=(const SmallRat& o) { return *this = *this / o; }

    friend bool operator==(const SmallRat& a, const SmallRat& b) {
        return a.num == b.num && a.den == b.den; // canonical forms
    }
    friend bool operator!=(const SmallRat& a, const SmallRat& b) { return !(a == b); }
    friend bool operator<(const SmallRat& a, const SmallRat& b) {
        return int128(a.num) * b.den < int128(b.num) * a.den;
    }
    friend bool operator>(const SmallRat& a, const SmallRat& b) { return b < a; }
    friend bool operator<=(const SmallRat& a, const SmallRat& b) { return !(b < a); }
    friend bool operator>=(const SmallRat& a, const SmallRat& b) { return !(a < b); }
};

SmallRat to_small(const Rational& r) {
    const Integer& num = numerator(r);
    const Integer& den = denominator(r);
    if (num > kSmallCap || num < -kSmallCap || den > kSmallCap) throw SmallOverflow{};
    SmallRat s;
    s.num = num.convert_to<std::int64_t>();
    s.den = den.convert_to<std::int64_t>();
    return s;
}

Rational from_small(const SmallRat& s) { return {s.num, s.den}; }

const Rational& from_scalar(const Rational& r) { return r; }
Rational from_scalar(const SmallRat& s) { return from_small(s); }

// ---------------------------------------------------------------------------
// The solver, generic over the exact scalar.
// ---------------------------------------------------------------------------

template <class T>
struct TypedResult {
    bool feasible = false;
    std::vector<T> point;
    std::vector<T> farkas;
};

/// Phase-one simplex on {A x = b, x >= 0} with artificial variables and
/// Bland's anti-cycling rule. Returns a basic feasible point or the dual
/// vector of the optimal phase-one basis as a Farkas certificate.
template <class T>
TypedResult<T> phase_one_simplex(const std::vector<std::vector<T>>& A, const std::vector<T>& b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    const T zero(0);
    const T one(1);

    // Row signs making the right-hand side nonnegative.
    std::vector<bool> flipped(m, false);
    std::vector<std::vector<T>> tab(m, std::vector<T>(n + m, zero));
    std::vector<T> rhs(m, zero);
    for (std::size_t i = 0; i < m; ++i) {
        flipped[i] = b[i] < zero;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = flipped[i] ? -A[i][j] : A[i][j];
        tab[i][n + i] = one;
        rhs[i] = flipped[i] ? -b[i] : b[i];
    }

    // Reduced costs for min Σ artificials, priced out against the artificial basis.
    std::vector<T> red(n + m, zero);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) red[j] -= tab[i][j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        std::size_t entering = npos;
        for (std::size_t j = 0; j < n + m; ++j)
            if (red[j] < zero) {
                entering = j;
                break;
            }
        if (entering == npos) break;

        std::size_t leaving = npos;
        T best_ratio = zero;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(tab[i][entering] > zero)) continue;
            const T ratio = rhs[i] / tab[i][entering];
            if (leaving == npos || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == npos)
            throw std::logic_error("phase-one objective unbounded"); // cannot happen

        const T pivot = tab[leaving][entering];
        if (pivot != one) {
            for (auto& v : tab[leaving])
                if (v != zero) v /= pivot;
            rhs[leaving] /= pivot;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leaving) continue;
            const T factor = tab[i][entering];
            if (factor == zero) continue;
            for (std::size_t j = 0; j < n + m; ++j)
                if (tab[leaving][j] != zero) tab[i][j] -= factor * tab[leaving][j];
            rhs[i] -= factor * rhs[leaving];
        }
        const T red_factor = red[entering];
        if (red_factor != zero) {
            for (std::size_t j = 0; j < n + m; ++j)
                if (tab[leaving][j] != zero) red[j] -= red_factor * tab[leaving][j];
        }
        basis[leaving] = entering;
    }

    T objective = zero;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += rhs[i];

    TypedResult<T> result;
    if (objective == zero) {
        result.feasible = true;
        result.point.assign(n, zero);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) result.point[basis[i]] = rhs[i];
    } else {
        result.feasible = false;
        result.farkas.assign(m, zero);
        // Artificial column k prices out to 1 - y_k; undo the row flips.
        for (std::size_t k = 0; k < m; ++k) {
            const T y = one - red[n + k];
            result.farkas[k] = flipped[k] ? -y : y;
        }
    }
    return result;
}

template <class T>
TypedResult<T> solve_typed(const std::vector<std::vector<T>>& A, const std::vector<T>& b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    const T zero(0);
    const T one(1);
    if (m == 0) return {true, std::vector<T>(n, zero), {}};

    // Gauss-Jordan with tracked row combinations: T·A_orig = W, T·b_orig = rhs.
    std::vector<std::vector<T>> W = A;
    std::vector<T> rhs = b;
    std::vector<std::vector<T>> track(m, std::vector<T>(m, zero));
    for (std::size_t i = 0; i < m; ++i) track[i][i] = one;

    std::vector<bool> row_used(m, false), col_used(n, false);
    std::vector<std::size_t> pivot_row_of_col(n, npos);

    for (;;) {
        // Prefer the sparsest unused row; singleton assessments resolve in O(1).
        std::size_t best_row = npos, best_count = npos;
        for (std::size_t i = 0; i < m; ++i) {
            if (row_used[i]) continue;
            std::size_t count = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (!col_used[j] && W[i][j] != zero) ++count;
            if (count > 0 && count < best_count) {
                best_count = count;
                best_row = i;
            }
        }
        if (best_row == npos) break;

        std::size_t pivot_col = npos;
        for (std::size_t j = 0; j < n; ++j)
            if (!col_used[j] && W[best_row][j] != zero) {
                pivot_col = j;
                break;
            }

        const T pivot = W[best_row][pivot_col];
        if (pivot != one) {
            for (auto& v : W[best_row])
                if (v != zero) v /= pivot;
            for (auto& v : track[best_row])
                if (v != zero) v /= pivot;
            if (rhs[best_row] != zero) rhs[best_row] /= pivot;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == best_row) continue;
            const T factor = W[i][pivot_col];
            if (factor == zero) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (W[best_row][j] != zero) W[i][j] -= factor * W[best_row][j];
            for (std::size_t j = 0; j < m; ++j)
                if (track[best_row][j] != zero) track[i][j] -= factor * track[best_row][j];
            if (rhs[best_row] != zero) rhs[i] -= factor * rhs[best_row];
        }
        row_used[best_row] = true;
        col_used[pivot_col] = true;
        pivot_row_of_col[pivot_col] = best_row;
    }

    // Unused rows are now all-zero in W; a nonzero right-hand side there is a
    // contradiction and its tracked combination is the certificate.
    for (std::size_t i = 0; i < m; ++i) {
        if (row_used[i]) continue;
        if (rhs[i] != zero) {
            TypedResult<T> result;
            result.feasible = false;
            result.farkas.reserve(m);
            const bool positive = rhs[i] > zero;
            for (std::size_t j = 0; j < m; ++j)
                result.farkas.push_back(positive ? track[i][j] : -track[i][j]);
            return result;
        }
    }

    bool determined = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!col_used[j]) determined = false;

    if (determined) {
        std::vector<T> x;
        x.reserve(n);
        for (std::size_t j = 0; j < n; ++j) x.push_back(rhs[pivot_row_of_col[j]]);
        for (std::size_t j = 0; j < n; ++j) {
            if (!(x[j] < zero)) continue;
            // Pivot row reads x_j = negative constant; negate it for Farkas.
            TypedResult<T> result;
            result.feasible = false;
            result.farkas.reserve(m);
            const auto& combo = track[pivot_row_of_col[j]];
            for (std::size_t k = 0; k < m; ++k) result.farkas.push_back(-combo[k]);
            return result;
        }
        return {true, std::move(x), {}};
    }

    // Consistent but underdetermined: decide nonnegativity by simplex.
    return phase_one_simplex(A, b);
}

template <class T>
FeasibilityResult run_and_convert(const std::vector<std::vector<T>>& A, const std::vector<T>& b) {
    TypedResult<T> typed = solve_typed(A, b);
    FeasibilityResult result;
    result.feasible = typed.feasible;
    result.point.reserve(typed.point.size());
    for (const auto& v : typed.point) result.point.push_back(from_scalar(v));
    result.farkas.reserve(typed.farkas.size());
    for (const auto& v : typed.farkas) result.farkas.push_back(from_scalar(v));
    return result;
}

} // namespace

FeasibilityResult solve_nonnegative_system(const std::vector<std::vector<Rational>>& A,
                                           const std::vector<Rational>& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw StructuralError("matrix and right-hand side sizes differ");
    const std::size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != n) throw StructuralError("ragged constraint matrix");

    try {
        std::vector<std::vector<SmallRat>> sa(m, std::vector<SmallRat>(n));
        std::vector<SmallRat> sb(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) sa[i][j] = to_small(A[i][j]);
            sb[i] = to_small(b[i]);
        }
        return run_and_convert(sa, sb);
    } catch (const SmallOverflow&) {
        return run_and_convert(A, b); // exact fallback, identical pivot choices
    }
}

} // namespace credence
