#pragma once

// Brute-force feasibility oracle for {A x = b, x >= 0}, independent of the
// library's solver. It enumerates basic solutions: for each column subset S it
// solves A_S x_S = b (remaining variables pinned to zero) with a plain dense
// Gaussian elimination and accepts when a unique, consistent, nonnegative
// solution appears. Complete whenever the feasible region is bounded (always
// true for coherence systems, whose first row forces Σ x = 1): a nonempty
// polytope has a vertex, and a vertex is exactly such a basic solution.

#include "credence/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace credence::testing {

struct GaussOutcome {
    bool consistent = false;
    bool unique = false;
    std::vector<Rational> solution; // meaningful when unique
};

/// Plain Gauss-Jordan on [A|b] for the variables listed in `cols`.
inline GaussOutcome gauss_solve(const std::vector<std::vector<Rational>>& A,
                                const std::vector<Rational>& b,
                                const std::vector<std::size_t>& cols) {
    const std::size_t m = A.size();
    const std::size_t k = cols.size();
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) w[i][j] = A[i][cols[j]];
        w[i][k] = b[i];
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_row_of(k);
    for (std::size_t col = 0; col < k && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && w[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(w[pivot], w[rank]);
        const Rational head = w[rank][col];
        for (auto& v : w[rank]) v /= head;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank) continue;
            const Rational factor = w[i][col];
            if (factor == 0) continue;
            for (std::size_t j = col; j <= k; ++j) w[i][j] -= factor * w[rank][j];
        }
        pivot_row_of[col] = rank;
        ++rank;
    }

    GaussOutcome out;
    for (std::size_t i = rank; i < m; ++i)
        if (w[i][k] != 0) return out; // 0 = nonzero contradiction
    out.consistent = true;
    if (rank < k) return out; // free variables remain
    out.unique = true;
    out.solution.resize(k);
    for (std::size_t col = 0; col < k; ++col) out.solution[col] = w[pivot_row_of[col]][k];
    return out;
}

/// Feasibility of {A x = b, x >= 0} for bounded feasible regions.
inline bool oracle_feasible(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b) {
    const std::size_t n = A.empty() ? 0 : A[0].size();

    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    const GaussOutcome full = gauss_solve(A, b, all);
    if (!full.consistent) return false; // every pinned subsystem inherits the contradiction
    if (full.unique) {
        for (const auto& v : full.solution)
            if (v < 0) return false;
        return true;
    }

    // Underdetermined: enumerate proper column subsets for a basic solution.
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t{1} << j)) cols.push_back(j);
        const GaussOutcome outcome = gauss_solve(A, b, cols);
        if (!outcome.consistent || !outcome.unique) continue;
        bool nonneg = true;
        for (const auto& v : outcome.solution)
            if (v < 0) nonneg = false;
        if (nonneg) return true;
    }
    return false;
}

} // namespace credence::testing
