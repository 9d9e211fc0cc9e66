#pragma once

#include "verlinde/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

namespace verlinde {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

inline void swap_columns(IntMatrix &a, std::size_t i, std::size_t j) {
    for (auto &row : a)
        std::swap(row[i], row[j]);
}

// Position of the smallest nonzero |entry| in the trailing block starting at (t, t).
inline bool smallest_pivot(const IntMatrix &a, std::size_t t, std::size_t &pi, std::size_t &pj) {
    bool found = false;
    std::int64_t best = 0;
    for (std::size_t i = t; i < a.size(); ++i)
        for (std::size_t j = t; j < a[i].size(); ++j)
            if (a[i][j] != 0 && (!found || std::llabs(a[i][j]) < best)) {
                found = true;
                best = std::llabs(a[i][j]);
                pi = i;
                pj = j;
            }
    return found;
}

} // namespace detail

/// Invariant factors d_1 | d_2 | ... of an integer matrix (Smith normal form diagonal),
/// nonzero entries only. The input rows are lattice generators.
inline std::vector<std::int64_t> smith_invariants(IntMatrix a) {
    std::vector<std::int64_t> diag;
    if (a.empty())
        return diag;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    for (const auto &row : a)
        if (row.size() != cols)
            throw DomainError("smith_invariants: ragged matrix");

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pi = 0, pj = 0;
        if (!detail::smallest_pivot(a, t, pi, pj))
            break;
        std::swap(a[t], a[pi]);
        detail::swap_columns(a, t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const std::int64_t q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const std::int64_t q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    detail::swap_columns(a, t, j);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(std::llabs(a[t][t]));
    }
    return diag;
}

/// Index [Z^dim : L] of the lattice L spanned by the given rows. Throws when L has lower rank.
inline std::int64_t lattice_index(const IntMatrix &generators, std::size_t dim) {
    const auto diag = smith_invariants(generators);
    if (diag.size() != dim)
        throw DomainError("lattice_index: generators do not span a full-rank sublattice");
    return std::accumulate(diag.begin(), diag.end(), std::int64_t{1}, std::multiplies<>{});
}

} // namespace verlinde

namespace verlinde {

/// Integer basis of the lattice spanned by the rows of `generators` (row echelon form via
/// unimodular row operations). Zero rows are dropped.
inline IntMatrix lattice_basis(IntMatrix a) {
    if (a.empty())
        return a;
    const std::size_t cols = a.front().size();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
        for (;;) {
            std::size_t pivot = a.size();
            for (std::size_t i = lead; i < a.size(); ++i)
                if (a[i][c] != 0 && (pivot == a.size() || std::llabs(a[i][c]) < std::llabs(a[pivot][c])))
                    pivot = i;
            if (pivot == a.size())
                break;
            std::swap(a[lead], a[pivot]);
            bool cleared = true;
            for (std::size_t i = lead + 1; i < a.size(); ++i) {
                if (a[i][c] == 0)
                    continue;
                const std::int64_t q = a[i][c] / a[lead][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] -= q * a[lead][j];
                cleared = cleared && a[i][c] == 0;
            }
            if (cleared) {
                if (a[lead][c] < 0)
                    for (auto &x : a[lead])
                        x = -x;
                ++lead;
                break;
            }
        }
    }
    a.resize(lead);
    return a;
}

} // namespace verlinde
