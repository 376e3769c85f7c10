#pragma once

/**
 * @file smith.hpp
 * @brief Smith normal form of integer matrices and invariant-factor data.
 *
 * The diagonalization uses unimodular row and column operations only, so
 * U * A * V = D holds exactly with det(U), det(V) = +-1. Entries are
 * arbitrary-precision; intermediate growth is controlled by always
 * pivoting on the minimal nonzero absolute value.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symgenus/errors.hpp"
#include "symgenus/rational.hpp"

namespace symgenus {

using Matrix = std::vector<std::vector<Int>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// U * A * V = diag(diagonal), with d1 | d2 | ... and all di >= 0.
struct SmithResult {
    std::vector<Int> diagonal;
    Matrix row_transform;  // U, rows x rows
    Matrix col_transform;  // V, cols x cols
};

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline void add_row(Matrix& a, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += f * a[src][j];
}

inline void add_col(Matrix& a, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i][dst] += f * a[i][src];
}

inline void swap_cols(Matrix& a, std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
}

}  // namespace detail

inline SmithResult smith_decompose(Matrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    SmithResult res;
    res.row_transform = identity_matrix(rows);
    res.col_transform = identity_matrix(cols);
    Matrix& u = res.row_transform;
    Matrix& v = res.col_transform;

    const std::size_t rank_bound = std::min(rows, cols);
    for (std::size_t s = 0; s < rank_bound; ++s) {
        for (;;) {
            // Pivot: minimal nonzero |entry| in the trailing block.
            std::size_t pr = s, pc = s;
            bool found = false;
            Int best = 0;
            for (std::size_t i = s; i < rows; ++i) {
                for (std::size_t j = s; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    Int mag = detail::abs_int(a[i][j]);
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (!found) break;  // trailing block zero: done with this and later pivots

            if (pr != s) {
                std::swap(a[pr], a[s]);
                std::swap(u[pr], u[s]);
            }
            if (pc != s) {
                detail::swap_cols(a, pc, s);
                detail::swap_cols(v, pc, s);
            }

            bool dirty = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (a[i][s] == 0) continue;
                Int q = a[i][s] / a[s][s];
                detail::add_row(a, i, s, -q);
                detail::add_row(u, i, s, -q);
                if (a[i][s] != 0) dirty = true;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (a[s][j] == 0) continue;
                Int q = a[s][j] / a[s][s];
                detail::add_col(a, j, s, -q);
                detail::add_col(v, j, s, -q);
                if (a[s][j] != 0) dirty = true;
            }
            if (dirty) continue;  // remainders left; pick a smaller pivot

            // Row and column are clear. Enforce divisibility of the rest.
            bool divides_all = true;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i) {
                for (std::size_t j = s + 1; j < cols; ++j) {
                    if (a[i][j] % a[s][s] != 0) {
                        detail::add_row(a, s, i, 1);
                        detail::add_row(u, s, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }
        if (a[s][s] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[s][j] = -a[s][j];
            for (std::size_t j = 0; j < rows; ++j) u[s][j] = -u[s][j];
        }
    }

    res.diagonal.resize(rank_bound);
    for (std::size_t s = 0; s < rank_bound; ++s) res.diagonal[s] = a[s][s];
    return res;
}

/// Invariant factors d1 | d2 | ... (non-negative) of an integer matrix.
inline std::vector<Int> smith_normal_form(const Matrix& a) {
    return smith_decompose(a).diagonal;
}

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/ds with d1 | d2 | ... and each di >= 2.
struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }
    bool operator<(const AbelianInvariants& o) const {
        if (free_rank != o.free_rank) return free_rank < o.free_rank;
        return torsion < o.torsion;
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// Order of the torsion part.
    Int torsion_order() const {
        Int p = 1;
        for (const Int& d : torsion) p *= d;
        return p;
    }

    /// Exponent of the torsion part (largest invariant factor); 1 if none.
    Int exponent() const { return torsion.empty() ? Int(1) : torsion.back(); }

    std::string str() const {
        if (is_trivial()) return "C1";
        std::string out;
        for (const Int& d : torsion) {
            if (!out.empty()) out += " x ";
            out += "C" + d.str();
        }
        for (long long i = 0; i < free_rank; ++i) {
            if (!out.empty()) out += " x ";
            out += "Z";
        }
        return out;
    }
};

/// Cokernel Z^cols / rowspace(a), plus extra_free unconstrained generators.
/// An empty matrix means "no relations on no generators".
inline AbelianInvariants abelian_invariants_of(const Matrix& a, long long extra_free = 0) {
    AbelianInvariants inv;
    inv.free_rank = extra_free;
    if (a.empty() || a[0].empty()) return inv;
    std::vector<Int> d = smith_normal_form(a);
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (const Int& x : d)
        if (x != 0) ++rank;
    inv.free_rank += static_cast<long long>(cols - rank);
    for (const Int& x : d)
        if (x >= 2) inv.torsion.push_back(x);  // SNF already emits the chain in order
    return inv;
}

}  // namespace symgenus
