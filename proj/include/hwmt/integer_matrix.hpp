#ifndef HWMT_INTEGER_MATRIX_HPP
#define HWMT_INTEGER_MATRIX_HPP

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace hwmt {

using IntVector = std::vector<std::int64_t>;
/// Row-major integer matrix; every row has the same length.
using IntMatrix = std::vector<IntVector>;

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline std::int64_t content(const IntVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

inline IntMatrix transpose(const IntMatrix& a, std::size_t ncols_if_empty = 0) {
    if (a.empty()) return IntMatrix(ncols_if_empty);
    IntMatrix t(a[0].size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

namespace detail {

inline void axpy_row(IntVector& target, std::int64_t q, const IntVector& source) {
    if (q == 0) return;
    for (std::size_t k = 0; k < target.size(); ++k)
        target[k] = checked_sub(target[k], checked_mul(q, source[k]));
}

} // namespace detail

/// Unimodular row reduction using only the first `ncols` columns for pivots.
/// On return rows [0, rank) are in Hermite normal form on those columns (positive
/// pivots, entries above each pivot reduced into [0, pivot)), and rows [rank, m)
/// vanish on the first `ncols` columns. Returns the rank.
inline std::size_t hermite_reduce(IntMatrix& a, std::size_t ncols) {
    const std::size_t m = a.size();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < ncols && r < m; ++c) {
        // Euclid on column c among rows r..m-1.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a[i][c] != 0 && (best == m || std::llabs(a[i][c]) < std::llabs(a[best][c]))) best = i;
            if (best == m) break;
            std::swap(a[r], a[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                detail::axpy_row(a[i], a[i][c] / a[r][c], a[r]);
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (auto& x : a[r]) x = -x;
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t c = pivots[i];
        for (std::size_t j = 0; j < i; ++j) detail::axpy_row(a[j], floor_div(a[j][c], a[i][c]), a[i]);
    }
    return r;
}

/// Hermite normal form of the row lattice of `a`, zero rows dropped. Two integer
/// matrices span the same row lattice iff their Hermite forms are equal.
inline IntMatrix hermite_normal_form(IntMatrix a) {
    if (a.empty()) return a;
    const std::size_t n = a[0].size();
    const std::size_t r = hermite_reduce(a, n);
    a.resize(r);
    return a;
}

/// Z-basis, in Hermite normal form, of {x in Z^k : b x = 0} where b is d x k.
inline IntMatrix integer_kernel(const IntMatrix& b, std::size_t k) {
    const std::size_t d = b.size();
    // Rows of [b^T | I_k]; reduce on the first d columns.
    IntMatrix aug(k, IntVector(d + k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = b[j][i];
        aug[i][d + i] = 1;
    }
    const std::size_t r = hermite_reduce(aug, d);
    IntMatrix basis;
    for (std::size_t i = r; i < k; ++i) basis.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(d), aug[i].end());
    return hermite_normal_form(std::move(basis));
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix to_rational(const IntMatrix& a) {
    RationalMatrix r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto x : a[i]) r[i].emplace_back(x);
    return r;
}

/// Rank over Q.
inline std::size_t rank(RationalMatrix a) {
    std::size_t r = 0;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

/// Inverse of a square matrix over Q, or nullopt if singular.
inline std::optional<RationalMatrix> inverse(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Rational s = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= s;
            inv[c][k] /= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[i][k] -= f * a[c][k];
                inv[i][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

inline Rational determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[c], a[piv]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
        }
    }
    return det;
}

} // namespace hwmt

#endif
