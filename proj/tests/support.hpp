#pragma once

// Test-side oracles. Nothing here calls the minimal-polynomial ladder, the
// root finder or the trace recurrence.

#include <algorithm>
#include <vector>

#include "algrad/matrix.hpp"
#include "algrad/polynomial.hpp"
#include "algrad/scalar.hpp"

namespace algrad::oracle {

/// Determinant by fraction-exact Gaussian elimination.
inline Scalar exact_det(std::vector<std::vector<Scalar>> m, Domain d) {
    const std::size_t n = m.size();
    Scalar det = Scalar::one(d);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Scalar::zero(d);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Scalar inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Scalar f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Rank of a list of coordinate vectors, exact.
inline std::size_t exact_rank(std::vector<std::vector<Scalar>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Scalar inv = rows[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            Scalar f = rows[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Coefficients (low-to-high) of prod (t - r).
inline std::vector<Scalar> linear_factor_product(const std::vector<Scalar>& roots, Domain d) {
    std::vector<Scalar> c{Scalar::one(d)};
    for (const auto& r : roots) {
        std::vector<Scalar> next(c.size() + 1, Scalar::zero(d));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

/// det(tI - A) recovered from its values at t = 0..n by Newton interpolation.
inline std::vector<Scalar> charpoly_by_interpolation(const MatrixElement& a) {
    const int n = a.n();
    const Domain d = a.domain();
    std::vector<Scalar> xs, ys;
    for (int x = 0; x <= n; ++x) {
        std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(d)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? Scalar::from_int(x, d) : Scalar::zero(d)) - a(i, j);
        xs.push_back(Scalar::from_int(x, d));
        ys.push_back(exact_det(std::move(m), d));
    }
    // Divided differences in place.
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    // Expand the Newton form.
    std::vector<Scalar> c{ys[n]};
    for (int i = n - 1; i >= 0; --i) {
        std::vector<Scalar> next(c.size() + 1, Scalar::zero(d));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= xs[i] * c[k];
        }
        next[0] += ys[i];
        c = std::move(next);
    }
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

inline std::vector<Scalar> distinct_entries(const MatrixElement& a) {
    std::vector<Scalar> out;
    for (const auto& x : a.entries())
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

inline Scalar q(long num, long den = 1, Domain d = {}) { return Scalar::from_rational(num, den, d); }

inline Scalar gauss(long re, long im) {
    return Scalar::from_parts(mpq_class(re), mpq_class(im), {Field::Complex, Mode::Exact});
}

}  // namespace algrad::oracle
