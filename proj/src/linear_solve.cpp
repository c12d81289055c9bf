#include "algrad/linear_solve.hpp"

#include <algorithm>

#include "algrad/errors.hpp"

namespace algrad {

std::optional<std::vector<Scalar>> solve_linear_system(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs,
                                                       std::size_t unknowns, Domain domain) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw ShapeError("right-hand side length does not match row count");
    for (const auto& r : rows)
        if (r.size() != unknowns) throw ShapeError("row length does not match unknown count");

    const bool exact = domain.mode == Mode::Exact;
    double scale = 0.0;
    if (!exact) {
        for (const auto& r : rows)
            for (const auto& x : r) scale = std::max(scale, x.magnitude());
        for (const auto& x : rhs) scale = std::max(scale, x.magnitude());
    }
    const double tol = 1e-10 * std::max(scale, 1e-300);
    auto negligible = [&](const Scalar& s) { return exact ? s.is_zero() : s.magnitude() <= tol; };

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < m; ++c) {
        std::size_t best = m;
        double best_mag = 0.0;
        for (std::size_t i = r; i < m; ++i) {
            if (negligible(rows[i][c])) continue;
            if (exact) {
                best = i;
                break;
            }
            double mag = rows[i][c].magnitude();
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (best == m) continue;
        std::swap(rows[r], rows[best]);
        std::swap(rhs[r], rhs[best]);
        Scalar inv = rows[r][c].inverse();
        for (std::size_t j = c; j < unknowns; ++j) rows[r][j] = rows[r][j] * inv;
        rhs[r] = rhs[r] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j < unknowns; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
            rhs[i] = rhs[i] - f * rhs[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!negligible(rhs[i])) return std::nullopt;

    std::vector<Scalar> x(unknowns, Scalar::zero(domain));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rhs[i];
    return x;
}

}  // namespace algrad
