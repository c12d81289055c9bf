#pragma once

#include <vector>

#include "algrad/algebra.hpp"
#include "algrad/polynomial.hpp"

namespace algrad {

/// Relative residual below which an approx-mode ladder vector counts as dependent.
inline constexpr double kLadderTolerance = 1e-9;

struct MinimalPolynomialResult {
    Polynomial polynomial;
    /// Residual of each ladder vector after projection onto the earlier ones,
    /// relative to the largest ladder-vector norm. Entries before the last are
    /// the independence certificate (all positive); the last is the dependency.
    std::vector<double> relative_residuals;
    /// Approx mode only: some rank decision fell in [tol/10, tol*10].
    bool ill_conditioned = false;
};

/// Minimal polynomial via the ladder unit, a, a^2, ... and incremental
/// linear-dependence detection.
///
/// Unital algebras start the ladder at the unit. Non-unital algebras start it
/// at a, so the result has zero constant term. The zero element yields t.
MinimalPolynomialResult minimal_polynomial_with_certificate(const AlgebraHandle& alg, const Element& a);

Polynomial minimal_polynomial(const AlgebraHandle& alg, const Element& a);

/// p(a) = sum_k c_k a^k; the constant term scales the unit.
Element evaluate_at_element(const AlgebraHandle& alg, const Polynomial& p, const Element& a);

}  // namespace algrad
