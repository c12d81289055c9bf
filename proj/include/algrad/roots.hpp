#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algrad/algebra.hpp"
#include "algrad/matrix.hpp"
#include "algrad/polynomial.hpp"

namespace algrad {

inline constexpr int kMaxRootSweeps = 500;
inline constexpr double kRootUpdateTolerance = 1e-13;
/// Residual bound factor: |p(root)| <= kRootResidualFactor * max(1, max |c_k|).
inline constexpr double kRootResidualFactor = 1e-10;

/// All deg(p) complex roots, with multiplicity.
struct RootSet {
    std::vector<std::complex<double>> roots;
    /// |p(root)| evaluated in extended precision; 0 for exactly certified roots.
    std::vector<double> residuals;
    /// Exact value (complex exact domain) when a root was certified exactly.
    std::vector<std::optional<Scalar>> exact;
    /// Simultaneous-iteration sweeps used (summed over factors).
    int sweeps = 0;

    std::size_t size() const { return roots.size(); }
    /// Modulus of root i; exact roots are rounded once.
    double modulus(std::size_t i) const;
};

class RootFindingError : public std::runtime_error {
   public:
    RootFindingError(const std::string& what, RootSet best) : std::runtime_error(what), best_(std::move(best)) {}
    const RootSet& best_iterate() const { return best_; }

   private:
    RootSet best_;
};

/// Roots by Durand-Kerner simultaneous iteration from a perturbed circle.
///
/// Exact-mode polynomials are first split into zero roots and a square-free
/// decomposition; each approximate root is then tested for an exactly
/// representable (Gaussian) rational value, which is verified and deflated
/// exactly.
RootSet poly_roots(const Polynomial& p);

struct RadiusReport {
    Polynomial minpoly;
    RootSet roots;
    double radius = 0.0;
    std::complex<double> argmax_root;
    std::string algebra_name;
    bool ill_conditioned = false;
};

/// Index of the modulus-maximizing root; ties go to the greatest real part,
/// then the greatest imaginary part.
std::size_t argmax_root_index(const RootSet& roots);

/// r(a) = max |root of the minimal polynomial of a|.
RadiusReport radius(const AlgebraHandle& alg, const Element& a);

/// det(tI - A) by the trace recurrence M_k = A M_(k-1) + c_(n-k+1) I,
/// c_(n-k) = -tr(A M_k)/k. Exact in exact mode.
Polynomial characteristic_polynomial(const MatrixElement& a);

/// Max eigenvalue modulus via the characteristic polynomial; never touches
/// the minimal-polynomial ladder.
double spectral_radius(const MatrixElement& a);

}  // namespace algrad
