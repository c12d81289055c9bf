#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "algrad/scalar.hpp"

namespace algrad {

/// Dense univariate polynomial, coefficients stored low-to-high.
///
/// Exact-zero leading coefficients are trimmed on construction, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
   public:
    explicit Polynomial(Domain d) : domain_(d) {}
    Polynomial(std::vector<Scalar> coeffs, Domain d);

    static Polynomial constant(const Scalar& c);
    static Polynomial monomial(int k, Domain d);
    /// prod (t - r) over the given roots.
    static Polynomial from_roots(const std::vector<Scalar>& roots, Domain d);

    Domain domain() const { return domain_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    /// True for t^m, m >= 1.
    bool is_monomial() const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(int i) const;
    const Scalar& leading() const;

    Polynomial monic() const;
    Polynomial derivative() const;
    Polynomial cast(Domain d) const;

    Scalar operator()(const Scalar& x) const;
    std::complex<long double> evaluate(std::complex<long double> x) const;

    std::string to_string(const std::string& var = "t") const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.domain_ == b.domain_ && a.coeffs_ == b.coeffs_;
    }

   private:
    std::vector<Scalar> coeffs_;
    Domain domain_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division; throws DomainError when dividing by the zero polynomial.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd. Exact mode only.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Whether p divides q. Exact mode: zero remainder. Approx mode: remainder
/// coefficients at most 1e-9 times max(1, max |q_k|).
bool poly_divides(const Polynomial& p, const Polynomial& q);

/// Yun square-free decomposition of a monic polynomial: pairs (factor, multiplicity)
/// with pairwise coprime square-free monic factors. Exact mode only.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace algrad
