#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "algrad/algebra.hpp"
#include "algrad/matrix.hpp"
#include "algrad/polynomial.hpp"

namespace algrad {

/// The products on n x n matrices.
///
/// Star1n and StarN1 are the twisted products A * B = (A'B')' where the prime
/// map negates the (1,n) entry, respectively the (n,1) entry (1-based).
enum class ProductKind { Standard, Hadamard, Jordan, Star1n, StarN1 };

std::string_view to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);
bool is_star(ProductKind kind);

MatrixElement hadamard_product(const MatrixElement& a, const MatrixElement& b);
/// (AB + BA) / 2
MatrixElement jordan_product(const MatrixElement& a, const MatrixElement& b);
/// Negates the corner entry designated by a star kind; DomainError otherwise.
MatrixElement prime_map(const MatrixElement& a, ProductKind kind);
/// (A'B')'
MatrixElement star_product(const MatrixElement& a, const MatrixElement& b, ProductKind kind);
MatrixElement matrix_product(const MatrixElement& a, const MatrixElement& b, ProductKind kind);

class MatrixProductRule final : public ProductRule {
   public:
    MatrixProductRule(int n, ProductKind kind, Domain domain) : n_(n), kind_(kind), domain_(domain) {}
    std::vector<Scalar> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const override;
    int n() const { return n_; }
    ProductKind kind() const { return kind_; }

   private:
    int n_;
    ProductKind kind_;
    Domain domain_;
};

/// n x n matrices (row-major coordinates) under the given product. The unit
/// is E (all ones) for Hadamard and I otherwise. Requires n >= 2.
AlgebraHandle make_matrix_algebra(int n, Field field, ProductKind kind, Mode mode = Mode::Exact);

struct MatrixAlgebraInfo {
    int n;
    ProductKind kind;
};
/// Present when alg was built by make_matrix_algebra.
std::optional<MatrixAlgebraInfo> matrix_algebra_info(const AlgebraHandle& alg);

// Closed-form oracles. None of these touch the generic minimal-polynomial path.

/// max |a_ij|
double hadamard_radius_oracle(const MatrixElement& a);
/// prod (t - z) over the distinct entries z of A. Exact mode only.
Polynomial hadamard_minpoly_oracle(const MatrixElement& a);
/// Entrywise k-th powers.
MatrixElement hadamard_power_oracle(const MatrixElement& a, int k);
/// rho(A')
double star_radius_oracle(const MatrixElement& a, ProductKind kind);
/// ((A')^k)' with the inner power taken in the standard algebra.
MatrixElement star_power_oracle(const MatrixElement& a, int k, ProductKind kind);

// Explicit example matrices.

/// Zero except a11 = 1, a1n = -i, an1 = i, ann = -1. Complex field only.
MatrixElement example_star_nilpotent(int n, Mode mode = Mode::Exact);
/// Zero except a1n = an1 = 1.
MatrixElement example_positive_negative_square(int n, Domain domain = {});
/// A = e12 + O, B = e21 + O.
std::pair<MatrixElement, MatrixElement> example_jordan_nonalternative(int n, Domain domain = {});

/// Nonzero with every entry real and >= 0.
bool is_positive_matrix(const MatrixElement& a);
/// Nonzero with every entry real and <= 0.
bool is_negative_matrix(const MatrixElement& a);

}  // namespace algrad
