#pragma once

#include <span>
#include <vector>

#include "algrad/algebra.hpp"

namespace algrad {

/// Real Cayley-Dickson algebras of dimension 1, 2, 4, 8, 16 (R, C, H, O, S),
/// doubled as (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) with
/// conj(a,b) = (conj(a), -b). The unit is (1, 0, ..., 0).
AlgebraHandle make_cayley_dickson(int dim, Mode mode = Mode::Exact);

std::vector<Scalar> cayley_dickson_conjugate(std::span<const Scalar> x);
std::vector<Scalar> cayley_dickson_multiply(std::span<const Scalar> x, std::span<const Scalar> y);

class CayleyDicksonRule final : public ProductRule {
   public:
    std::vector<Scalar> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const override {
        return cayley_dickson_multiply(a, b);
    }
};

/// sqrt(sum x_i^2); exact coordinates are rounded once.
double euclidean_norm(const Element& x);

}  // namespace algrad
