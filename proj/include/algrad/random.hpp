#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algrad/algebra.hpp"
#include "algrad/matrix.hpp"

namespace algrad {

/// Seeded generator of small exact test data.
///
/// Rationals have numerator and denominator uniform in [-9, 9] (denominator
/// nonzero); complex values draw the imaginary part the same way. Approx
/// mode rounds the same rationals to binary64.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    int uniform_int(int lo, int hi);
    mpq_class small_rational();
    Scalar scalar(Domain d);
    Scalar nonzero_scalar(Domain d);
    MatrixElement matrix(int n, Domain d);
    /// Random strictly upper-triangular matrix (nilpotent in the standard product).
    MatrixElement strictly_upper_matrix(int n, Domain d);
    Element element(const AlgebraHandle& alg);
    std::vector<std::size_t> permutation(std::size_t n);

    std::mt19937_64& engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
};

}  // namespace algrad
