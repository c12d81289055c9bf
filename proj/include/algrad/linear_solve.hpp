#pragma once

#include <optional>
#include <vector>

#include "algrad/scalar.hpp"

namespace algrad {

/// Solves rows * x = rhs for one solution x (free variables set to zero).
/// Exact mode eliminates exactly; approx mode uses partial pivoting and
/// treats pivots below 1e-10 times the largest entry as zero. Returns
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear_system(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs,
                                                       std::size_t unknowns, Domain domain);

}  // namespace algrad
