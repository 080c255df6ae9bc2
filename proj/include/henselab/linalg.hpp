#pragma once

#include <optional>
#include <vector>

#include "henselab/ratfunc.hpp"

namespace henselab {

using Matrix = std::vector<std::vector<RatFunc>>;

/// Exact determinant by Gaussian elimination over the rational-function field.
RatFunc determinant(const Matrix& m);

/// Solves m * x = rhs for square nonsingular m; nullopt when singular.
std::optional<std::vector<RatFunc>> solve_linear(Matrix m, std::vector<RatFunc> rhs);

/// A nonzero vector c with sum_i c_i * row_i = 0, or nullopt when the rows
/// are linearly independent.
std::optional<std::vector<RatFunc>> left_kernel_vector(const Matrix& m);

}  // namespace henselab
