#pragma once

// Dense Gaussian elimination over a FieldSpec, used by the divisibility and
// normality solvers.

#include <optional>
#include <vector>

#include "qweyl/field.hpp"

namespace qweyl::linalg {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

// Some z with A z = rhs (free variables set to zero), or nullopt.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> rhs, const FieldSpec& field,
                                         std::size_t cols);

// Basis of { z : A z = 0 }.
std::vector<std::vector<Scalar>> nullspace(Matrix a, const FieldSpec& field, std::size_t cols);

}  // namespace qweyl::linalg
