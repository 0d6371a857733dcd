#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace polyideal {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Exact phase-one simplex with Bland's rule: a point x >= 0 with A x >= b, or nullopt.
std::optional<std::vector<mpq_class>> feasible_point(const RationalMatrix& A,
                                                     const std::vector<mpq_class>& b);

}  // namespace polyideal
