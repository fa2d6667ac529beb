#pragma once

#include "tropsa/matrix.hpp"

#include <optional>

namespace tropsa::detail {

// Finds z >= 0 with A z = b, or nullopt if none exists.
// Dense exact tableau, phase one only, Bland's rule.
std::optional<RationalVector> nonnegative_solution(const RationalMatrix& a, const RationalVector& b);

} // namespace tropsa::detail
