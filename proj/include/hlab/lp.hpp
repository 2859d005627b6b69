#pragma once

#include <optional>

#include "hlab/linalg.hpp"

namespace hlab {

/// Phase-one simplex with Bland's rule over the rationals: some x >= 0 with
/// a x = b, or nullopt when the system has no nonnegative solution.
std::optional<VecQ> find_nonnegative_solution(const MatQ& a, const VecQ& b);

}  // namespace hlab
