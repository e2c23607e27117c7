#pragma once

#include <optional>

#include "distspec/distance.hpp"

namespace distspec {

/// Rank over the rationals by fraction-free (Bareiss) elimination in 128-bit
/// integers. Returns nullopt if an intermediate value would overflow.
std::optional<int> exact_rank(const IntMatrix& m);

/// n - rank, or nullopt when the rank could not be certified.
std::optional<int> exact_nullity(const IntMatrix& m);

}  // namespace distspec
