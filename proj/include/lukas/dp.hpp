#pragma once

#include <vector>

#include "lukas/path.hpp"
#include "lukas/types.hpp"

namespace lukas {

/// Counts paths by a length-indexed table over (height, last-step class).
/// Each step costs O(max height) big-integer additions using prefix/suffix
/// sums for the long up (left-to-right) or down (right-to-left) steps.
/// Throws Errc::infinite_family like the oracle.
Count dp_count(const PathQuery& q);

/// dp_count for lengths 0..order-1 with the other fields of `q`.
std::vector<Count> dp_counts(PathQuery q, int order);

}  // namespace lukas
