#pragma once

#include <cstddef>

#include "lukas/path.hpp"
#include "lukas/series.hpp"
#include "lukas/types.hpp"

namespace lukas {

// Unbounded prefixes (left-to-right) and suffixes (right-to-left), as
// generating-function series in powers of L(z) and as direct binomial
// formulas. n = 0 follows the empty-path convention: only (k=0, any) is 1.

Series prefix_series(int k, EndKind kind, std::size_t order = default_order);
Count prefix_count(long n, long k, EndKind kind);

Series suffix_series(int k, EndKind kind, std::size_t order = default_order);
Count suffix_count(long n, long k, EndKind kind);

/// (L(z) - 1) / z: all right-to-left paths of each length, any end height.
Series suffix_total_series(std::size_t order = default_order);

}  // namespace lukas
