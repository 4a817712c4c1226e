#pragma once

#include <cstdint>
#include <vector>

#include "lukas/path.hpp"
#include "lukas/types.hpp"

namespace lukas {

inline constexpr int default_oracle_cap = 10;

/// Brute-force oracle: generates every candidate step sequence explicitly
/// and filters the complete paths with validate / is_alternate / max_height.
/// Only the up-step sizes are pruned, to sizes from which the target (end
/// height or bound) is still reachable.
///
/// Throws Errc::oracle_cap_exceeded when q.n > cap, Errc::infinite_family
/// for left-to-right queries with neither end height nor bound.
Count enumerate_count(const PathQuery& q, int cap = default_oracle_cap);

/// Every path of one length and orientation with end height <= max_end,
/// enumerated once and tallied by (end height, last step, max height,
/// alternate). Answers many oracle queries from a single enumeration.
class OracleTally {
 public:
  OracleTally(int n, Orientation o, int max_end, int cap = default_oracle_cap);

  int n() const { return n_; }
  Orientation orientation() const { return orientation_; }

  /// Same answer as enumerate_count(q) for q.n == n(), q.orientation ==
  /// orientation(). Throws Errc::invalid_argument for queries outside the
  /// enumerated range.
  Count count(const PathQuery& q) const;

 private:
  std::size_t slot(int end, int last, int height, bool alt) const;

  int n_;
  Orientation orientation_;
  int max_end_;
  int max_height_;
  std::vector<std::uint64_t> cells_;
};

}  // namespace lukas
