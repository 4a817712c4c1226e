#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lukas/enumerate.hpp"
#include "lukas/path.hpp"
#include "lukas/types.hpp"

namespace lukas {

enum class Engine { oracle, dp, closed, gf };

std::string to_string(Engine e);
Engine parse_engine(std::string_view s);

/// Binomial closed form, or nullopt when none covers the query (bounded or
/// alternate queries, and totals other than right-to-left any-kind).
std::optional<Count> closed_form_count(const PathQuery& q);

/// Coefficients 0..order-1 of the generating function for q with q.n
/// ignored, or nullopt when no generating function covers the query
/// (alternate paths are covered left to right without a bound only).
std::optional<std::vector<Count>> gf_coefficients(const PathQuery& q, std::size_t order);

/// Throws Errc::engine_not_applicable when the engine does not cover q.
Count engine_count(Engine e, const PathQuery& q, int oracle_cap = default_oracle_cap);

/// Lengths 0..order-1 from the generating function when one applies, from
/// the DP otherwise. `used` receives the engine.
std::vector<Count> series_counts(const PathQuery& q, std::size_t order, Engine* used = nullptr);

struct GridReport {
  std::size_t tuples = 0;
  std::size_t comparisons = 0;
  std::optional<std::string> first_failure;
};

/// Every (n <= max_n, k <= n or summed, kind, orientation, bound in {none,
/// 0..n}, alternate) with oracle, DP and whichever of closed form and GF
/// apply; stops at the first disagreement.
GridReport cross_engine_grid(int max_n, int oracle_cap = default_oracle_cap);

/// "(n=.., k=.., kind=.., ...)"; the length is left out when with_n is false.
std::string describe(const PathQuery& q, bool with_n = true);

}  // namespace lukas
