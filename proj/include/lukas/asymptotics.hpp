#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lukas/types.hpp"

namespace lukas {

enum class Family { return_to_zero, prefix_at_k, suffix_at_k, suffix_any, prefix_any };

struct HeightFamily {
  Family family = Family::return_to_zero;
  int k = 0;  // used by prefix_at_k / suffix_at_k
};

/// How the bounded counts c_t(n) are obtained.
enum class HeightRoute { dp, gf };

struct HeightStats {
  int n = 0;
  HeightFamily family;
  Rational mean_height;  // exact
  double sqrt_pi_n = 0;
  double ratio = 0;  // mean_height / sqrt(pi n)
};

/// Number of paths in the family with maximum height <= t, for
/// t = 0, 1, ... up to the first t at which every path qualifies. The last
/// entry is therefore the family size.
std::vector<Count> bounded_family_counts(int n, const HeightFamily& f, HeightRoute route);

/// Exact mean of the maximum height, sum_t (total - c_t) / total.
/// Throws Errc::infinite_family for prefix_any.
HeightStats avg_height(int n, const HeightFamily& f, HeightRoute route = HeightRoute::gf);

std::vector<HeightStats> sqrt_pi_ratio_profile(const HeightFamily& f, std::span<const int> lengths,
                                               HeightRoute route = HeightRoute::gf);

/// Checks D_t, N_2^t and N_3^t at z = u/(1+u)^2 against their closed forms
/// in u, in exact arithmetic. u = 1 and u = -1 are rejected.
bool substitution_check(int t, const Rational& u);

std::string to_string(Family f);
Family parse_family(std::string_view s);

}  // namespace lukas
