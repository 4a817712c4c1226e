#include "lukas/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "lukas/bounded.hpp"
#include "lukas/dp.hpp"
#include "lukas/error.hpp"
#include "lukas/path.hpp"

namespace lukas {
namespace {

Orientation orientation_of(Family f) {
  return f == Family::suffix_at_k || f == Family::suffix_any ? Orientation::right_to_left
                                                             : Orientation::left_to_right;
}

std::optional<int> end_height_of(const HeightFamily& f) {
  switch (f.family) {
    case Family::return_to_zero: return 0;
    case Family::prefix_at_k:
    case Family::suffix_at_k: return f.k;
    default: return std::nullopt;
  }
}

Count bounded_count(int n, const HeightFamily& f, std::optional<int> bound, HeightRoute route) {
  const auto k = end_height_of(f);
  const Orientation o = orientation_of(f.family);
  if (bound && k && *k > *bound) return 0;
  if (route == HeightRoute::dp || !bound) {
    return dp_count(PathQuery{n, k, EndKind::any, o, bound, false});
  }
  const RationalGF g = k ? bounded_gf(*bound, *k, EndKind::any, o) : total_bounded_gf(*bound, o);
  return expand_rational_integer(g, static_cast<std::size_t>(n) + 1).back();
}

Rational signed_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<Count> bounded_family_counts(int n, const HeightFamily& f, HeightRoute route) {
  if (f.family == Family::prefix_any) {
    throw Error(Errc::infinite_family, "infinite family: left-to-right paths with unspecified end");
  }
  if (n < 1) throw Error(Errc::invalid_argument, "average height needs n >= 1");
  if ((f.family == Family::prefix_at_k || f.family == Family::suffix_at_k) && (f.k < 0 || f.k > n)) {
    throw Error(Errc::invalid_argument, "family end height must lie in 0..n");
  }
  const Count total = bounded_count(n, f, std::nullopt, route);
  std::vector<Count> counts;
  // A length-n path never climbs above n + k.
  const int limit = n + (end_height_of(f) ? *end_height_of(f) : 0);
  for (int t = 0; t <= limit; ++t) {
    counts.push_back(bounded_count(n, f, t, route));
    if (counts.back() == total) break;
  }
  if (counts.back() != total) throw Error(Errc::invalid_argument, "bounded counts did not saturate");
  return counts;
}

HeightStats avg_height(int n, const HeightFamily& f, HeightRoute route) {
  const auto counts = bounded_family_counts(n, f, route);
  const Count& total = counts.back();
  Integer excess = 0;
  for (const auto& c : counts) excess += total - c;
  HeightStats s;
  s.n = n;
  s.family = f;
  s.mean_height = Rational(excess, total);
  s.mean_height.canonicalize();
  s.sqrt_pi_n = std::sqrt(std::numbers::pi * n);
  s.ratio = s.mean_height.get_d() / s.sqrt_pi_n;
  return s;
}

std::vector<HeightStats> sqrt_pi_ratio_profile(const HeightFamily& f, std::span<const int> lengths,
                                               HeightRoute route) {
  std::vector<HeightStats> out;
  out.reserve(lengths.size());
  for (int n : lengths) out.push_back(avg_height(n, f, route));
  return out;
}

bool substitution_check(int t, const Rational& u) {
  if (u == 1 || u == -1) throw Error(Errc::invalid_argument, "substitution excludes u = 1 and u = -1");
  if (t < 0) throw Error(Errc::invalid_argument, "bound must be nonnegative");
  const Rational one = 1;
  const Rational z = u / ((one + u) * (one + u));
  const Rational sign_t1 = t % 2 == 0 ? -1 : 1;  // (-1)^{t+1} = (-1)^{t+3}
  const Rational d = sign_t1 * (one - signed_pow(u, t + 3)) / ((one - u) * signed_pow(one + u, t + 2));
  const Rational n2 = sign_t1 * u * u * (one - signed_pow(u, t)) / (signed_pow(one + u, t + 3) * (one - u));
  const Rational n3 = sign_t1 * u * (one - signed_pow(u, t + 2)) / ((one - u) * signed_pow(one + u, t + 3));
  const auto o = Orientation::left_to_right;
  return d_poly(t).evaluate(z) == d && n_poly(t, 2, o).evaluate(z) == n2 && n_poly(t, 3, o).evaluate(z) == n3;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::return_to_zero: return "return-to-zero";
    case Family::prefix_at_k: return "prefix-at-k";
    case Family::suffix_at_k: return "suffix-at-k";
    case Family::suffix_any: return "suffix-any";
    case Family::prefix_any: return "prefix-any";
  }
  return "return-to-zero";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::return_to_zero, Family::prefix_at_k, Family::suffix_at_k, Family::suffix_any,
                   Family::prefix_any}) {
    if (s == to_string(f)) return f;
  }
  throw Error(Errc::invalid_argument, "unknown family: " + std::string(s));
}

}  // namespace lukas
