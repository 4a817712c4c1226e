#include "lukas/engines.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "lukas/alternate.hpp"
#include "lukas/bounded.hpp"
#include "lukas/counts.hpp"
#include "lukas/dp.hpp"
#include "lukas/error.hpp"

namespace lukas {
namespace {

void check_finite(const PathQuery& q) {
  check_query(q);
  if (q.orientation == Orientation::left_to_right && !q.k && !q.bound) {
    throw Error(Errc::infinite_family, "infinite family: left-to-right paths need an end height or a bound");
  }
}

std::optional<Series> gf_series(const PathQuery& q, std::size_t order) {
  const bool l2r = q.orientation == Orientation::left_to_right;
  if (q.alternate) {
    if (!l2r || q.bound || !q.k) return std::nullopt;
    return alt_series(*q.k, q.kind, order);
  }
  if (q.bound) {
    if (q.k) return expand_rational(bounded_gf(*q.bound, *q.k, q.kind, q.orientation), order);
    if (q.kind == EndKind::any) return expand_rational(total_bounded_gf(*q.bound, q.orientation), order);
    return std::nullopt;
  }
  if (q.k) return l2r ? prefix_series(*q.k, q.kind, order) : suffix_series(*q.k, q.kind, order);
  if (!l2r && q.kind == EndKind::any) return suffix_total_series(order);
  return std::nullopt;
}

}  // namespace

std::string to_string(Engine e) {
  switch (e) {
    case Engine::oracle: return "oracle";
    case Engine::dp: return "dp";
    case Engine::closed: return "closed";
    case Engine::gf: return "gf";
  }
  return "dp";
}

Engine parse_engine(std::string_view s) {
  for (Engine e : {Engine::oracle, Engine::dp, Engine::closed, Engine::gf}) {
    if (s == to_string(e)) return e;
  }
  throw Error(Errc::invalid_argument, "unknown engine: " + std::string(s));
}

std::optional<Count> closed_form_count(const PathQuery& q) {
  check_finite(q);
  if (q.bound || q.alternate) return std::nullopt;
  if (q.k) {
    return q.orientation == Orientation::left_to_right ? prefix_count(q.n, *q.k, q.kind)
                                                       : suffix_count(q.n, *q.k, q.kind);
  }
  if (q.orientation == Orientation::right_to_left && q.kind == EndKind::any) return catalan(q.n + 1);
  return std::nullopt;
}

std::optional<std::vector<Count>> gf_coefficients(const PathQuery& q, std::size_t order) {
  PathQuery probe = q;
  probe.n = 0;
  check_finite(probe);
  auto s = gf_series(q, order);
  if (!s) return std::nullopt;
  return s->to_counts();
}

Count engine_count(Engine e, const PathQuery& q, int oracle_cap) {
  check_finite(q);
  switch (e) {
    case Engine::oracle: return enumerate_count(q, oracle_cap);
    case Engine::dp: return dp_count(q);
    case Engine::closed:
      if (auto c = closed_form_count(q)) return *c;
      break;
    case Engine::gf:
      if (auto c = gf_coefficients(q, static_cast<std::size_t>(q.n) + 1)) return c->back();
      break;
  }
  throw Error(Errc::engine_not_applicable, "engine " + to_string(e) + " does not cover " + describe(q));
}

std::vector<Count> series_counts(const PathQuery& q, std::size_t order, Engine* used) {
  if (auto c = gf_coefficients(q, order)) {
    if (used) *used = Engine::gf;
    return *c;
  }
  if (used) *used = Engine::dp;
  return dp_counts(q, static_cast<int>(order));
}

std::string describe(const PathQuery& q, bool with_n) {
  std::ostringstream os;
  os << '(';
  if (with_n) os << "n=" << q.n << ", ";
  os << "k=" << (q.k ? std::to_string(*q.k) : "all") << ", kind=" << to_string(q.kind)
     << ", orientation=" << to_string(q.orientation) << ", bound=" << (q.bound ? std::to_string(*q.bound) : "none")
     << ", alternate=" << (q.alternate ? "true" : "false") << ")";
  return os.str();
}

GridReport cross_engine_grid(int max_n, int oracle_cap) {
  GridReport report;
  const auto order = static_cast<std::size_t>(max_n) + 1;
  for (Orientation o : {Orientation::left_to_right, Orientation::right_to_left}) {
    std::vector<OracleTally> tallies;
    for (int n = 0; n <= max_n; ++n) tallies.emplace_back(n, o, n, oracle_cap);
    for (int b = -1; b <= max_n; ++b) {
      const std::optional<int> bound = b < 0 ? std::nullopt : std::optional<int>(b);
      for (bool alt : {false, true}) {
        for (int kk = -1; kk <= max_n; ++kk) {
          if (bound && kk > *bound) continue;
          const std::optional<int> k = kk < 0 ? std::nullopt : std::optional<int>(kk);
          if (!k && o == Orientation::left_to_right && !bound) continue;
          for (EndKind kind : {EndKind::up, EndKind::flat, EndKind::down, EndKind::any}) {
            const PathQuery base{0, k, kind, o, bound, alt};
            const auto gf = gf_coefficients(base, order);
            for (int n = std::max({0, kk, b}); n <= max_n; ++n) {
              PathQuery q = base;
              q.n = n;
              ++report.tuples;
              const Count oracle = tallies[static_cast<std::size_t>(n)].count(q);
              auto agree = [&](const Count& value, Engine e) {
                ++report.comparisons;
                if (value == oracle) return true;
                report.first_failure = describe(q) + ": oracle=" + oracle.get_str() + " " + to_string(e) + "=" +
                                       value.get_str();
                return false;
              };
              if (!agree(dp_count(q), Engine::dp)) return report;
              if (auto c = closed_form_count(q); c && !agree(*c, Engine::closed)) return report;
              if (gf && !agree((*gf)[static_cast<std::size_t>(n)], Engine::gf)) return report;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace lukas
