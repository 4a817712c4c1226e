#include "lukas/counts.hpp"

#include "lukas/error.hpp"

namespace lukas {
namespace {

// factor * C(a, b) / divisor, which must be exact. A vanishing binomial
// short-circuits so boundary cases with divisor 0 evaluate to 0.
Count scaled_binomial(long factor, long divisor, long a, long b) {
  Integer c = binomial(a, b);
  if (c == 0 || factor == 0) return 0;
  if (divisor == 0) throw Error(Errc::invalid_argument, "closed form divides by zero");
  Integer num = factor * c;
  if (num % divisor != 0) throw Error(Errc::non_integral, "closed form is not an integer");
  return num / divisor;
}

Series times_z(const Series& s, std::size_t k) { return shift_up(s, k).truncated(s.order()); }

void check_nonnegative(long n, long k) {
  if (n < 0 || k < 0) throw Error(Errc::invalid_argument, "length and height must be nonnegative");
}

}  // namespace

Series prefix_series(int k, EndKind kind, std::size_t order) {
  check_nonnegative(0, k);
  const Series l = catalan_gf(order);
  const auto uk = static_cast<unsigned>(k);
  switch (kind) {
    case EndKind::up:
      if (k == 0) return Series(order);
      return times_z(pow(l, uk), 1);
    case EndKind::down:
      return times_z(pow(l, uk + 2) - pow(l, uk + 1), 1);
    case EndKind::flat: {
      Series h = times_z(pow(l, uk + 2), 2);
      if (k == 0) h += Series::monomial(1, 1, order);  // the lone step F
      return h;
    }
    case EndKind::any: {
      Series s = times_z(pow(l, uk + 2), 1);
      if (k == 0) s += Series::constant(1, order);
      return s;
    }
  }
  return Series(order);
}

Count prefix_count(long n, long k, EndKind kind) {
  check_nonnegative(n, k);
  if (n == 0) return kind == EndKind::any && k == 0 ? 1 : 0;
  switch (kind) {
    case EndKind::any: return scaled_binomial(k + 2, n + k + 1, 2 * n + k - 1, n - 1);
    case EndKind::up: return scaled_binomial(k, n + k - 1, 2 * n + k - 3, n - 1);
    case EndKind::down: return scaled_binomial(k + 3, n + k + 1, 2 * n + k - 2, n - 2);
    case EndKind::flat: {
      Count c = scaled_binomial(k + 2, n + k, 2 * n + k - 3, n - 2);
      if (n == 1 && k == 0) c += 1;
      return c;
    }
  }
  return 0;
}

Series suffix_series(int k, EndKind kind, std::size_t order) {
  check_nonnegative(0, k);
  const Series l = catalan_gf(order);
  const Series zl = times_z(l, 1);
  const auto uk = static_cast<unsigned>(k);
  switch (kind) {
    case EndKind::up: return k == 0 ? Series(order) : pow(zl, uk);
    case EndKind::down: return pow(zl, uk + 1) * (l - Series::constant(1, order));
    case EndKind::flat: return pow(zl, uk + 1);
    case EndKind::any: return times_z(pow(l, uk + 1), uk);
  }
  return Series(order);
}

Count suffix_count(long n, long k, EndKind kind) {
  check_nonnegative(n, k);
  if (n == 0) return kind == EndKind::any && k == 0 ? 1 : 0;
  if (k > n) return 0;
  switch (kind) {
    case EndKind::any: return scaled_binomial(k + 1, n + 1, 2 * n - k, n);
    case EndKind::up: return scaled_binomial(k, n, 2 * n - k - 1, n - 1);
    case EndKind::down: return scaled_binomial(k + 3, n + 1, 2 * n - k - 2, n);
    case EndKind::flat: return scaled_binomial(k + 1, n, 2 * n - k - 2, n - 1);
  }
  return 0;
}

Series suffix_total_series(std::size_t order) {
  const Series l = catalan_gf(order + 1);
  return shift_down(l - Series::constant(1, order + 1), 1);
}

}  // namespace lukas
