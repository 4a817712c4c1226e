#include "lukas/alternate.hpp"

#include <algorithm>

#include "lukas/dp.hpp"

namespace lukas {
namespace {

Series poly(std::initializer_list<long> c, std::size_t order) { return Series::from_ints(c, order); }

}  // namespace

Series s1_series(std::size_t order) {
  if (order == 0) return Series(0);
  // P(s) = a s^2 + b s + c with a = 1+z^2, b = 2z^3-1, c = z^2.
  Series s = Series::constant(1, 1);
  std::size_t prec = 1;
  while (prec < order) {
    prec = std::min(2 * prec, order);
    const Series a = poly({1, 0, 1}, prec);
    const Series b = poly({-1, 0, 0, 2}, prec);
    const Series c = poly({0, 0, 1}, prec);
    const Series x(std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()), prec);
    const Series value = a * x * x + b * x + c;
    const Series slope = Rational(2) * a * x + b;
    s = x - value / slope;
  }
  return s;
}

Series s2_series(std::size_t order) {
  const Series a = poly({1, 0, 1}, order);
  return poly({0, 0, 1}, order) / (a * s1_series(order));
}

Series alt_flat_zero_series(std::size_t order) {
  return shift_down(s2_series(order + 1), 1);
}

Series alt_series(int k, EndKind kind, std::size_t order) {
  if (k < 0) throw Error(Errc::invalid_argument, "height must be nonnegative");
  const Series s1 = s1_series(order);
  const Series a = poly({1, 0, 1}, order);
  const Series z = poly({0, 1}, order);
  const Series one = Series::constant(1, order);
  const Series inv = inverse(s1);
  const auto uk = static_cast<unsigned>(k);
  switch (kind) {
    case EndKind::up:
      if (k == 0) return Series(order);
      return poly({0, 1, 1}, order) / a * pow(inv, uk);
    case EndKind::down:
      return z * z * (Rational(2) * z * s1 + one) / a * pow(inv, uk + 2);
    case EndKind::flat: {
      Series h = z * ((z - one) * s1 + one) / a * pow(inv, uk + 1);
      if (k == 0) h += poly({0, 1, -1}, order) / a;
      return h;
    }
    case EndKind::any: {
      const Series z2 = z * z;
      if (k == 0) {
        const Series s1sq = s1 * s1;
        const Series num = s1sq * z2 + Rational(2) * s1 * z2 * z + s1sq + s1 * z + z2;
        return num / (a * s1sq);
      }
      const Series num = z * (Rational(2) * s1 * s1 * z + Rational(2) * s1 * z2 + s1 + z);
      return num / a * pow(inv, uk + 2);
    }
  }
  return Series(order);
}

Count alt_dp_count(int n, int k, EndKind kind) {
  return dp_count(PathQuery{n, k, kind, Orientation::left_to_right, std::nullopt, true});
}

}  // namespace lukas
