#include "doctest.h"
#include "lukas/alternate.hpp"
#include "lukas/dp.hpp"
#include "lukas/enumerate.hpp"

using namespace lukas;

namespace {

constexpr EndKind all_kinds[] = {EndKind::up, EndKind::flat, EndKind::down, EndKind::any};

std::vector<Integer> row(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

PathQuery alt(int n, int k, EndKind kind) { return PathQuery{n, k, kind, Orientation::left_to_right, std::nullopt, true}; }

}  // namespace

TEST_CASE("alternate rows") {
  const std::vector<std::vector<Integer>> printed{
      row({1, 1, 1, 3, 5, 9, 19, 39, 81, 173}),
      row({0, 1, 3, 5, 11, 25, 53, 115, 255, 565}),
      row({0, 1, 3, 7, 19, 45, 105, 247, 575, 1333}),
      row({0, 1, 3, 9, 27, 69, 177, 443, 1087, 2645}),
  };
  for (int k = 0; k <= 3; ++k) {
    CHECK(alt_series(k, EndKind::any, 10).to_counts() == printed[k]);
    for (int n = 0; n <= 9; ++n) {
      CHECK(alt_dp_count(n, k, EndKind::any) == printed[k][n]);
      CHECK(enumerate_count(alt(n, k, EndKind::any)) == printed[k][n]);
    }
  }
  CHECK(alt_dp_count(3, 0, EndKind::any) == 3);
  CHECK(alt_dp_count(2, 0, EndKind::any) == 1);
  CHECK(alt_dp_count(9, 3, EndKind::any) == 2645);
  CHECK(alt_series(2, EndKind::any, 7)[6] == 105);
}

TEST_CASE("s1 kernel root") {
  constexpr std::size_t order = 48;
  const Series s1 = s1_series(order);
  CHECK(s1[0] == 1);
  CHECK(s1[1] == 0);
  // s = 1 + c z^2 + O(z^3) leaves (1 + 2c) - c + 1 at z^2, so c = -2
  CHECK(s1[2] == -2);
  const Series a = Series::from_ints({1, 0, 1}, order);
  const Series b = Series::from_ints({-1, 0, 0, 2}, order);
  const Series c = Series::from_ints({0, 0, 1}, order);
  CHECK(a * s1 * s1 + b * s1 + c == Series(order));
}

TEST_CASE("s2 kernel root") {
  constexpr std::size_t order = 40;
  const Series s2 = s2_series(order);
  CHECK(s2.valuation() == 2);
  const Series a = Series::from_ints({1, 0, 1}, order);
  CHECK(s1_series(order) * s2 * a - Series::from_ints({0, 0, 1}, order) == Series(order));
  const Series b = Series::from_ints({-1, 0, 0, 2}, order);
  const Series c = Series::from_ints({0, 0, 1}, order);
  CHECK(a * s2 * s2 + b * s2 + c == Series(order));
}

TEST_CASE("flat returns to zero") {
  const Series h0 = alt_flat_zero_series(30);
  CHECK(h0 == alt_series(0, EndKind::flat, 30));
  CHECK(h0.to_counts() == dp_counts(alt(0, 0, EndKind::flat), 30));
  CHECK(alt_flat_zero_series(10).to_counts() == row({0, 1, 0, 1, 2, 3, 6, 13, 26, 55}));
}

TEST_CASE("kernel series agree with dp") {
  constexpr int order = 41;
  for (int k = 0; k <= 6; ++k) {
    for (auto kind : all_kinds) {
      CAPTURE(k);
      CAPTURE(to_string(kind));
      CHECK(alt_series(k, kind, order).to_counts() == dp_counts(alt(0, k, kind), order));
    }
  }
  CHECK(alt_series(1, EndKind::up, 4)[3] == alt_dp_count(3, 1, EndKind::up));
}

TEST_CASE("dominant root") {
  const auto r = dominant_root<HighPrecision>(HighPrecision("1e-12"));
  CHECK(abs(r.value - HighPrecision("0.403031716762")) < HighPrecision("1e-11"));
  CHECK(r.residual < HighPrecision("1e-10"));
  const HighPrecision a = r.value;
  CHECK(abs(2 * a * (1 + a - a * a) - 1) < HighPrecision("1e-9"));
  // the cubic factor 2z^3 - 2z^2 - 2z + 1 carries the root
  CHECK(abs(2 * a * a * a - 2 * a * a - 2 * a + 1) < HighPrecision("1e-10"));

  const auto d = dominant_root<double>(1e-12);
  CHECK(d.value == doctest::Approx(0.403031716762).epsilon(1e-11));
  CHECK_THROWS_AS(dominant_root<double>(0.0), Error);
}

TEST_CASE("alternate asymptotics") {
  const auto ratio = [](int n) {
    const HighPrecision exact(alt_dp_count(n, 0, EndKind::any).get_str());
    return static_cast<double>(alt_asymptotic<HighPrecision>(n) / exact);
  };
  const double r100 = ratio(100);
  const double r300 = ratio(300);
  CHECK(std::abs(r300 - 1) <= 0.05);
  CHECK(std::abs(r300 - 1) < std::abs(r100 - 1));
  CHECK_THROWS_AS(alt_asymptotic<double>(0, 0.4), Error);
}

TEST_CASE("alternate flat relation h = z (f + g)") {
  constexpr std::size_t order = 30;
  const Series z = Series::from_ints({0, 1}, order);
  for (int k = 0; k <= 6; ++k) {
    const Series eps = Series::constant(k == 0 ? 1 : 0, order);
    CHECK(alt_series(k, EndKind::flat, order) ==
          z * (alt_series(k, EndKind::up, order) + eps + alt_series(k, EndKind::down, order)));
  }
}

TEST_CASE("alternate paths are a subset") {
  for (int n = 0; n <= 25; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (auto kind : all_kinds) {
        CHECK(alt_dp_count(n, k, kind) <= dp_count(PathQuery{n, k, kind}));
      }
    }
  }
}

TEST_CASE("asymptotic ratio approaches 1") {
  const HighPrecision a = dominant_root<HighPrecision>(HighPrecision("1e-40")).value;
  double prev = 1e9;
  for (int n = 50; n <= 400; n += 50) {
    const HighPrecision approx = alt_asymptotic(n, a);
    CHECK(approx > 0);
    const HighPrecision exact(alt_dp_count(n, 0, EndKind::any).get_str());
    const double dev = std::abs(static_cast<double>(approx / exact) - 1);
    CAPTURE(n);
    CHECK(dev < prev);
    prev = dev;
  }
}
