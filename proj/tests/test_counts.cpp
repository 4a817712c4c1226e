#include "doctest.h"
#include "lukas/counts.hpp"
#include "lukas/dp.hpp"
#include "lukas/enumerate.hpp"
#include "lukas/series.hpp"

using namespace lukas;

namespace {

constexpr auto l2r = Orientation::left_to_right;
constexpr auto r2l = Orientation::right_to_left;
constexpr EndKind all_kinds[] = {EndKind::up, EndKind::flat, EndKind::down, EndKind::any};

Count dp(int n, std::optional<int> k, EndKind kind, Orientation o) { return dp_count(PathQuery{n, k, kind, o, std::nullopt, false}); }

std::vector<Integer> row(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("prefix tables") {
  const std::vector<std::vector<Integer>> printed{
      row({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}),
      row({0, 1, 3, 9, 28, 90, 297, 1001, 3432, 11934}),
      row({0, 1, 4, 14, 48, 165, 572, 2002, 7072, 25194}),
      row({0, 1, 5, 20, 75, 275, 1001, 3640, 13260, 48450}),
  };
  for (int k = 0; k <= 3; ++k) {
    CHECK(prefix_series(k, EndKind::any, 10).to_counts() == printed[k]);
    for (int n = 0; n <= 9; ++n) CHECK(prefix_count(n, k, EndKind::any) == printed[k][n]);
  }
}

TEST_CASE("prefix examples") {
  CHECK(prefix_count(4, 2, EndKind::any) == 48);
  CHECK(prefix_count(9, 3, EndKind::any) == 48450);
  CHECK(prefix_count(5, 2, EndKind::up) == 42);
  CHECK(enumerate_count(PathQuery{5, 2, EndKind::up}) == 42);
  CHECK(prefix_count(0, 0, EndKind::any) == 1);
  CHECK(prefix_count(0, 0, EndKind::flat) == 0);
  CHECK(prefix_count(1, 0, EndKind::flat) == 1);
}

TEST_CASE("suffix tables") {
  const std::vector<std::vector<Integer>> printed{
      row({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}),
      row({0, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}),
      row({0, 0, 1, 3, 9, 28, 90, 297, 1001, 3432}),
      row({0, 0, 0, 1, 4, 14, 48, 165, 572, 2002}),
  };
  for (int k = 0; k <= 3; ++k) {
    CHECK(suffix_series(k, EndKind::any, 10).to_counts() == printed[k]);
    for (int n = 0; n <= 9; ++n) CHECK(suffix_count(n, k, EndKind::any) == printed[k][n]);
  }
}

TEST_CASE("suffix examples") {
  CHECK(suffix_count(9, 2, EndKind::any) == 3432);
  CHECK(suffix_count(3, 3, EndKind::any) == 1);
  CHECK(suffix_series(2, EndKind::any, 4)[1] == 0);
  CHECK(suffix_series(0, EndKind::flat, 4)[3] == 2);
  CHECK(enumerate_count(PathQuery{3, 0, EndKind::flat, r2l}) == 2);
  // FUUD, UFUD, UUFD and UUUD2
  CHECK(enumerate_count(PathQuery{4, 1, EndKind::down, r2l}) == 4);
  CHECK(suffix_count(4, 1, EndKind::down) == 4);
  CHECK(suffix_count(3, 5, EndKind::any) == 0);
}

TEST_CASE("suffix total is shifted Catalan") {
  const auto total = suffix_total_series(14).to_counts();
  for (int n = 0; n <= 12; ++n) {
    CHECK(total[n] == catalan(n + 1));
    CHECK(dp(n, std::nullopt, EndKind::any, r2l) == catalan(n + 1));
  }
}

TEST_CASE("closed forms agree with dp") {
  for (int n = 0; n <= 24; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      for (auto kind : all_kinds) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(to_string(kind));
        CHECK(prefix_count(n, k, kind) == dp(n, k, kind, l2r));
        CHECK(suffix_count(n, k, kind) == dp(n, k, kind, r2l));
      }
    }
  }
}

TEST_CASE("series agree with dp") {
  constexpr int order = 30;
  for (int k = 0; k <= 8; ++k) {
    for (auto kind : all_kinds) {
      const auto pre = prefix_series(k, kind, order).to_counts();
      const auto suf = suffix_series(k, kind, order).to_counts();
      CHECK(pre == dp_counts(PathQuery{0, k, kind, l2r}, order));
      CHECK(suf == dp_counts(PathQuery{0, k, kind, r2l}, order));
    }
  }
}

TEST_CASE("flat relation h = z/(1-z) (f + g)") {
  constexpr std::size_t order = 30;
  const Series factor = Series::from_ints({0, 1}, order) / Series::from_ints({1, -1}, order);
  for (int k = 0; k <= 6; ++k) {
    // the empty path sits in f_0
    const Series eps = Series::constant(k == 0 ? 1 : 0, order);
    CHECK(prefix_series(k, EndKind::flat, order) ==
          factor * (prefix_series(k, EndKind::up, order) + eps + prefix_series(k, EndKind::down, order)));
    CHECK(suffix_series(k, EndKind::flat, order) ==
          factor * (suffix_series(k, EndKind::up, order) + eps + suffix_series(k, EndKind::down, order)));
  }
}

TEST_CASE("up closed form vanishes at height 0") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(prefix_count(n, 0, EndKind::up) == 0);
    CHECK(suffix_count(n, 0, EndKind::up) == 0);
    CHECK(prefix_count(n, 0, EndKind::any) == catalan(n));
  }
}
