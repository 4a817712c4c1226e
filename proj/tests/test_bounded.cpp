#include <random>

#include "doctest.h"
#include "lukas/bounded.hpp"
#include "lukas/dp.hpp"
#include "lukas/error.hpp"

using namespace lukas;

namespace {

constexpr auto l2r = Orientation::left_to_right;
constexpr auto r2l = Orientation::right_to_left;
constexpr EndKind all_kinds[] = {EndKind::up, EndKind::flat, EndKind::down, EndKind::any};

const IntPoly z = IntPoly::z();

std::vector<Integer> row(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Determinant of the matrix evaluated at a rational point, by plain Gaussian
// elimination over Q. Independent of the fraction-free polynomial route.
Rational det_at(const Matrix<IntPoly>& m, const Rational& x) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).evaluate(x);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<IntPoly> matrix_row(const SystemMatrix& m, std::size_t r) {
  std::vector<IntPoly> out;
  for (std::size_t c = 0; c < m.entries.cols(); ++c) out.push_back(m.entries(r, c));
  return out;
}

}  // namespace

TEST_CASE("build_system_matrix") {
  CHECK(build_system_matrix(0, l2r).entries.rows() == 3);
  CHECK(build_system_matrix(0, r2l).entries.cols() == 3);
  const auto a = build_system_matrix(2, l2r);
  CHECK(a.entries(2, 2) == z - 1);

  const IntPoly o;
  const IntPoly m1 = -1;
  const IntPoly zm1 = z - 1;
  const std::vector<std::vector<IntPoly>> left{
      {m1, o, o, o, o, o, o, o, o},       {o, m1, o, z, z, z, o, o, o},  {z, z, zm1, o, o, o, o, o, o},
      {z, z, z, m1, o, o, o, o, o},       {o, o, o, o, m1, o, z, z, z},  {o, o, o, z, z, zm1, o, o, o},
      {z, z, z, z, z, z, m1, o, o},       {o, o, o, o, o, o, o, m1, o},  {o, o, o, o, o, o, z, z, zm1},
  };
  const std::vector<std::vector<IntPoly>> right{
      {m1, o, o, o, o, o, o, o, o},       {o, m1, o, z, z, z, z, z, z},  {z, z, zm1, o, o, o, o, o, o},
      {z, z, z, m1, o, o, o, o, o},       {o, o, o, o, m1, o, z, z, z},  {o, o, o, z, z, zm1, o, o, o},
      {o, o, o, z, z, z, m1, o, o},       {o, o, o, o, o, o, o, m1, o},  {o, o, o, o, o, o, z, z, zm1},
  };
  const auto b = build_system_matrix(2, r2l);
  for (std::size_t r = 0; r < 9; ++r) {
    CAPTURE(r);
    CHECK(matrix_row(a, r) == left[r]);
    CHECK(matrix_row(b, r) == right[r]);
  }
}

TEST_CASE("det_poly") {
  CHECK(det_poly(build_system_matrix(3, l2r)) == IntPoly{1, -4, 3});
  CHECK(det_poly(build_system_matrix(4, l2r)) == IntPoly{-1, 5, -6, 1});
  CHECK(det_poly(build_system_matrix(0, l2r)) == z - 1);
}

TEST_CASE("det_poly matches pointwise elimination") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  for (int t = 0; t <= 4; ++t) {
    for (auto o : {l2r, r2l}) {
      const auto m = build_system_matrix(t, o);
      const IntPoly d = det_poly(m);
      for (int trial = 0; trial < 4; ++trial) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        CHECK(d.evaluate(x) == det_at(m.entries, x));
      }
    }
  }
}

TEST_CASE("d_poly") {
  CHECK(d_poly(1) == IntPoly{1, -2});
  CHECK(d_poly(3) == IntPoly{1, -4, 3});
  CHECK(d_poly(0) == z - 1);
  for (int t = 0; t <= 6; ++t) {
    CHECK(d_poly(t) == det_poly(build_system_matrix(t, l2r)));
    CHECK(d_poly(t) == det_poly(build_system_matrix(t, r2l)));
  }
}

TEST_CASE("fibonacci_poly and the sign law") {
  CHECK(fibonacci_poly(3) == IntPoly{1, -4, 3});
  CHECK(fibonacci_poly(0) == IntPoly{1, -1});
  CHECK(fibonacci_poly(4) == IntPoly{1, -5, 6, -1});
  for (int t = 0; t <= 12; ++t) {
    const IntPoly f = fibonacci_poly(t);
    CHECK(d_poly(t) == (t % 2 == 1 ? f : -f));
  }
}

TEST_CASE("n_poly reproduces the numerator table") {
  const IntPoly u = 1 - 2 * z;
  const IntPoly v = 1 - z;
  const IntPoly w = IntPoly{1, -3, 1};
  const IntPoly x = IntPoly{1, -4, 3};
  const IntPoly z2 = z * z;
  // columns t = 0..4, rows idx = 1..12; missing entries are outside 1..3(t+1)
  const std::vector<std::vector<IntPoly>> table{
      {z - 1, u, -w, x, IntPoly{-1, 5, -6, 1}},
      {0, z2, -z2, z2 * v, -z2 * u},
      {-z, z * v, -z * u, z * w, -z * x},
      {0, z * v, -z * u, z * w, -z * x},
      {0, 0, -z2, z2, -z2 * v},
      {0, z2, -z2, z2 * v, -z2 * u},
      {0, 0, -z * v, z * u, -z * w},
      {0, 0, 0, z2, -z2},
      {0, 0, -z2, z2, -z2 * v},
      {0, 0, 0, z * v, -z * u},
      {0, 0, 0, 0, -z2},
      {0, 0, 0, z2, -z2},
  };
  CHECK(n_poly(2, 3, l2r) == -z * u);
  CHECK(n_poly(4, 2, l2r) == -z2 * u);
  CHECK(n_poly(3, 7, l2r) == z * u);
  for (int t = 0; t <= 4; ++t) {
    const auto m = build_system_matrix(t, l2r);
    for (int idx = 1; idx <= 12; ++idx) {
      if (idx > 3 * (t + 1)) continue;
      CAPTURE(t);
      CAPTURE(idx);
      const IntPoly expected = table[idx - 1][t];
      CHECK(n_poly(t, idx, l2r) == expected);
      CHECK(cramer_numerator(m, idx) == expected);
    }
  }
  CHECK_THROWS_AS(n_poly(1, 7, l2r), Error);
}

TEST_CASE("n_poly recurrence matches Cramer for both orientations") {
  for (int t = 0; t <= 5; ++t) {
    for (auto o : {l2r, r2l}) {
      const auto m = build_system_matrix(t, o);
      for (int idx = 1; idx <= 3 * (t + 1); ++idx) {
        CAPTURE(t);
        CAPTURE(idx);
        CHECK(n_poly(t, idx, o) == cramer_numerator(m, idx));
      }
    }
  }
  for (int t = 0; t <= 8; ++t) CHECK(n_poly(t, 1, l2r) == d_poly(t));
}

TEST_CASE("bounded_gf examples") {
  CHECK(expand_rational_integer(bounded_gf(3, 2, EndKind::up, l2r), 6) == row({0, 1, 2, 5, 14, 41}));
  CHECK(expand_rational_integer(bounded_gf(4, 2, EndKind::up, l2r), 10)[9] == 4334);
  CHECK(expand_rational_integer(bounded_gf(2, 2, EndKind::any, r2l), 5)[4] ==
        dp_count(PathQuery{4, 2, EndKind::any, r2l, 2, false}));
  try {
    (void)bounded_gf(2, 3, EndKind::any, l2r);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::height_above_bound);
  }
}

TEST_CASE("bounded f_2 rows") {
  const std::vector<std::vector<Integer>> printed{
      row({0, 1, 2, 5, 13, 34, 89, 233, 610, 1597}),
      row({0, 1, 2, 5, 14, 41, 122, 365, 1094, 3281}),
      row({0, 1, 2, 5, 14, 42, 131, 417, 1341, 4334}),
  };
  for (int t = 2; t <= 4; ++t) {
    CHECK(expand_rational_integer(bounded_gf(t, 2, EndKind::up, l2r), 10) == printed[t - 2]);
    CHECK(expand_rational_integer(bounded_gf_cramer(t, 2, EndKind::up, l2r), 10) == printed[t - 2]);
  }
}

TEST_CASE("bounded totals") {
  const std::vector<std::vector<Integer>> left{
      row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
      row({1, 2, 4, 8, 16, 32, 64, 128, 256, 512}),
      row({1, 3, 8, 21, 55, 144, 377, 987, 2584, 6765}),
      row({1, 4, 13, 40, 121, 364, 1093, 3280, 9841, 29524}),
      row({1, 5, 19, 66, 221, 728, 2380, 7753, 25213, 81927}),
  };
  const std::vector<std::vector<Integer>> right{
      row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
      row({1, 2, 4, 8, 16, 32, 64, 128, 256, 512}),
      row({1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181}),
      row({1, 2, 5, 14, 41, 122, 365, 1094, 3281, 9842}),
  };
  for (int t = 0; t <= 4; ++t) {
    CHECK(expand_rational_integer(total_bounded_gf(t, l2r), 10) == left[t]);
    const RationalGF g = total_bounded_gf(t, l2r);
    CHECK(g.den == g.num * fibonacci_poly(t));
  }
  for (int t = 0; t <= 3; ++t) CHECK(expand_rational_integer(total_bounded_gf(t, r2l), 10) == right[t]);
  CHECK(expand_rational_integer(total_bounded_gf(2, r2l), 5) == row({1, 2, 5, 13, 34}));
}

TEST_CASE("bounded generating functions agree with dp") {
  constexpr int order = 13;
  for (int t = 0; t <= 5; ++t) {
    for (auto o : {l2r, r2l}) {
      for (int k = 0; k <= t; ++k) {
        for (auto kind : all_kinds) {
          CAPTURE(t);
          CAPTURE(k);
          CAPTURE(to_string(kind));
          CAPTURE(to_string(o));
          const auto expected = dp_counts(PathQuery{0, k, kind, o, t, false}, order);
          CHECK(expand_rational_integer(bounded_gf(t, k, kind, o), order) == expected);
          CHECK(expand_rational_integer(bounded_gf_cramer(t, k, kind, o), order) == expected);
        }
      }
      CHECK(expand_rational_integer(total_bounded_gf(t, o), order) ==
            dp_counts(PathQuery{0, std::nullopt, EndKind::any, o, t, false}, order));
    }
  }
}

TEST_CASE("height_distribution") {
  CHECK(height_distribution(3) == row({1, 4, 5, 5}));
  CHECK(height_distribution(0) == row({1}));
  CHECK(height_distribution(9)[2] == 1597);
  CHECK(height_distribution(9)[2] == dp_count(PathQuery{9, 0, EndKind::any, l2r, 2, false}));
}

TEST_CASE("level-one numerators repeat the base column") {
  for (int t = 1; t <= 6; ++t) {
    const auto m = build_system_matrix(t, l2r);
    CHECK(cramer_numerator(m, 4) == cramer_numerator(m, 3));
    CHECK(cramer_numerator(m, 5) == -n_poly(t - 1, 2, l2r));
    CHECK(cramer_numerator(m, 6) == cramer_numerator(m, 2));
  }
}

TEST_CASE("stabilization in the bound") {
  constexpr int order = 10;
  for (int n = 0; n < order; ++n) {
    for (int k = 0; k <= 2; ++k) {
      for (auto o : {l2r, r2l}) {
        for (auto kind : all_kinds) {
          const Count free = dp_count(PathQuery{n, k, kind, o});
          // left to right a path ending at k can climb to n + k - 1
          for (int t = std::max(k, n + k); t <= n + k + 2; ++t) {
            CHECK(expand_rational_integer(bounded_gf(t, k, kind, o), order)[n] == free);
          }
        }
      }
    }
    const Count r2l_total = catalan(n + 1);
    for (int t = n; t <= n + 2; ++t) CHECK(expand_rational_integer(total_bounded_gf(t, r2l), order)[n] == r2l_total);
  }
  // the left-to-right total keeps growing: length 1 has F, U1, ..., Ut
  for (int t = 0; t <= 5; ++t) CHECK(expand_rational_integer(total_bounded_gf(t, l2r), 2)[1] == t + 1);
}
