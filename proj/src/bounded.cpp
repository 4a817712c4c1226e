#include "lukas/bounded.hpp"

#include <string>

#include "lukas/dp.hpp"
#include "lukas/error.hpp"

namespace lukas {
namespace {

IntPoly signed_unit(int exponent) { return exponent % 2 == 0 ? IntPoly(1) : IntPoly(-1); }

IntPoly z_power(int k) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
  c.back() = 1;
  return IntPoly(std::move(c));
}

// N^t_i for i in 1..3, shared by both orientations.
IntPoly base_numerator(int t, int i) {
  const IntPoly z = IntPoly::z();
  IntPoly prev, cur;
  switch (i) {
    case 1: prev = IntPoly{-1, 1}; cur = IntPoly{1, -2}; break;
    case 2: prev = IntPoly{}; cur = IntPoly{0, 0, 1}; break;
    case 3: prev = IntPoly{0, -1}; cur = IntPoly{0, 1, -1}; break;
    default: throw Error(Errc::index_out_of_range, "base numerator index must be 1..3");
  }
  if (t == 0) return prev;
  for (int s = 1; s < t; ++s) {
    IntPoly next = -cur - z * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Removes the empty path, the constant term 1, from g.
RationalGF without_empty(RationalGF g) {
  g.num -= g.den;
  return g;
}

void check_bound(int t, int k) {
  if (t < 0) throw Error(Errc::invalid_argument, "bound must be nonnegative");
  if (k < 0) throw Error(Errc::invalid_argument, "height must be nonnegative");
  if (k > t) throw Error(Errc::height_above_bound, "height above bound");
}

}  // namespace

SystemMatrix build_system_matrix(int t, Orientation o) {
  if (t < 0) throw Error(Errc::invalid_argument, "bound must be nonnegative");
  const auto size = static_cast<std::size_t>(3 * (t + 1));
  SystemMatrix m{t, o, Matrix<IntPoly>(size, size)};
  auto& a = m.entries;
  const IntPoly z = IntPoly::z();
  auto f = [](int level) { return static_cast<std::size_t>(3 * level); };
  auto g = [](int level) { return static_cast<std::size_t>(3 * level + 1); };
  auto h = [](int level) { return static_cast<std::size_t>(3 * level + 2); };
  auto add_level = [&](std::size_t row, int level) {
    a(row, f(level)) += z;
    a(row, g(level)) += z;
    a(row, h(level)) += z;
  };

  for (int k = 0; k <= t; ++k) {
    // f_0 = 1 is the start state.
    a(f(k), f(k)) = IntPoly(-1);
    if (k >= 1) {
      if (o == Orientation::left_to_right) {
        for (int l = 0; l < k; ++l) add_level(f(k), l);
      } else {
        add_level(f(k), k - 1);
      }
    }
    a(g(k), g(k)) = IntPoly(-1);
    if (o == Orientation::left_to_right) {
      if (k + 1 <= t) add_level(g(k), k + 1);
    } else {
      for (int l = k + 1; l <= t; ++l) add_level(g(k), l);
    }
    add_level(h(k), k);
    a(h(k), h(k)) -= IntPoly(1);
  }
  return m;
}

IntPoly det_poly(const SystemMatrix& m) { return determinant(m.entries); }

IntPoly cramer_numerator(const SystemMatrix& m, int idx) {
  const auto n = m.entries.rows();
  if (idx < 1 || static_cast<std::size_t>(idx) > n) {
    throw Error(Errc::index_out_of_range, "column index out of range: " + std::to_string(idx));
  }
  Matrix<IntPoly> replaced = m.entries;
  const auto col = static_cast<std::size_t>(idx - 1);
  for (std::size_t r = 0; r < n; ++r) replaced(r, col) = IntPoly(r == 0 ? -1 : 0);
  return determinant(std::move(replaced));
}

IntPoly d_poly(int t) {
  if (t < 0) throw Error(Errc::invalid_argument, "d_poly: t must be nonnegative");
  return base_numerator(t, 1);
}

IntPoly fibonacci_poly(int t) {
  if (t < 0) throw Error(Errc::invalid_argument, "fibonacci_poly: t must be nonnegative");
  std::vector<Integer> c;
  for (long j = 0; 2 * j <= t + 2; ++j) {
    Integer b = binomial(t + 2 - j, j);
    c.push_back(j % 2 == 0 ? b : Integer(-b));
  }
  return IntPoly(std::move(c));
}

IntPoly n_poly(int t, int idx, Orientation o) {
  if (t < 0) throw Error(Errc::invalid_argument, "n_poly: t must be nonnegative");
  if (idx < 1 || idx > 3 * (t + 1)) {
    throw Error(Errc::index_out_of_range, "n_poly: index " + std::to_string(idx) + " outside 1.." + std::to_string(3 * (t + 1)));
  }
  const int level = (idx - 1) / 3;
  const int i = (idx - 1) % 3 + 1;
  if (level == 0) return base_numerator(t, i);
  if (o == Orientation::right_to_left) {
    return signed_unit(level) * z_power(level) * base_numerator(t - level, i);
  }
  // Level one is expressed through the base column; deeper levels shift down
  // one bound per level with a sign flip.
  const int s = t - level + 1;
  IntPoly first;
  switch (i) {
    case 1: first = base_numerator(s, 3); break;
    case 2: first = -base_numerator(s - 1, 2); break;
    default: first = base_numerator(s, 2); break;
  }
  return signed_unit(level - 1) * first;
}

RationalGF bounded_gf(int t, int k, EndKind kind, Orientation o) {
  check_bound(t, k);
  const IntPoly d = d_poly(t);
  if (o == Orientation::right_to_left) {
    const IntPoly scale = signed_unit(k) * z_power(k);
    switch (kind) {
      case EndKind::up:
        if (k == 0) return without_empty({n_poly(t, 1, o), d});
        return {scale * n_poly(t - k, 1, o), d};
      case EndKind::down: return {scale * n_poly(t - k, 2, o), d};
      case EndKind::flat: return {scale * n_poly(t - k, 3, o), d};
      case EndKind::any:
        return {scale * (n_poly(t - k, 1, o) + n_poly(t - k, 2, o) + n_poly(t - k, 3, o)), d};
    }
  }
  if (kind == EndKind::any) {
    if (k == 0) return {d + n_poly(t, 2, o) + n_poly(t, 3, o), d};
    return {signed_unit(k - 1) * (n_poly(t - k + 1, 3, o) - n_poly(t - k, 2, o) + n_poly(t - k + 1, 2, o)), d};
  }
  if (k < 2) return bounded_gf_cramer(t, k, kind, o);
  switch (kind) {
    case EndKind::up: return {signed_unit(k - 1) * n_poly(t - k + 1, 3, o), d};
    case EndKind::down: return {signed_unit(k) * n_poly(t - k, 2, o), d};
    default: return {signed_unit(k - 1) * n_poly(t - k + 1, 2, o), d};
  }
}

RationalGF bounded_gf_cramer(int t, int k, EndKind kind, Orientation o) {
  check_bound(t, k);
  const IntPoly d = d_poly(t);
  const int base = 3 * k;
  switch (kind) {
    case EndKind::up:
      if (k == 0) return without_empty({n_poly(t, 1, o), d});
      return {n_poly(t, base + 1, o), d};
    case EndKind::down: return {n_poly(t, base + 2, o), d};
    case EndKind::flat: return {n_poly(t, base + 3, o), d};
    case EndKind::any: return {n_poly(t, base + 1, o) + n_poly(t, base + 2, o) + n_poly(t, base + 3, o), d};
  }
  return {};
}

RationalGF total_bounded_gf(int t, Orientation o) {
  if (t < 0) throw Error(Errc::invalid_argument, "bound must be nonnegative");
  if (o == Orientation::left_to_right) return {signed_unit(t + 1), d_poly(t)};
  if (t == 0) return {IntPoly(1), IntPoly{1, -1}};
  if (t == 1) return {IntPoly(1), IntPoly{1, -2}};
  return {d_poly(t - 2), d_poly(t)};
}

std::vector<Count> height_distribution(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "length must be nonnegative");
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    out.push_back(dp_count(PathQuery{n, 0, EndKind::any, Orientation::left_to_right, t, false}));
  }
  return out;
}

}  // namespace lukas
