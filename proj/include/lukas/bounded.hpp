#pragma once

#include <vector>

#include "lukas/matrix.hpp"
#include "lukas/path.hpp"
#include "lukas/poly.hpp"
#include "lukas/types.hpp"

namespace lukas {

/// Coefficient matrix of the height-bounded linear system in the unknowns
/// (f_0, g_0, h_0, f_1, g_1, h_1, ..., h_t); right-hand side (-1, 0, ..., 0).
struct SystemMatrix {
  int t = 0;
  Orientation orientation = Orientation::left_to_right;
  Matrix<IntPoly> entries;
};

SystemMatrix build_system_matrix(int t, Orientation o);

IntPoly det_poly(const SystemMatrix& m);

/// Cramer numerator: determinant with column idx (1-based) replaced by the
/// right-hand side.
IntPoly cramer_numerator(const SystemMatrix& m, int idx);

/// D_t by the three-term recurrence D_{t+2} + D_{t+1} + z D_t = 0.
IntPoly d_poly(int t);

/// Alternating-binomial Fibonacci polynomial, sum_j (-1)^j C(t+2-j, j) z^j.
IntPoly fibonacci_poly(int t);

/// Cramer numerator N^t_idx by recurrence (no determinants).
IntPoly n_poly(int t, int idx, Orientation o);

/// Generating function of bounded paths ending at height k with a final step
/// of the given kind. Throws Errc::height_above_bound when k > t.
RationalGF bounded_gf(int t, int k, EndKind kind, Orientation o);

/// Same family via N^t_{3k+i} / D_t for every k, i.e. straight Cramer.
RationalGF bounded_gf_cramer(int t, int k, EndKind kind, Orientation o);

/// All bounded paths of any end height.
RationalGF total_bounded_gf(int t, Orientation o);

/// c_t(n) for t = 0..n: paths of length n returning to 0 with height <= t.
std::vector<Count> height_distribution(int n);

}  // namespace lukas
