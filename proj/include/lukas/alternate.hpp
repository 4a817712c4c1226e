#pragma once

#include <cmath>
#include <cstddef>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "lukas/error.hpp"
#include "lukas/path.hpp"
#include "lukas/series.hpp"
#include "lukas/types.hpp"

namespace lukas {

/// Default real type for the singularity computations (64 decimal digits).
using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<64>>;

/// Large root of the kernel (1+z^2) s^2 + (2z^3-1) s + z^2 = 0, s(0) = 1,
/// by series Newton iteration seeded at 1.
Series s1_series(std::size_t order = default_order);

/// Small kernel root z^2 / ((1+z^2) s1), valuation 2.
Series s2_series(std::size_t order = default_order);

/// Generating function of alternate prefixes ending at height k.
Series alt_series(int k, EndKind kind, std::size_t order = default_order);

/// H(0) = s2 / z: alternate prefixes returning to 0 with a flat step.
Series alt_flat_zero_series(std::size_t order = default_order);

Count alt_dp_count(int n, int k, EndKind kind);

template <class Real>
Real alternate_sextic(const Real& z) {
  const Real z2 = z * z;
  const Real z3 = z2 * z;
  return 4 * z3 * z3 - 4 * z2 * z2 - 4 * z3 - 4 * z2 + 1;
}

template <class Real>
struct SexticRoot {
  Real value;
  Real residual;  // |p(value)|
};

template <class Real>
Real alternate_sextic_derivative(const Real& z) {
  const Real z2 = z * z;
  return 24 * z2 * z2 * z - 16 * z2 * z - 12 * z2 - 8 * z;
}

/// Smallest positive root of 4z^6 - 4z^4 - 4z^3 - 4z^2 + 1, the radius of
/// convergence of the alternate generating function. Bisection on (0, 1/2),
/// where p(0) > 0 > p(1/2) and the root is simple, down to a bracket
/// narrower than `tolerance`; Newton steps that stay inside the bracket then
/// refine the midpoint to the working precision of Real.
template <class Real = HighPrecision>
SexticRoot<Real> dominant_root(const Real& tolerance) {
  using std::abs;
  if (!(tolerance > 0)) throw Error(Errc::invalid_argument, "tolerance must be positive");
  Real lo = 0;
  Real hi = Real(1) / 2;
  while (hi - lo > tolerance) {
    const Real mid = (lo + hi) / 2;
    if (!(mid > lo && mid < hi)) break;
    if (alternate_sextic(mid) > 0) lo = mid;
    else hi = mid;
  }
  Real root = (lo + hi) / 2;
  for (int i = 0; i < 64; ++i) {
    const Real next = root - alternate_sextic(root) / alternate_sextic_derivative(root);
    if (!(next >= lo && next <= hi) || next == root) break;
    root = next;
  }
  return {root, Real(abs(alternate_sextic(root)))};
}

/// Leading-order asymptotic count of alternate paths of length n returning
/// to height 0, evaluated at the dominant root a. The amplitude is the
/// square-root coefficient of the generating function at z = a.
template <class Real = HighPrecision>
Real alt_asymptotic(int n, const Real& a) {
  if (n < 1) throw Error(Errc::invalid_argument, "alt_asymptotic needs n >= 1");
  using std::pow;
  using std::sqrt;
  const Real a2 = a * a;
  const Real a3 = a2 * a;
  const Real a4 = a2 * a2;
  const Real a6 = a3 * a3;
  const Real pi = boost::math::constants::pi<Real>();
  const Real amplitude = sqrt(Real(-6 * a6 + 4 * a4 + 3 * a3 + 2 * a2)) * (a + 1);
  const Real growth = pow(Real(2 * (-a2 + a + 1)), n);
  const Real scale = 2 * sqrt(pi) * a2 * (a2 + 1) * pow(Real(n), Real(3) / 2);
  return amplitude * growth / scale;
}

template <class Real = HighPrecision>
Real alt_asymptotic(int n) {
  return alt_asymptotic<Real>(n, dominant_root<Real>(Real(1e-40)).value);
}

}  // namespace lukas
