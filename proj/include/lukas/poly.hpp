#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lukas/series.hpp"
#include "lukas/types.hpp"

namespace lukas {

/// Polynomial in z with integer coefficients, lowest degree first. Trailing
/// zeros are always trimmed; the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(long c);  // NOLINT(google-explicit-constructor)

  static IntPoly z() { return IntPoly{0, 1}; }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^i (zero beyond the degree).
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Rational evaluate(const Rational& z) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(IntPoly a, const IntPoly& b);

/// Exact quotient a / b in Z[z]; throws Errc::non_integral if b does not
/// divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Human-readable form, highest degree first: "3*z^2 - 4*z + 1".
std::string to_string(const IntPoly& p);

/// num / den as a power series. den(0) != 0 is required for expansion.
struct RationalGF {
  IntPoly num;
  IntPoly den;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Expands g to `order` terms through the linear recurrence induced by the
/// denominator. Throws Errc::non_expandable when den(0) = 0.
Series expand_rational(const RationalGF& g, std::size_t order);

/// The same expansion restricted to integer output; den(0) must be +-1.
std::vector<Integer> expand_rational_integer(const RationalGF& g, std::size_t order);

}  // namespace lukas
