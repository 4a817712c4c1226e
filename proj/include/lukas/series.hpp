#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lukas/types.hpp"

namespace lukas {

inline constexpr std::size_t default_order = 64;

/// Truncated power series with exact rational coefficients. Coefficients
/// 0..order()-1 are known; everything from order() on is unknown.
/// Binary operations truncate to the smaller operand order.
class Series {
 public:
  Series() = default;

  /// Zero series known to `order` terms.
  explicit Series(std::size_t order) : coeffs_(order) {}

  /// Takes the first `order` coefficients of `coeffs`, zero-padding.
  Series(std::vector<Rational> coeffs, std::size_t order);

  static Series constant(const Rational& c, std::size_t order);

  /// c * z^power, known to `order` terms.
  static Series monomial(const Rational& c, std::size_t power, std::size_t order);

  /// Polynomial given lowest degree first.
  static Series from_poly(std::span<const Rational> coeffs, std::size_t order);
  static Series from_ints(std::initializer_list<long> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }

  /// Coefficient of z^i; throws Errc::index_out_of_range for i >= order().
  const Rational& operator[](std::size_t i) const;
  Rational& operator[](std::size_t i);

  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Lowest index with a nonzero coefficient, or order() for the zero series.
  std::size_t valuation() const;

  Series truncated(std::size_t order) const;

  /// Exact integer coefficients; throws Errc::non_integral otherwise.
  std::vector<Count> to_counts() const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rational& c);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(Series lhs, const Series& rhs);
Series operator-(Series lhs, const Series& rhs);
Series operator*(const Series& lhs, const Series& rhs);
Series operator*(Series s, const Rational& c);
Series operator*(const Rational& c, Series s);

/// Quotient q with q*b = a to the common order. Throws Errc::non_invertible
/// when b(0) = 0.
Series operator/(const Series& a, const Series& b);

Series inverse(const Series& s);

/// Square root with constant term +1, by Newton iteration that doubles the
/// number of correct coefficients per round. Throws Errc::sqrt_non_unit
/// unless a(0) = 1.
Series sqrt(const Series& a);

Series pow(const Series& s, unsigned exponent);

/// Multiplies by z^k. The known range grows by k.
Series shift_up(const Series& s, std::size_t k);

/// Divides by z^k; requires the first k coefficients to vanish.
Series shift_down(const Series& s, std::size_t k);

/// Evaluates a polynomial in the series: sum_i p[i] * s^i.
Series compose_poly(std::span<const Rational> p, const Series& s);

std::string to_string(const Series& s);

// --- Catalan machinery -------------------------------------------------------

/// Binomial coefficient, total: C(a, b) = 0 whenever b < 0 or b > a.
Integer binomial(long a, long b);

Integer catalan(long n);

/// L(z) = (1 - sqrt(1 - 4z)) / (2z) to `order` terms, via series sqrt.
Series catalan_gf(std::size_t order);

/// [z^n] L(z)^k = C(2n-1+k, n) - C(2n-1+k, n-1), with [z^0] L^0 = 1.
Count lukas_power_coeff(long n, long k);

/// The equivalent closed form k/(2n+k) * C(2n+k, n), k >= 1.
Count lukas_power_coeff_ballot(long n, long k);

}  // namespace lukas
