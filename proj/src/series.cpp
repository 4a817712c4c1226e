#include "lukas/series.hpp"

#include <algorithm>
#include <sstream>

#include "lukas/error.hpp"

namespace lukas {

Series::Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

Series Series::constant(const Rational& c, std::size_t order) {
  return monomial(c, 0, order);
}

Series Series::monomial(const Rational& c, std::size_t power, std::size_t order) {
  Series s(order);
  if (power < order) s.coeffs_[power] = c;
  return s;
}

Series Series::from_poly(std::span<const Rational> coeffs, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i < coeffs.size() && i < order; ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

Series Series::from_ints(std::initializer_list<long> coeffs, std::size_t order) {
  std::vector<Rational> q;
  for (long c : coeffs) q.emplace_back(c);
  return from_poly(q, order);
}

const Rational& Series::operator[](std::size_t i) const {
  if (i >= coeffs_.size()) throw Error(Errc::index_out_of_range, "series coefficient beyond truncation order");
  return coeffs_[i];
}

Rational& Series::operator[](std::size_t i) {
  if (i >= coeffs_.size()) throw Error(Errc::index_out_of_range, "series coefficient beyond truncation order");
  return coeffs_[i];
}

std::size_t Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

Series Series::truncated(std::size_t order) const {
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, coeffs_.size()))),
                std::min(order, coeffs_.size()));
}

std::vector<Count> Series::to_counts() const {
  std::vector<Count> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw Error(Errc::non_integral, "coefficient " + std::to_string(i) + " is not an integer: " + coeffs_[i].get_str());
    }
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
Series operator*(Series s, const Rational& c) { return s *= c; }
Series operator*(const Rational& c, Series s) { return s *= c; }

Series operator*(const Series& lhs, const Series& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  const auto a = lhs.coefficients();
  const auto b = rhs.coefficients();
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(out), order);
}

Series operator/(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  if (order == 0) return Series(0);
  const auto bc = b.coefficients();
  if (bc[0] == 0) throw Error(Errc::non_invertible, "non-invertible series: zero constant term in divisor");
  const Rational inv0 = 1 / bc[0];
  std::vector<Rational> q(order);
  Rational acc;
  for (std::size_t n = 0; n < order; ++n) {
    acc = a.coefficients()[n];
    for (std::size_t i = 1; i <= n; ++i) {
      if (bc[i] != 0) acc -= bc[i] * q[n - i];
    }
    q[n] = acc * inv0;
  }
  return Series(std::move(q), order);
}

Series inverse(const Series& s) { return Series::constant(1, s.order()) / s; }

Series sqrt(const Series& a) {
  const std::size_t order = a.order();
  if (order == 0) return Series(0);
  if (a[0] != 1) throw Error(Errc::sqrt_non_unit, "sqrt requires unit constant term");
  Series s = Series::constant(1, 1);
  std::size_t prec = 1;
  const Rational half(1, 2);
  while (prec < order) {
    prec = std::min(2 * prec, order);
    Series widened(std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()), prec);
    s = (widened + a.truncated(prec) / widened) * half;
  }
  return s;
}

Series pow(const Series& s, unsigned exponent) {
  Series result = Series::constant(1, s.order());
  Series base = s;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Series shift_up(const Series& s, std::size_t k) {
  std::vector<Rational> out(s.order() + k);
  std::copy(s.coefficients().begin(), s.coefficients().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return Series(std::move(out), s.order() + k);
}

Series shift_down(const Series& s, std::size_t k) {
  if (s.valuation() < std::min(k, s.order())) {
    throw Error(Errc::invalid_argument, "shift_down: series not divisible by z^k");
  }
  if (k >= s.order()) return Series(0);
  const auto c = s.coefficients();
  return Series(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()), s.order() - k);
}

Series compose_poly(std::span<const Rational> p, const Series& s) {
  // Horner
  Series acc(s.order());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * s + Series::constant(*it, s.order());
  }
  return acc;
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < s.order(); ++i) {
    const auto& c = s[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational mag = abs(c);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << (mag != 1 ? "*z" : "z");
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  os << " + O(z^" << s.order() << ')';
  return os.str();
}

Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

Series catalan_gf(std::size_t order) {
  const Series root = sqrt(Series::from_ints({1, -4}, order + 1));
  return shift_down(Series::constant(1, order + 1) - root, 1) * Rational(1, 2);
}

Count lukas_power_coeff(long n, long k) {
  if (n < 0 || k < 0) throw Error(Errc::invalid_argument, "lukas_power_coeff: negative argument");
  if (n == 0) return 1;
  return binomial(2 * n - 1 + k, n) - binomial(2 * n - 1 + k, n - 1);
}

Count lukas_power_coeff_ballot(long n, long k) {
  if (n < 0 || k < 1) throw Error(Errc::invalid_argument, "lukas_power_coeff_ballot: needs n >= 0, k >= 1");
  Integer num = k * binomial(2 * n + k, n);
  Integer den = 2 * n + k;
  if (num % den != 0) throw Error(Errc::non_integral, "ballot form did not divide exactly");
  return num / den;
}

}  // namespace lukas
