#include "lukas/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lukas/error.hpp"

namespace lukas {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPoly::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + Rational(*it);
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::non_invertible, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(Errc::non_integral, "inexact polynomial division");
  std::vector<Integer> rem = a.coefficients();
  const auto& d = b.coefficients();
  const Integer& lead = d.back();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer& top = rem[i + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(Errc::non_integral, "inexact polynomial division");
    }
    q[i] = top / lead;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q[i] * d[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(Errc::non_integral, "inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Series expand_rational(const RationalGF& g, std::size_t order) {
  const Integer d0 = g.den[0];
  if (d0 == 0) throw Error(Errc::non_expandable, "non-expandable: denominator vanishes at 0");
  if (d0 == 1 || d0 == -1) {
    auto ints = expand_rational_integer(g, order);
    std::vector<Rational> q(ints.begin(), ints.end());
    return Series(std::move(q), order);
  }
  const auto& den = g.den.coefficients();
  const Rational inv0(1, d0);
  std::vector<Rational> s(order);
  Rational acc;
  for (std::size_t n = 0; n < order; ++n) {
    acc = g.num[n];
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) {
      if (den[i] != 0) acc -= den[i] * s[n - i];
    }
    s[n] = acc * inv0;
  }
  return Series(std::move(s), order);
}

std::vector<Integer> expand_rational_integer(const RationalGF& g, std::size_t order) {
  const Integer d0 = g.den[0];
  if (d0 != 1 && d0 != -1) {
    throw Error(Errc::non_expandable, "integer expansion needs a unit constant denominator term");
  }
  const auto& den = g.den.coefficients();
  std::vector<Integer> s(order);
  Integer acc;
  for (std::size_t n = 0; n < order; ++n) {
    acc = g.num[n];
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) {
      if (den[i] != 0) acc -= den[i] * s[n - i];
    }
    s[n] = d0 == 1 ? acc : Integer(-acc);
  }
  return s;
}

}  // namespace lukas
