#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

namespace detail {

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DivisionByZero("polynomial division by zero leading coefficient");
  if (a % b != 0) throw InvalidArgument("inexact integer polynomial division");
  return a / b;
}

inline BigRational exact_quotient(const BigRational& a, const BigRational& b) {
  if (b == 0) throw DivisionByZero("polynomial division by zero leading coefficient");
  return a / b;
}

}  // namespace detail

/// Dense univariate polynomial, coefficients stored low degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Coeff& c) const {
    auto v = coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
  }

  /// Euclidean division. Over the integers every step must divide exactly,
  /// which always holds for monic divisors.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Coeff> rem = coeffs_;
    if (degree() < d.degree()) return {Polynomial{}, *this};
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<Coeff> quot(rem.size() - dd, Coeff(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
      if (rem[i] == 0) continue;
      Coeff q = detail::exact_quotient(rem[i], d.leading());
      quot[i - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  template <typename Value>
  Value evaluate(const Value& x) const {
    Value acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Value(coeffs_[i]);
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
      const Coeff& c = p.coeffs_[i];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> v(p.coeffs().begin(), p.coeffs().end());
  return RationalPolynomial(std::move(v));
}

/// Extended Euclid over Q: returns (g, s) with s*a == g (mod m), g monic gcd.
inline std::pair<RationalPolynomial, RationalPolynomial> extended_gcd_mod(
    const RationalPolynomial& a, const RationalPolynomial& m) {
  RationalPolynomial r0 = m, r1 = a % m;
  RationalPolynomial s0{}, s1{BigRational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RationalPolynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  BigRational inv_lead = 1 / r0.leading();
  return {r0.scaled(inv_lead), (s0 % m).scaled(inv_lead)};
}

}  // namespace verlinde
