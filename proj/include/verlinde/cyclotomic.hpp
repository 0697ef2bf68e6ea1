#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/polynomial.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

inline long positive_mod(long a, long k) {
  long r = a % k;
  return r < 0 ? r + k : r;
}

inline long euler_phi(long k) {
  long result = k;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace detail {

struct CyclotomicModulus {
  long order = 0;
  IntPolynomial phi;
  RationalPolynomial phi_q;
  /// Rows x^j mod Phi_k for j = deg .. 2*deg-2, used to fold products back.
  std::vector<std::vector<BigRational>> fold;
};

inline IntPolynomial compute_cyclotomic(long k, std::map<long, IntPolynomial>& memo);

inline IntPolynomial compute_cyclotomic(long k, std::map<long, IntPolynomial>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  IntPolynomial p = IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(k)) - IntPolynomial{BigInt(1)};
  for (long d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto [q, r] = p.divmod(compute_cyclotomic(d, memo));
    if (!r.is_zero()) throw IntegralityFailure("cyclotomic division left a remainder");
    p = std::move(q);
  }
  memo.emplace(k, p);
  return p;
}

inline const CyclotomicModulus& modulus(long k) {
  static std::mutex mu;
  static std::map<long, IntPolynomial> poly_memo;
  static std::map<long, std::shared_ptr<const CyclotomicModulus>> table;
  std::lock_guard lock(mu);
  if (auto it = table.find(k); it != table.end()) return *it->second;
  auto m = std::make_shared<CyclotomicModulus>();
  m->order = k;
  m->phi = compute_cyclotomic(k, poly_memo);
  m->phi_q = to_rational(m->phi);
  const std::size_t deg = static_cast<std::size_t>(m->phi.degree());
  for (std::size_t j = deg; j + 1 < 2 * deg; ++j) {
    auto red = RationalPolynomial::monomial(BigRational(1), j) % m->phi_q;
    std::vector<BigRational> row(deg, BigRational(0));
    for (std::size_t i = 0; i < red.coeffs().size(); ++i) row[i] = red.coeffs()[i];
    m->fold.push_back(std::move(row));
  }
  auto [it, _] = table.emplace(k, std::move(m));
  return *it->second;
}

}  // namespace detail

/// The k-th cyclotomic polynomial, built by dividing x^k - 1 by Phi_d for
/// every proper divisor d.
inline IntPolynomial cyclotomic_polynomial(long k) {
  if (k < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  return detail::modulus(k).phi;
}

/// Element of Q(zeta_k), zeta_k = exp(2 pi i / k), stored as its unique
/// representative of degree < phi(k) modulo Phi_k.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;

  /// Rational constant in Q(zeta_k).
  CyclotomicNumber(long order, const BigRational& value) : order_(check_order(order)) {
    coeffs_.assign(degree(), BigRational(0));
    coeffs_[0] = value;
  }

  /// Reduces an arbitrary polynomial in zeta_k.
  static CyclotomicNumber from_polynomial(long order, const RationalPolynomial& p) {
    CyclotomicNumber c;
    c.order_ = check_order(order);
    auto red = p % detail::modulus(order).phi_q;
    c.coeffs_.assign(c.degree(), BigRational(0));
    for (std::size_t i = 0; i < red.coeffs().size(); ++i) c.coeffs_[i] = red.coeffs()[i];
    return c;
  }

  static CyclotomicNumber zero(long order) { return {order, BigRational(0)}; }
  static CyclotomicNumber one(long order) { return {order, BigRational(1)}; }

  long order() const { return order_; }
  std::size_t degree() const { return static_cast<std::size_t>(detail::modulus(order_).phi.degree()); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.require_same(b);
    const auto& mod = detail::modulus(a.order_);
    const std::size_t d = a.coeffs_.size();
    std::vector<BigRational> full(2 * d - 1, BigRational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.coeffs_[j] == 0) continue;
        full[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    CyclotomicNumber r;
    r.order_ = a.order_;
    r.coeffs_.assign(full.begin(), full.begin() + static_cast<long>(d));
    for (std::size_t j = d; j < full.size(); ++j) {
      if (full[j] == 0) continue;
      const auto& row = mod.fold[j - d];
      for (std::size_t i = 0; i < d; ++i)
        if (row[i] != 0) r.coeffs_[i] += full[j] * row[i];
    }
    return r;
  }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  CyclotomicNumber scaled(const BigRational& s) const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  /// Multiplicative inverse via extended Euclid against Phi_k over Q.
  CyclotomicNumber inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    const auto& mod = detail::modulus(order_);
    auto [g, s] = extended_gcd_mod(RationalPolynomial(coeffs_), mod.phi_q);
    if (g.degree() != 0) throw IntegralityFailure("cyclotomic polynomial is not irreducible?");
    return from_polynomial(order_, s);
  }

  CyclotomicNumber pow(unsigned long e) const {
    CyclotomicNumber result = one(order_);
    CyclotomicNumber base = *this;
    while (e > 0) {
      if (e & 1UL) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Numerical embedding zeta_k -> exp(2 pi i / k).
  std::complex<double> to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
      acc += coeffs_[j].get_d() * std::polar(1.0, angle);
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& c) {
    return os << RationalPolynomial(c.coeffs_) << " (mod Phi_" << c.order_ << ")";
  }

 private:
  static long check_order(long k) {
    if (k < 1) throw InvalidArgument("cyclotomic order must be >= 1");
    return k;
  }
  void require_same(const CyclotomicNumber& o) const {
    if (order_ != o.order_) {
      throw OrderMismatch("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                          std::to_string(o.order_));
    }
  }

  long order_ = 1;
  std::vector<BigRational> coeffs_{BigRational(0)};
};

/// zeta_k^(a mod k).
inline CyclotomicNumber root_power(long k, long a) {
  if (k < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  return CyclotomicNumber::from_polynomial(
      k, RationalPolynomial::monomial(BigRational(1), static_cast<std::size_t>(positive_mod(a, k))));
}

inline CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }
inline CyclotomicNumber cyc_inverse(const CyclotomicNumber& a) { return a.inverse(); }

/// 4 sin^2(pi a / k) = (1 - zeta_k^a)(1 - zeta_k^-a).
inline CyclotomicNumber four_sin_sq(long k, long a) {
  if (k < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  if (positive_mod(a, k) == 0) {
    throw ZeroFactor("4 sin^2(pi*" + std::to_string(a) + "/" + std::to_string(k) + ") vanishes");
  }
  // (1 - z^a)(1 - z^-a) = 2 - z^a - z^(k-a)
  auto two = CyclotomicNumber(k, BigRational(2));
  return two - root_power(k, a) - root_power(k, -a);
}

/// Trusted integrality assertion used for final extraction.
inline BigRational to_rational(const CyclotomicNumber& a) {
  if (!a.is_rational()) throw IntegralityFailure("cyclotomic value is not rational: " + [&] {
      std::ostringstream os;
      os << a;
      return os.str();
    }());
  return a.coeffs()[0];
}

inline BigInt to_rational_integer(const CyclotomicNumber& a) {
  BigRational q = to_rational(a);
  if (!is_integer(q)) throw IntegralityFailure("cyclotomic value is not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace verlinde
