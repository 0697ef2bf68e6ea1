#pragma once

#include <gmpxx.h>

#include <string>

#include "verlinde/errors.hpp"

namespace verlinde {

using BigInt = mpz_class;
/// mpq_class keeps every result in lowest terms with a positive denominator.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow(long base, unsigned long exp) { return pow(BigInt(base), exp); }

inline BigRational pow(const BigRational& base, unsigned long exp) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return r;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Parses a base-10 integer; rejects anything else (including empty strings).
inline BigInt parse_bigint(const std::string& text) {
  const auto digits = text.find_first_not_of('-') == 1 ? text.substr(1) : text;
  BigInt z;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      z.set_str(text, 10) != 0) {
    throw InvalidArgument("not a decimal integer: '" + text + "'");
  }
  return z;
}

}  // namespace verlinde
