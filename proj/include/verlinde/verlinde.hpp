#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/group.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// Highest-weight coordinates t = (t_1, ..., t_n), each t_i >= 1.
struct WeightVector {
  std::vector<int> t;

  std::size_t size() const { return t.size(); }
  int operator[](std::size_t i) const { return t[i]; }
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

struct VerlindeQuery {
  GroupId group;
  int level = 1;
  int genus = 2;

  void validate() const {
    group.validate();
    if (level < 1) throw InvalidArgument("level must be >= 1");
    if (genus < 1) throw InvalidArgument("genus must be >= 1");
  }
  friend auto operator<=>(const VerlindeQuery&, const VerlindeQuery&) = default;
};

inline constexpr std::size_t kDefaultMaxWeights = 2'000'000;

/// Admissible region: t_i >= 1, sum coeffs[i]*t_i <= bound, t_i <= upper[i].
struct WeightDomain {
  std::vector<int> coeffs;
  long bound = 0;
  std::vector<long> upper;
};

/// Spin_3 is computed as SL_2; everything else as itself.
inline GroupId evaluation_group(const GroupId& g) {
  g.validate();
  return g.routes_to_sl2() ? GroupId::sl(2) : g;
}

inline WeightDomain weight_domain(const GroupId& group, int level) {
  const GroupId g = evaluation_group(group);
  const int n = g.rank();
  WeightDomain d;
  switch (g.family) {
    case Family::SL:
      d.coeffs.assign(n, 1);
      d.bound = level + n;
      break;
    case Family::SpinEven:
      if (n == 2) {
        // D_2 = A_1 x A_1 is not simple: one level constraint per factor.
        d.coeffs.assign(2, 0);
        d.bound = 0;
        d.upper.assign(2, level + 1);
        return d;
      }
      d.coeffs.assign(n, 1);
      for (int i = 1; i <= n - 3; ++i) d.coeffs[i] = 2;
      d.bound = level + 2L * n - 3;
      break;
    case Family::SpinOdd:
      d.coeffs.assign(n, 1);
      for (int i = 1; i <= n - 2; ++i) d.coeffs[i] = 2;
      d.bound = level + 2L * n - 2;
      break;
  }
  d.upper.assign(n, d.bound);
  return d;
}

namespace detail {

inline void enumerate_rec(const WeightDomain& d, std::vector<long>& tail_min, std::size_t i, long used,
                          std::vector<int>& cur, std::vector<WeightVector>& out, std::size_t max_count) {
  if (i == cur.size()) {
    if (out.size() >= max_count) {
      throw ResourceBound("weight domain exceeds " + std::to_string(max_count) + " vectors");
    }
    out.push_back(WeightVector{cur});
    return;
  }
  for (long t = 1; t <= d.upper[i]; ++t) {
    const long next = used + d.coeffs[i] * t;
    if (next + tail_min[i + 1] > d.bound && d.coeffs[i] != 0) break;
    cur[i] = static_cast<int>(t);
    enumerate_rec(d, tail_min, i + 1, next, cur, out, max_count);
  }
}

}  // namespace detail

/// All admissible weight vectors at the given level, in lexicographic order.
inline std::vector<WeightVector> enumerate_weights(const GroupId& group, int level,
                                                   std::size_t max_count = kDefaultMaxWeights) {
  if (level < 1) throw InvalidArgument("level must be >= 1");
  const WeightDomain d = weight_domain(group, level);
  const std::size_t n = d.coeffs.size();
  std::vector<long> tail_min(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) tail_min[i] = tail_min[i + 1] + d.coeffs[i];
  std::vector<WeightVector> out;
  std::vector<int> cur(n, 0);
  detail::enumerate_rec(d, tail_min, 0, 0, cur, out, max_count);
  return out;
}

/// Cyclotomic order in which a query is evaluated.
inline long ambient_order(const GroupId& group, int level) {
  const GroupId g = evaluation_group(group);
  const long n = g.rank();
  switch (g.family) {
    case Family::SL: return level + n + 1;
    case Family::SpinEven: return level + 2 * n - 2;
    case Family::SpinOdd: return 2 * (level + 2 * n - 1);
  }
  return 0;
}

/// P with N_l = P^(g-1) * sum_t S_t^-(g-1).
inline BigInt prefactor(const GroupId& group, int level) {
  const GroupId g = evaluation_group(group);
  const unsigned long n = static_cast<unsigned long>(g.rank());
  switch (g.family) {
    case Family::SL: return BigInt(g.param) * pow(BigInt(level + g.param), n);
    case Family::SpinEven: return 4 * pow(BigInt(level + 2 * static_cast<long>(n) - 2), n);
    case Family::SpinOdd: return 4 * pow(BigInt(level + 2 * static_cast<long>(n) - 1), n);
  }
  return 0;
}

/// Arguments a such that S_t = prod_a 4 sin^2(pi a / order).
struct SineArguments {
  long order = 0;
  std::vector<long> args;
};

inline SineArguments squared_sine_arguments(const GroupId& group, int level, const WeightVector& w) {
  const GroupId g = evaluation_group(group);
  const std::size_t n = static_cast<std::size_t>(g.rank());
  if (w.size() != n) throw InvalidArgument("weight vector length does not match the group rank");
  // prefix[i] = t_1 + ... + t_i (1-based t), so sum_{a..b} = prefix[b] - prefix[a-1]
  std::vector<long> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + w[i];
  auto range = [&](std::size_t a, std::size_t b) -> long { return b < a ? 0 : prefix[b] - prefix[a - 1]; };

  SineArguments s;
  s.order = ambient_order(group, level);
  switch (g.family) {
    case Family::SL:
      for (std::size_t i = 1; i <= n + 1; ++i)
        for (std::size_t j = i + 1; j <= n + 1; ++j) s.args.push_back(range(i, j - 1));
      break;
    case Family::SpinEven:
      for (std::size_t i = 1; i <= n - 1; ++i) {
        s.args.push_back(range(i, n - 1));
        s.args.push_back(range(i, n - 2) + w[n - 1]);
      }
      for (std::size_t i = 1; i <= n - 1; ++i) {
        for (std::size_t j = i + 1; j <= n - 1; ++j) {
          const long head = range(i, j - 1);
          s.args.push_back(head);
          s.args.push_back(head + 2 * range(j, n - 2) + w[n - 2] + w[n - 1]);
        }
      }
      break;
    case Family::SpinOdd:
      for (std::size_t i = 1; i <= n; ++i) s.args.push_back(2 * range(i, n - 1) + w[n - 1]);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          const long head = range(i, j - 1);
          s.args.push_back(2 * head);
          s.args.push_back(2 * (head + 2 * range(j, n - 1) + w[n - 1]));
        }
      }
      break;
  }
  return s;
}

/// One summand S_t^-(g-1) of the Verlinde sum, before the prefactor.
struct TermContribution {
  WeightVector t;
  CyclotomicNumber value;
};

inline std::vector<TermContribution> verlinde_contributions(const VerlindeQuery& q,
                                                            std::size_t max_weights = kDefaultMaxWeights) {
  q.validate();
  const long k = ambient_order(q.group, q.level);
  const auto weights = enumerate_weights(q.group, q.level, max_weights);
  // 4 sin^2 is symmetric under a -> k - a; invert each distinct factor once.
  std::map<long, CyclotomicNumber> inverse_factor;
  auto inv = [&](long a) -> const CyclotomicNumber& {
    long r = positive_mod(a, k);
    r = std::min(r, k - r);
    auto it = inverse_factor.find(r);
    if (it == inverse_factor.end()) it = inverse_factor.emplace(r, cyc_inverse(four_sin_sq(k, r))).first;
    return it->second;
  };
  const auto exponent = static_cast<unsigned long>(q.genus - 1);
  std::vector<TermContribution> out;
  out.reserve(weights.size());
  for (const auto& w : weights) {
    if (exponent == 0) {
      out.push_back({w, CyclotomicNumber::one(k)});
      continue;
    }
    CyclotomicNumber prod = CyclotomicNumber::one(k);
    for (long a : squared_sine_arguments(q.group, q.level, w).args) prod *= inv(a);
    out.push_back({w, prod.pow(exponent)});
  }
  return out;
}

/// P^(g-1) * (sum of the given contributions), extracted as an integer.
template <typename Range>
BigInt assemble_contributions(const VerlindeQuery& q, const Range& contributions) {
  const long k = ambient_order(q.group, q.level);
  CyclotomicNumber sum = CyclotomicNumber::zero(k);
  for (const TermContribution& c : contributions) sum += c.value;
  const BigInt scale = pow(prefactor(q.group, q.level), static_cast<unsigned long>(q.genus - 1));
  return to_rational_integer(sum.scaled(BigRational(scale)));
}

/// Exact N_l(G) at genus g.
inline BigInt verlinde_number(const VerlindeQuery& q, std::size_t max_weights = kDefaultMaxWeights) {
  return assemble_contributions(q, verlinde_contributions(q, max_weights));
}

struct SplitValue {
  BigInt plus;
  BigInt minus;
  friend bool operator==(const SplitValue&, const SplitValue&) = default;
};

/// N = N+ + N- for odd spin groups, split on the parity of t_n (t_1 for Spin_3).
inline SplitValue verlinde_split(const VerlindeQuery& q, std::size_t max_weights = kDefaultMaxWeights) {
  q.validate();
  if (q.group.family != Family::SpinOdd) {
    throw InvalidArgument("the N+/N- split is defined only for odd spin groups, not " + q.group.tag());
  }
  std::vector<TermContribution> even, odd;
  for (auto& c : verlinde_contributions(q, max_weights)) {
    (c.t.t.back() % 2 == 0 ? even : odd).push_back(std::move(c));
  }
  return {assemble_contributions(q, even), assemble_contributions(q, odd)};
}

/// A_t * B_t for Spin_{2n+1} at level 2, built from the factors
/// (1 - xi^e) with xi = zeta_{4n+2} and (1 - zeta^e) with zeta = xi^2.
inline BigRational term_value(const GroupId& group, const WeightVector& w) {
  group.validate();
  if (group.family != Family::SpinOdd || group.param < 5) {
    throw InvalidArgument("term_value needs Spin_{2n+1} with n >= 2");
  }
  const long n = group.rank();
  {
    const auto admissible = enumerate_weights(group, 2);
    if (!std::binary_search(admissible.begin(), admissible.end(), w)) {
      throw InvalidArgument("weight vector is not admissible at level 2");
    }
  }
  const long xi_order = 4 * n + 2;
  const long zeta_order = 2 * n + 1;
  auto one_minus_xi = [&](long e) { return CyclotomicNumber::one(xi_order) - root_power(xi_order, e); };
  auto one_minus_zeta = [&](long e) { return CyclotomicNumber::one(xi_order) - root_power(xi_order, 2 * e); };
  auto t = [&](long i) -> long { return w[static_cast<std::size_t>(i - 1)]; };
  auto sum = [&](long a, long b) {
    long s = 0;
    for (long i = a; i <= b; ++i) s += t(i);
    return s;
  };

  CyclotomicNumber a_t = CyclotomicNumber::one(xi_order);
  for (long i = 1; i <= n; ++i) {
    const long e = 2 * sum(i, n - 1) + t(n);
    a_t *= one_minus_xi(e) * one_minus_xi(4 * n + 2 - e);
  }
  CyclotomicNumber b_t = CyclotomicNumber::one(xi_order);
  for (long i = 1; i <= n; ++i) {
    for (long j = i + 1; j <= n; ++j) {
      const long e1 = sum(i, j - 1);
      const long e2 = e1 + 2 * sum(j, n - 1) + t(n);
      b_t *= one_minus_zeta(e1) * one_minus_zeta(zeta_order - e1);
      b_t *= one_minus_zeta(e2) * one_minus_zeta(zeta_order - e2);
    }
  }
  return to_rational(a_t * b_t);
}

/// Floating-point evaluation of the trigonometric sums, written directly from
/// the single-sine form with its own brute-force domain scan. Used only as a
/// cross-check; relative accuracy degrades as the genus grows.
inline double verlinde_float(const VerlindeQuery& q) {
  q.validate();
  const GroupId g = evaluation_group(q.group);
  const int n = g.rank();
  const int l = q.level;
  const double pi = std::numbers::pi;

  double denom = 0;  // the "l + ..." inside sin(pi / denom * x)
  double pref = 0;
  int box = 0;
  switch (g.family) {
    case Family::SL:
      denom = l + n + 1;
      pref = (n + 1) * std::pow(denom, n);
      box = l + n;
      break;
    case Family::SpinEven:
      denom = l + 2 * n - 2;
      pref = 4 * std::pow(denom, n);
      box = n == 2 ? l + 1 : l + 2 * n - 3;
      break;
    case Family::SpinOdd:
      denom = l + 2 * n - 1;
      pref = 4 * std::pow(denom, n);
      box = l + 2 * n - 2;
      break;
  }
  auto s = [&](double x) { return std::sin(pi / denom * x); };

  std::vector<int> t(static_cast<std::size_t>(n), 1);
  auto T = [&](int i) -> double { return t[static_cast<std::size_t>(i - 1)]; };
  auto sum = [&](int a, int b) {
    double r = 0;
    for (int i = a; i <= b; ++i) r += T(i);
    return r;
  };
  auto admissible = [&] {
    switch (g.family) {
      case Family::SL: return sum(1, n) <= l + n;
      case Family::SpinEven:
        if (n == 2) return true;
        return T(1) + 2 * sum(2, n - 2) + T(n - 1) + T(n) <= l + 2 * n - 3;
      case Family::SpinOdd: return T(1) + 2 * sum(2, n - 1) + T(n) <= l + 2 * n - 2;
    }
    return false;
  };

  double total = 0;
  for (;;) {
    if (admissible()) {
      double prod = 1;
      switch (g.family) {
        case Family::SL:
          for (int i = 1; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 1; ++j) prod *= 2 * s(sum(i, j - 1));
          break;
        case Family::SpinEven:
          for (int i = 1; i <= n - 1; ++i) prod *= 4 * s(sum(i, n - 1)) * s(sum(i, n - 2) + T(n));
          for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
              prod *= 4 * s(sum(i, j - 1)) * s(sum(i, j - 1) + 2 * sum(j, n - 2) + T(n - 1) + T(n));
          break;
        case Family::SpinOdd:
          for (int i = 1; i <= n; ++i) prod *= 2 * s(sum(i, n - 1) + T(n) / 2);
          for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
              prod *= 4 * s(sum(i, j - 1)) * s(sum(i, j - 1) + 2 * sum(j, n - 1) + T(n));
          break;
      }
      total += std::pow(pref / (prod * prod), q.genus - 1);
    }
    int i = 0;
    while (i < n && t[static_cast<std::size_t>(i)] == box) t[static_cast<std::size_t>(i++)] = 1;
    if (i == n) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return total;
}

/// Optional thread-safe memo of (group, level, genus) -> N_l(G).
class VerlindeMemo {
 public:
  BigInt number(const VerlindeQuery& q) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(q); it != table_.end()) return it->second;
    }
    BigInt value = verlinde_number(q);
    std::lock_guard lock(mu_);
    return table_.emplace(q, value).first->second;
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return table_.size();
  }
  void clear() {
    std::lock_guard lock(mu_);
    table_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::map<VerlindeQuery, BigInt> table_;
};

}  // namespace verlinde
