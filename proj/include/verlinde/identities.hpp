#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verlinde/clifford.hpp"
#include "verlinde/closed_forms.hpp"
#include "verlinde/lie_heights.hpp"
#include "verlinde/prym_theta.hpp"
#include "verlinde/verlinde.hpp"

namespace verlinde {

enum class Status { pass, fail };

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

using ParameterList = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one identity check. `lhs` is always the value computed by the
/// evaluator under test; `rhs` comes from an independent route.
struct IdentityReport {
  std::string name;
  ParameterList parameters;
  BigInt lhs;
  BigInt rhs;
  Status status = Status::fail;
  double elapsed_ms = 0;
  std::string label;  // e.g. "conjecture-under-test"
};

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  std::vector<int> values() const {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  }
};

namespace detail {

/// Natural ordering: digit runs compare by value, so "spin:10" sorts after
/// "spin:3" and "10" after "2". Values here are unsigned digit runs.
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view x(a.data() + i, ie - i), y(b.data() + j, je - j);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

inline bool parameters_less(const ParameterList& a, const ParameterList& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return natural_less(a[i].second, b[i].second);
  }
  return a.size() < b.size();
}

template <typename Fn>
IdentityReport timed(std::string name, ParameterList params, Fn&& compute) {
  const auto start = std::chrono::steady_clock::now();
  auto [lhs, rhs] = compute();
  IdentityReport r;
  r.name = std::move(name);
  r.parameters = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.status = r.lhs == r.rhs ? Status::pass : Status::fail;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline ParameterList group_params(const GroupId& g, int level, int genus) {
  return {{"group", g.tag()}, {"level", std::to_string(level)}, {"g", std::to_string(genus)}};
}

}  // namespace detail

inline void normalize_order(std::vector<IdentityReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
    if (a.name != b.name) return a.name < b.name;
    return detail::parameters_less(a.parameters, b.parameters);
  });
}

/// verlinde_number against the closed forms at levels 1 and 2: SL_2, SL_4,
/// Spin_{2n} (n >= 4) and Spin_{2n+1} (n >= 2) for n in `ranks`.
inline std::vector<IdentityReport> check_closed_forms(IntRange genus, IntRange ranks, std::vector<int> levels = {1, 2}) {
  std::vector<IdentityReport> out;
  auto add = [&](const GroupId& grp, int level, int g, ClosedForm form, int n) {
    out.push_back(detail::timed("closed_form." + std::string(name_of(form)), detail::group_params(grp, level, g), [&] {
      return std::pair{verlinde_number({grp, level, g}), closed_form(form, {n, g})};
    }));
  };
  for (int g : genus.values()) {
    for (int level : levels) {
      if (level != 1 && level != 2) throw InvalidArgument("closed forms exist only for levels 1 and 2");
      const bool one = level == 1;
      add(GroupId::sl(2), level, g, one ? ClosedForm::N1_sl2 : ClosedForm::N2_sl2, 1);
      add(GroupId::sl(4), level, g, one ? ClosedForm::N1_sl4 : ClosedForm::N2_sl4, 3);
      for (int n : ranks.values()) {
        if (n >= 4) add(GroupId::spin(2 * n), level, g, one ? ClosedForm::N1_spin_even : ClosedForm::N2_spin_even, n);
        if (n >= 2) add(GroupId::spin(2 * n + 1), level, g, one ? ClosedForm::N1_spin_odd : ClosedForm::N2_spin_odd, n);
      }
    }
  }
  return out;
}

/// Jacobian-plus-Pryms numerology for Spin_{2n+1} with its orthogonal
/// representation, evaluated at the level given by its height.
inline std::vector<IdentityReport> check_prym_identity(int n, int g) {
  if (n < 1 || g < 2) throw InvalidArgument("check_prym_identity needs n >= 1, g >= 2");
  const GroupId grp = GroupId::spin(2 * n + 1);
  const BigRational h = height(grp, RepId::vector);
  const int level = static_cast<int>(h.get_num().get_si());
  const int m = 2 * n + 1;
  const auto params = detail::group_params(grp, level, g);
  std::vector<IdentityReport> out;
  out.push_back(detail::timed("prym.even", params, [&] {
    return std::pair{verlinde_number({grp, level, g}), prym_sum(g, m, Parity::even)};
  }));
  const auto start = std::chrono::steady_clock::now();
  const SplitValue split = verlinde_split({grp, level, g});
  const double split_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const BigInt twisted = split.minus - split.plus;
  IdentityReport odd = detail::timed("prym.odd", params, [&] { return std::pair{twisted, prym_sum(g, m, Parity::odd)}; });
  odd.label = "conjecture-under-test";
  odd.elapsed_ms += split_ms;
  out.push_back(std::move(odd));
  IdentityReport eq = detail::timed("prym.twisted_closed_form", params,
                                    [&] { return std::pair{twisted, closed_form(ClosedForm::twisted_spin_odd, {n, g})}; });
  eq.label = "conjecture-under-test";
  out.push_back(std::move(eq));
  out.push_back(detail::timed("prym.minus_closed_form", params, [&] {
    return std::pair{BigInt(2 * split.minus), closed_form(ClosedForm::N2_minus_spin_odd_x2, {n, g})};
  }));
  return out;
}

inline std::vector<IdentityReport> check_spin8(IntRange genus) {
  std::vector<IdentityReport> out;
  const GroupId grp = GroupId::spin(8);
  for (int g : genus.values()) {
    out.push_back(detail::timed("spin8.prym_total", detail::group_params(grp, 2, g), [&] {
      return std::pair{verlinde_number({grp, 2, g}), prym_sum(g, 8, Parity::total)};
    }));
    // The n-dependent tail 2^{g-1}(2^{2g} - n^g) of the even-spin level-2 form vanishes at n = 4.
    out.push_back(detail::timed("spin8.tail_vanishes", {{"g", std::to_string(g)}}, [&] {
      const auto ug = static_cast<unsigned long>(g);
      return std::pair{BigInt(pow(2, ug - 1) * (pow(2, 2 * ug) - pow(4, ug))), BigInt(0)};
    }));
  }
  return out;
}

struct ReciprocitySpec {
  std::vector<std::pair<int, int>> pairs;  // (l, m), both odd >= 5
  std::vector<int> spin3_levels;           // l odd >= 5: N^-_{2l}(Spin_3) = N^-_3(Spin_l)
};

inline std::vector<IdentityReport> check_reciprocity(const ReciprocitySpec& spec, IntRange genus) {
  std::vector<IdentityReport> out;
  auto odd5 = [](int v) {
    if (v < 5 || v % 2 == 0) throw InvalidArgument("reciprocity needs odd values >= 5, got " + std::to_string(v));
  };
  for (int g : genus.values()) {
    for (auto [l, m] : spec.pairs) {
      odd5(l);
      odd5(m);
      out.push_back(detail::timed(
          "reciprocity.odd", {{"l", std::to_string(l)}, {"m", std::to_string(m)}, {"g", std::to_string(g)}}, [&] {
            return std::pair{verlinde_split({GroupId::spin(m), l, g}).minus,
                             verlinde_split({GroupId::spin(l), m, g}).minus};
          }));
    }
    for (int l : spec.spin3_levels) {
      odd5(l);
      out.push_back(detail::timed("reciprocity.spin3", {{"l", std::to_string(l)}, {"g", std::to_string(g)}}, [&] {
        return std::pair{verlinde_split({GroupId::spin(3), 2 * l, g}).minus,
                         verlinde_split({GroupId::spin(l), 3, g}).minus};
      }));
    }
  }
  return out;
}

inline std::vector<IdentityReport> check_heights() {
  std::vector<IdentityReport> out;
  auto add = [&](const GroupId& grp, RepId rep, const char* rep_name, long expected) {
    out.push_back(detail::timed("height", {{"group", grp.tag()}, {"rep", rep_name}}, [&] {
      const BigRational h = height(grp, rep);
      // A non-integral height can never equal an integer; encode it as -1.
      return std::pair{is_integer(h) ? BigInt(h.get_num()) : BigInt(-1), BigInt(expected)};
    }));
  };
  add(GroupId::spin(3), RepId::adjoint, "adjoint", 4);
  for (int m = 5; m <= 13; ++m) add(GroupId::spin(m), RepId::vector, "vector", 2);
  for (int r = 3; r <= 8; ++r) add(GroupId::sl(r), RepId::ext2, "ext2", r - 2);
  return out;
}

/// Case analysis of A_t B_t at level 2 for Spin_{2n+1}.
inline BigInt expected_term_value(int n, const WeightVector& w) {
  const BigInt base = 2 * n + 1;
  const auto un = static_cast<unsigned long>(n);
  auto ones_except = [&](std::vector<std::pair<std::size_t, int>> changes) {
    std::vector<int> v(un, 1);
    for (auto [i, val] : changes) v[i] = val;
    return WeightVector{v};
  };
  const std::size_t last = un - 1;
  if (w == ones_except({}) || w == ones_except({{0, 3}})) return pow(base, un - 1);
  if (w == ones_except({{last, 2}}) || w == ones_except({{0, 2}, {last, 2}})) return pow(base, un);
  return 4 * pow(base, un - 1);
}

inline std::vector<IdentityReport> check_term_table(IntRange ranks, IntRange genus = {2, 3}) {
  std::vector<IdentityReport> out;
  for (int n : ranks.values()) {
    if (n < 2) throw InvalidArgument("term table needs n >= 2");
    const GroupId grp = GroupId::spin(2 * n + 1);
    std::vector<BigRational> values;
    for (const auto& w : enumerate_weights(grp, 2)) {
      std::string t;
      for (std::size_t i = 0; i < w.size(); ++i) t += (i ? "," : "") + std::to_string(w[i]);
      out.push_back(detail::timed("term_table.value", {{"n", std::to_string(n)}, {"t", t}}, [&] {
        const BigRational v = term_value(grp, w);
        values.push_back(v);
        return std::pair{is_integer(v) ? BigInt(v.get_num()) : BigInt(-1), expected_term_value(n, w)};
      }));
    }
    for (int g : genus.values()) {
      out.push_back(detail::timed("term_table.assembled", detail::group_params(grp, 2, g), [&] {
        const auto e = static_cast<unsigned long>(g - 1);
        BigRational sum = 0;
        for (const auto& v : values) sum += 1 / pow(v, e);
        sum *= BigRational(pow(prefactor(grp, 2), e));
        return std::pair{verlinde_number({grp, 2, g}), is_integer(sum) ? BigInt(sum.get_num()) : BigInt(-1)};
      }));
    }
  }
  return out;
}

/// Spin_4 against SL_2^2 and Spin_6 against SL_4.
inline std::vector<IdentityReport> check_low_rank_consistency(IntRange genus, std::vector<int> levels = {1, 2}) {
  std::vector<IdentityReport> out;
  for (int g : genus.values()) {
    for (int l : levels) {
      out.push_back(detail::timed("consistency.spin4", detail::group_params(GroupId::spin(4), l, g), [&] {
        const BigInt sl2 = verlinde_number({GroupId::sl(2), l, g});
        return std::pair{verlinde_number({GroupId::spin(4), l, g}), BigInt(sl2 * sl2)};
      }));
      out.push_back(detail::timed("consistency.spin6", detail::group_params(GroupId::spin(6), l, g), [&] {
        return std::pair{verlinde_number({GroupId::spin(6), l, g}), verlinde_number({GroupId::sl(4), l, g})};
      }));
    }
  }
  return out;
}

/// Seeded generator of small random rationals, vectors and Clifford elements.
class CliffordSampler {
 public:
  explicit CliffordSampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  BigRational rational() { return make_rational(uniform(-6, 6), uniform(1, 4)); }
  BigRational nonzero_rational() {
    for (;;) {
      BigRational q = rational();
      if (q != 0) return q;
    }
  }

  /// Vector with 1..3 nonzero coordinates; Q(x) > 0 over Q since the form is definite.
  std::vector<BigRational> anisotropic_vector(int m) {
    std::vector<BigRational> v(static_cast<std::size_t>(m), BigRational(0));
    const long support = uniform(1, std::min(3, m));
    for (long k = 0; k < support; ++k) v[static_cast<std::size_t>(uniform(0, m - 1))] = nonzero_rational();
    bool any = std::any_of(v.begin(), v.end(), [](const BigRational& c) { return c != 0; });
    if (!any) v[0] = 1;
    return v;
  }

  CliffordElement element(int m, int max_terms = 4) {
    CliffordElement c(m);
    const long terms = uniform(1, max_terms);
    for (long k = 0; k < terms; ++k) c.add_term(static_cast<BladeMask>(uniform(0, (1L << m) - 1)), rational());
    return c;
  }

  CliffordElement vector_product(int m, int count) {
    CliffordElement s = CliffordElement::scalar(m, 1);
    for (int k = 0; k < count; ++k) s *= CliffordElement::vector(anisotropic_vector(m));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline BigRational standard_form(std::span<const BigRational> x, std::span<const BigRational> y) {
  BigRational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Algebraic laws of the Clifford algebra and the orthogonal representation,
/// each reported as (samples passing, samples drawn).
inline std::vector<IdentityReport> check_clifford(IntRange dims, int samples, std::uint64_t seed = 20240601) {
  std::vector<IdentityReport> out;
  for (int m : dims.values()) {
    CliffordSampler rnd(seed + static_cast<std::uint64_t>(m));
    auto count = [&](const std::string& name, const std::function<bool()>& trial) {
      out.push_back(detail::timed("clifford." + name, {{"m", std::to_string(m)}, {"samples", std::to_string(samples)}},
                                  [&] {
                                    long ok = 0;
                                    for (int i = 0; i < samples; ++i) ok += trial() ? 1 : 0;
                                    return std::pair{BigInt(ok), BigInt(samples)};
                                  }));
    };
    count("associativity", [&] {
      auto a = rnd.element(m), b = rnd.element(m), c = rnd.element(m);
      return (a * b) * c == a * (b * c);
    });
    count("clifford_relation", [&] {
      auto x = rnd.anisotropic_vector(m), y = rnd.anisotropic_vector(m);
      auto X = CliffordElement::vector(x), Y = CliffordElement::vector(y);
      return X * Y + Y * X == CliffordElement::scalar(m, 2 * standard_form(x, y));
    });
    count("involution_laws", [&] {
      auto a = rnd.element(m), b = rnd.element(m);
      return alpha(a * b) == alpha(a) * alpha(b) && beta(a * b) == beta(b) * beta(a) && alpha(alpha(a)) == a &&
             beta(beta(a)) == a && conjugate(a * b) == conjugate(b) * conjugate(a);
    });
    count("norm_multiplicative", [&] {
      auto s = rnd.vector_product(m, static_cast<int>(rnd.uniform(1, 3)));
      auto t = rnd.vector_product(m, static_cast<int>(rnd.uniform(1, 3)));
      auto ns = spinor_norm(s), nt = spinor_norm(t);
      return ns.is_scalar() && nt.is_scalar() && spinor_norm(s * t) == ns * nt;
    });
    count("orthogonality", [&] {
      const int r = static_cast<int>(rnd.uniform(1, 4));
      auto s = rnd.vector_product(m, r);
      const Matrix M = orthogonal_matrix_of(s);
      const BigRational det = determinant(M);
      return multiply(transpose(M), M) == identity_matrix(static_cast<std::size_t>(m)) &&
             det == (r % 2 == 0 ? 1 : -1) && is_in_special_clifford(s) == (r % 2 == 0);
    });
    out.push_back(detail::timed("clifford.even_center_dim", {{"m", std::to_string(m)}}, [&] {
      return std::pair{BigInt(static_cast<long>(even_center_basis(m).size())), BigInt(m % 2 == 0 ? 2 : 1)};
    }));
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closed-forms", "prym",      "spin8",    "reciprocity",
                                              "heights",      "term-table", "clifford", "consistency"};
  return names;
}

struct SuiteConfig {
  std::set<std::string> suites{suite_names().begin(), suite_names().end()};
  IntRange genus{2, 4};
  int rank_max = 9;   // Lie rank n bound for the spin families
  int level_max = 7;  // odd levels used by reciprocity
  std::optional<ReciprocitySpec> reciprocity;  // overrides the level_max default
  IntRange clifford_dims{3, 8};
  int clifford_samples = 200;
  std::uint64_t seed = 20240601;
};

struct SuiteReport {
  std::vector<IdentityReport> reports;
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(),
                                                  [](const IdentityReport& r) { return r.status == Status::fail; }));
  }
  bool all_pass() const { return failures() == 0; }
};

inline ReciprocitySpec default_reciprocity(int level_max) {
  ReciprocitySpec spec;
  for (int l = 5; l <= level_max; l += 2) {
    spec.spin3_levels.push_back(l);
    for (int m = l + 2; m <= level_max; m += 2) spec.pairs.emplace_back(l, m);
  }
  return spec;
}

inline SuiteReport run_all(const SuiteConfig& cfg) {
  for (const auto& s : cfg.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw InvalidArgument("unknown suite '" + s + "'");
    }
  }
  auto want = [&](const char* s) { return cfg.suites.count(s) != 0; };
  const IntRange genus{std::max(cfg.genus.lo, 2), cfg.genus.hi};
  SuiteReport all;
  auto take = [&](std::vector<IdentityReport> r) {
    all.reports.insert(all.reports.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  };
  if (want("closed-forms") && !genus.empty()) take(check_closed_forms(genus, {1, cfg.rank_max}));
  if (want("prym")) {
    for (int n = 1; n <= cfg.rank_max; ++n)
      for (int g : genus.values()) take(check_prym_identity(n, g));
  }
  if (want("spin8")) take(check_spin8(genus));
  if (want("reciprocity")) take(check_reciprocity(cfg.reciprocity.value_or(default_reciprocity(cfg.level_max)), genus));
  if (want("heights")) take(check_heights());
  if (want("term-table")) take(check_term_table({2, cfg.rank_max}, {genus.lo, std::min(genus.hi, 3)}));
  if (want("clifford")) take(check_clifford(cfg.clifford_dims, cfg.clifford_samples, cfg.seed));
  if (want("consistency")) take(check_low_rank_consistency({genus.lo, std::min(genus.hi, 3)}));
  normalize_order(all.reports);
  return all;
}

}  // namespace verlinde
