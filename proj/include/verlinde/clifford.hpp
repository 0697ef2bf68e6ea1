#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/linear_algebra.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// Largest dimension accepted by the exact linear-algebra routines
/// (regular representation of size 2^m).
inline constexpr int kCliffordLinearAlgebraBound = 10;
inline constexpr int kCliffordMaxDim = 24;

using BladeMask = std::uint32_t;

/// Sign of e_S e_T = sign * e_{S xor T} for the form with Q(e_i) = 1.
inline int blade_sign(BladeMask s, BladeMask t) {
  int swaps = 0;
  for (BladeMask rest = t; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const BladeMask above = j >= 31 ? 0u : ~((BladeMask{2} << j) - 1u);
    swaps += std::popcount(s & above);
  }
  return swaps % 2 == 0 ? 1 : -1;
}

/// Element of the rational Clifford algebra of sum x_i^2 on Q^m. Basis blades
/// e_S are indexed by bitmasks; bit i-1 stands for e_i.
class CliffordElement {
 public:
  explicit CliffordElement(int dim) : dim_(check_dim(dim)) {}

  static CliffordElement scalar(int dim, const BigRational& value) {
    CliffordElement c(dim);
    c.add_term(0, value);
    return c;
  }
  static CliffordElement blade(int dim, BladeMask mask, const BigRational& coeff = 1) {
    CliffordElement c(dim);
    c.add_term(mask, coeff);
    return c;
  }
  /// e_i with 1-based i.
  static CliffordElement generator(int dim, int i) {
    if (i < 1 || i > dim) throw InvalidArgument("generator index out of range");
    return blade(dim, BladeMask{1} << (i - 1));
  }
  static CliffordElement vector(std::span<const BigRational> coords) {
    CliffordElement c(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) c.add_term(BladeMask{1} << i, coords[i]);
    return c;
  }

  int dim() const { return dim_; }
  const std::map<BladeMask, BigRational>& terms() const { return terms_; }

  void add_term(BladeMask mask, const BigRational& coeff) {
    if (mask >> dim_ != 0) throw InvalidArgument("blade outside the algebra");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mask, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  BigRational coeff(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  BigRational scalar_part() const { return coeff(0); }
  bool is_even() const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) % 2 != 0) return false;
    return true;
  }
  bool is_odd() const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) % 2 == 0) return false;
    return true;
  }
  bool is_vector() const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) != 1) return false;
    return true;
  }
  std::vector<BigRational> vector_coords() const {
    if (!is_vector()) throw InvalidArgument("element is not a vector");
    std::vector<BigRational> v(static_cast<std::size_t>(dim_), BigRational(0));
    for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(std::countr_zero(m))] = c;
    return v;
  }

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  CliffordElement& operator+=(const CliffordElement& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  CliffordElement& operator-=(const CliffordElement& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator-(CliffordElement a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    a.require_same(b);
    CliffordElement r(a.dim_);
    for (const auto& [s, x] : a.terms_)
      for (const auto& [t, y] : b.terms_) r.add_term(s ^ t, blade_sign(s, t) * (x * y));
    return r;
  }
  CliffordElement& operator*=(const CliffordElement& o) { return *this = *this * o; }

  CliffordElement scaled(const BigRational& f) const {
    CliffordElement r(dim_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * f);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const CliffordElement& c) {
    if (c.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, x] : c.terms_) {
      os << (first ? "" : " + ") << x;
      if (m != 0) {
        os << "*e";
        for (int i = 0; i < c.dim_; ++i)
          if (m >> i & 1u) os << (i + 1);
      }
      first = false;
    }
    return os;
  }

 private:
  static int check_dim(int dim) {
    if (dim < 1 || dim > kCliffordMaxDim) throw InvalidArgument("Clifford dimension out of range");
    return dim;
  }
  void require_same(const CliffordElement& o) const {
    if (dim_ != o.dim_) throw OrderMismatch("Clifford algebras of different dimension");
  }

  int dim_;
  std::map<BladeMask, BigRational> terms_;
};

inline CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) { return a * b; }

/// Principal involution: -1 on V.
inline CliffordElement alpha(const CliffordElement& a) {
  CliffordElement r(a.dim());
  for (const auto& [m, c] : a.terms()) r.add_term(m, std::popcount(m) % 2 == 0 ? c : BigRational(-c));
  return r;
}

/// Principal anti-involution: identity on V, reverses products.
inline CliffordElement beta(const CliffordElement& a) {
  CliffordElement r(a.dim());
  for (const auto& [m, c] : a.terms()) {
    const int k = std::popcount(m);
    r.add_term(m, (k * (k - 1) / 2) % 2 == 0 ? c : BigRational(-c));
  }
  return r;
}

inline CliffordElement conjugate(const CliffordElement& a) { return beta(alpha(a)); }

/// Nm(s) = beta(s) s.
inline CliffordElement spinor_norm(const CliffordElement& s) { return beta(s) * s; }

inline void require_linear_algebra_bound(int dim, int bound = kCliffordLinearAlgebraBound) {
  if (dim > bound) {
    throw ResourceBound("Clifford linear algebra limited to m <= " + std::to_string(bound) + ", got " +
                        std::to_string(dim));
  }
}

/// Solves s x = 1 on the regular representation.
inline std::optional<CliffordElement> inverse_by_linear_solve(const CliffordElement& s) {
  require_linear_algebra_bound(s.dim());
  const std::size_t size = std::size_t{1} << s.dim();
  SparseEliminator elim(size);
  // Row R of the left-multiplication matrix: coefficient of e_R in s e_T over T.
  for (BladeMask r = 0; r < size; ++r) {
    SparseRow row;
    for (const auto& [m, c] : s.terms()) {
      const BladeMask t = m ^ r;
      row[t] += blade_sign(m, t) * c;
    }
    elim.add_row(std::move(row), r == 0 ? BigRational(1) : BigRational(0));
  }
  if (!elim.consistent() || elim.rank() != size) return std::nullopt;
  auto x = elim.solution();
  CliffordElement inv(s.dim());
  for (BladeMask t = 0; t < size; ++t) inv.add_term(t, (*x)[t]);
  return inv;
}

/// Two-sided inverse when it exists. Uses beta(s)/Nm(s) when the norm is a
/// nonzero scalar, the full linear solve otherwise.
inline std::optional<CliffordElement> clifford_inverse(const CliffordElement& s) {
  if (s.is_zero()) return std::nullopt;
  const CliffordElement nm = spinor_norm(s);
  if (nm.is_scalar() && !nm.is_zero()) return beta(s).scaled(1 / nm.scalar_part());
  return inverse_by_linear_solve(s);
}

inline bool is_invertible(const CliffordElement& s) { return clifford_inverse(s).has_value(); }

/// pi_s(x) = s x s*; throws when the image leaves V.
inline std::vector<BigRational> twisted_action(const CliffordElement& s, std::span<const BigRational> x) {
  if (static_cast<int>(x.size()) != s.dim()) throw OrderMismatch("vector dimension does not match the algebra");
  const CliffordElement image = s * CliffordElement::vector(x) * conjugate(s);
  if (!image.is_vector()) throw NotInCliffordGroup("s x s* is not a vector");
  return image.vector_coords();
}

/// Invertible s with scalar spinor norm and s V s* inside V.
inline bool is_in_clifford_group(const CliffordElement& s) {
  // A nonzero scalar norm already makes s invertible with inverse beta(s)/Nm(s).
  const CliffordElement nm = spinor_norm(s);
  if (!nm.is_scalar() || nm.is_zero()) return false;
  const CliffordElement s_star = conjugate(s);
  for (int i = 1; i <= s.dim(); ++i) {
    if (!(s * CliffordElement::generator(s.dim(), i) * s_star).is_vector()) return false;
  }
  return true;
}

inline bool is_in_special_clifford(const CliffordElement& s) { return s.is_even() && is_in_clifford_group(s); }

inline bool is_in_spin(const CliffordElement& s) {
  return is_in_special_clifford(s) && spinor_norm(s) == CliffordElement::scalar(s.dim(), 1);
}

/// Matrix of x -> s x s* / Nm(s) in the basis e_1..e_m; column j is the image of e_j.
inline Matrix orthogonal_matrix_of(const CliffordElement& s) {
  if (!is_in_clifford_group(s)) throw NotInCliffordGroup("element is not in the Clifford group");
  const BigRational inv_norm = 1 / spinor_norm(s).scalar_part();
  const auto m = static_cast<std::size_t>(s.dim());
  Matrix out(m, std::vector<BigRational>(m, BigRational(0)));
  const CliffordElement s_star = conjugate(s);
  for (std::size_t j = 0; j < m; ++j) {
    const auto col = (s * CliffordElement::generator(s.dim(), static_cast<int>(j + 1)) * s_star).vector_coords();
    for (std::size_t i = 0; i < m; ++i) out[i][j] = col[i] * inv_norm;
  }
  return out;
}

/// Basis of the centre of the even part: z in A+ commuting with every e_i e_j.
inline std::vector<CliffordElement> even_center_basis(int m, int bound = kCliffordLinearAlgebraBound) {
  if (m < 1) throw InvalidArgument("Clifford dimension must be >= 1");
  require_linear_algebra_bound(m, bound);
  std::vector<BladeMask> even;
  std::map<BladeMask, std::size_t> index;
  for (BladeMask s = 0; s < (BladeMask{1} << m); ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    index[s] = even.size();
    even.push_back(s);
  }
  SparseEliminator elim(even.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const BladeMask u = (BladeMask{1} << i) | (BladeMask{1} << j);
      // [e_S, u] lands on e_{S xor u}; each output blade gets one equation.
      std::map<BladeMask, SparseRow> rows;
      for (BladeMask s : even) {
        const int c = blade_sign(s, u) - blade_sign(u, s);
        if (c != 0) rows[s ^ u][index[s]] += c;
      }
      for (auto& [r, row] : rows) elim.add_row(std::move(row));
    }
  }
  std::vector<CliffordElement> basis;
  for (const auto& v : elim.nullspace()) {
    CliffordElement z(m);
    for (std::size_t k = 0; k < v.size(); ++k) z.add_term(even[k], v[k]);
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace verlinde
