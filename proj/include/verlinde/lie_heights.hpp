#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/group.hpp"
#include "verlinde/rational.hpp"
#include "verlinde/verlinde.hpp"

namespace verlinde {

/// Weight in coordinates of L_1..L_N: ambient (n+1)-space for type A,
/// orthonormal n-space for types B and D.
struct Weight {
  std::vector<BigRational> coords;

  static Weight zero(std::size_t dim) { return {std::vector<BigRational>(dim, BigRational(0))}; }
  static Weight basis(std::size_t dim, std::size_t i, long sign = 1) {
    Weight w = zero(dim);
    w.coords.at(i) = sign;
    return w;
  }

  std::size_t dim() const { return coords.size(); }

  friend Weight operator+(Weight a, const Weight& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("weight dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("weight dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << "(";
    for (std::size_t i = 0; i < w.dim(); ++i) os << (i ? ", " : "") << w.coords[i];
    return os << ")";
  }
};

/// Weights with their positive multiplicities.
struct FormalCharacter {
  std::map<Weight, long> entries;

  void add(const Weight& w, long mult = 1) {
    if (mult <= 0) throw InvalidArgument("multiplicities must be positive");
    entries[w] += mult;
  }
  long mass() const {
    long m = 0;
    for (const auto& [w, k] : entries) m += k;
    return m;
  }
};

enum class RepId { vector, ext2, adjoint };

inline RepId parse_rep(const std::string& s) {
  if (s == "vector") return RepId::vector;
  if (s == "ext2") return RepId::ext2;
  if (s == "adjoint") return RepId::adjoint;
  throw InvalidArgument("representation must be vector, ext2 or adjoint, got '" + s + "'");
}

inline std::size_t ambient_dimension(const GroupId& group) {
  const GroupId g = evaluation_group(group);
  return g.family == Family::SL ? static_cast<std::size_t>(g.param) : static_cast<std::size_t>(g.rank());
}

/// Normalised Killing form. Type A: <L_i, L_j> = delta_ij - 1/(n+1); B, D: orthonormal.
inline BigRational killing_pairing(const GroupId& group, const Weight& a, const Weight& b) {
  const std::size_t dim = ambient_dimension(group);
  if (a.dim() != dim || b.dim() != dim) throw InvalidArgument("weight does not live in the group's ambient space");
  BigRational dot = 0;
  for (std::size_t i = 0; i < dim; ++i) dot += a.coords[i] * b.coords[i];
  if (evaluation_group(group).family != Family::SL) return dot;
  BigRational sa = 0, sb = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    sa += a.coords[i];
    sb += b.coords[i];
  }
  return dot - sa * sb / BigRational(static_cast<long>(dim));
}

/// L_1 - L_{n+1} for type A, L_1 + L_2 for types B and D.
inline Weight highest_coroot(const GroupId& group) {
  const GroupId g = evaluation_group(group);
  const std::size_t dim = ambient_dimension(group);
  if (g.family == Family::SL) return Weight::basis(dim, 0) - Weight::basis(dim, dim - 1);
  if (g.rank() < 2) throw InvalidArgument("highest coroot L_1 + L_2 needs rank >= 2 for " + group.tag());
  return Weight::basis(dim, 0) + Weight::basis(dim, 1);
}

/// Spin_3 takes the SL_2 adjoint for both `vector` and `adjoint` (C^3 is the adjoint rep).
inline FormalCharacter formal_character(const GroupId& group, RepId rep) {
  const GroupId g = evaluation_group(group);
  const std::size_t dim = ambient_dimension(group);
  if (group.routes_to_sl2() && rep == RepId::vector) rep = RepId::adjoint;
  FormalCharacter ch;
  switch (g.family) {
    case Family::SL:
      if (rep == RepId::adjoint && g.param == 2) {
        const Weight root = Weight::basis(2, 0) - Weight::basis(2, 1);
        ch.add(root);
        ch.add(Weight::zero(2));
        ch.add(-root);
        return ch;
      }
      if (rep == RepId::ext2 && g.param >= 3) {
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = i + 1; j < dim; ++j) ch.add(Weight::basis(dim, i) + Weight::basis(dim, j));
        return ch;
      }
      break;
    case Family::SpinEven:
    case Family::SpinOdd:
      if (rep == RepId::vector) {
        if (g.family == Family::SpinOdd) ch.add(Weight::zero(dim));
        for (std::size_t i = 0; i < dim; ++i) {
          ch.add(Weight::basis(dim, i));
          ch.add(Weight::basis(dim, i, -1));
        }
        return ch;
      }
      break;
  }
  throw InvalidArgument("unsupported representation for " + group.tag());
}

/// m_V = 1/2 sum n_lambda <lambda, theta^vee>^2.
inline BigRational height(const GroupId& group, RepId rep) {
  const FormalCharacter ch = formal_character(group, rep);
  const Weight coroot = highest_coroot(group);
  BigRational total = 0;
  for (const auto& [w, mult] : ch.entries) {
    const BigRational p = killing_pairing(group, w, coroot);
    total += BigRational(mult) * p * p;
  }
  return total / 2;
}

/// dim H^0(M(G), Theta(V)^k) = N_{k m_V}(G).
inline BigInt level_dimension(const GroupId& group, RepId rep, int k, int genus) {
  if (k < 1) throw InvalidArgument("power k must be >= 1");
  const BigRational h = height(group, rep);
  if (!is_integer(h) || h <= 0) throw IntegralityFailure("height is not a positive integer: " + h.get_str());
  const BigInt level = BigInt(k) * h.get_num();
  if (!level.fits_sint_p()) throw ResourceBound("level too large");
  return verlinde_number({group, static_cast<int>(level.get_si()), genus});
}

}  // namespace verlinde
