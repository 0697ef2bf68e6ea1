#pragma once

#include <string>

#include "verlinde/errors.hpp"
#include "verlinde/group.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

enum class Parity { even, odd, total };

inline Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  if (s == "total") return Parity::total;
  throw InvalidArgument("parity must be even, odd or total, got '" + s + "'");
}

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::total: return "total";
  }
  return "?";
}

/// dim H^0_{+/-}(A, m Xi) on a principally polarized abelian variety of
/// dimension g: (m^g +/- 2^g)/2 for even m, (m^g +/- 1)/2 for odd m.
inline BigInt theta_dim(int g, int m, Parity parity) {
  if (g < 1 || m < 1) throw InvalidArgument("theta_dim needs g >= 1 and m >= 1");
  const BigInt all = pow(m, static_cast<unsigned long>(g));
  if (parity == Parity::total) return all;
  const BigInt shift = m % 2 == 0 ? pow(2, static_cast<unsigned long>(g)) : BigInt(1);
  const BigInt twice = parity == Parity::even ? BigInt(all + shift) : BigInt(all - shift);
  return twice / 2;
}

/// Sum over all 2^{2g} half-periods: the Jacobian (dimension g) plus
/// 2^{2g}-1 Pryms of dimension g-1.
inline BigInt prym_sum(int g, int m, Parity parity) {
  if (g < 2) throw InvalidArgument("prym_sum needs a base curve of genus >= 2");
  if (m < 1) throw InvalidArgument("prym_sum needs level m >= 1");
  return theta_dim(g, m, parity) + (pow(2, 2UL * static_cast<unsigned long>(g)) - 1) * theta_dim(g - 1, m, parity);
}

/// (g-1) dim G for the simple groups here (trivial connected centre).
inline BigInt moduli_dimension(const GroupId& group, int g) {
  group.validate();
  if (g < 2) throw InvalidArgument("moduli_dimension needs g >= 2");
  return BigInt(g - 1) * group.dimension();
}

}  // namespace verlinde
