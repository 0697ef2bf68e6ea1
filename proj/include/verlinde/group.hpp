#pragma once

#include <charconv>
#include <compare>
#include <optional>
#include <string>

#include "verlinde/errors.hpp"

namespace verlinde {

enum class Family { SL, SpinOdd, SpinEven };

/// One of SL_r (r >= 2), Spin_m with m odd >= 3, Spin_m with m even >= 4.
/// `param` is r for SL and m for the spin families.
struct GroupId {
  Family family = Family::SL;
  int param = 2;

  static GroupId sl(int r) {
    GroupId g{Family::SL, r};
    g.validate();
    return g;
  }
  static GroupId spin(int m) {
    GroupId g{m % 2 != 0 ? Family::SpinOdd : Family::SpinEven, m};
    g.validate();
    return g;
  }

  void validate() const {
    switch (family) {
      case Family::SL:
        if (param < 2) throw InvalidArgument("SL_r requires r >= 2");
        return;
      case Family::SpinOdd:
        if (param < 3 || param % 2 == 0) throw InvalidArgument("odd Spin_m requires odd m >= 3");
        return;
      case Family::SpinEven:
        if (param < 4 || param % 2 != 0) throw InvalidArgument("even Spin_m requires even m >= 4");
        return;
    }
  }

  /// Lie rank n: SL_{n+1}, Spin_{2n}, Spin_{2n+1}.
  int rank() const {
    switch (family) {
      case Family::SL: return param - 1;
      case Family::SpinEven: return param / 2;
      case Family::SpinOdd: return (param - 1) / 2;
    }
    return 0;
  }

  /// Spin_3 is evaluated as SL_2 everywhere.
  bool routes_to_sl2() const { return family == Family::SpinOdd && param == 3; }

  long dimension() const {
    if (family == Family::SL) return static_cast<long>(param) * param - 1;
    return static_cast<long>(param) * (param - 1) / 2;
  }

  std::string tag() const { return (family == Family::SL ? "sl:" : "spin:") + std::to_string(param); }

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

/// Parses `sl:<r>` or `spin:<m>`.
inline GroupId parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("group spec must be sl:<r> or spin:<m>, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string num = spec.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size()) {
    throw InvalidArgument("bad group index in '" + spec + "'");
  }
  if (kind == "sl") return GroupId::sl(value);
  if (kind == "spin") return GroupId::spin(value);
  throw InvalidArgument("unknown group family '" + kind + "'");
}

/// Spin_4 and Spin_6 are outside the range n >= 4 of the even-spin formula but
/// are evaluated anyway (they reduce to SL_2 x SL_2 and SL_4).
inline std::optional<std::string> low_rank_notice(const GroupId& g) {
  if (g.family == Family::SpinEven && g.rank() < 4) {
    return "note: " + g.tag() + " evaluated with the even-spin formula below its stated range n >= 4";
  }
  return std::nullopt;
}

}  // namespace verlinde
