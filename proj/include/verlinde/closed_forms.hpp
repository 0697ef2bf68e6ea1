#pragma once

#include <array>
#include <string>
#include <string_view>

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

// Closed-form values of low-level Verlinde numbers and related counts. These
// use plain integer arithmetic only and serve as the reference side of the
// identity checks; nothing here touches the cyclotomic evaluator.

namespace verlinde {

enum class ClosedForm {
  N1_sl2,
  N2_sl2,
  N1_sl4,
  N2_sl4,
  N1_spin_even,
  N2_spin_even,
  N1_spin_odd,
  N2_spin_odd,
  N2_minus_spin_odd_x2,  // 2 * N_2^-(Spin_{2n+1})
  twisted_spin_odd,      // N^- - N^+ for Spin_{2n+1} at the vector-rep level
};

inline constexpr std::array<std::pair<ClosedForm, std::string_view>, 10> kClosedFormNames{{
    {ClosedForm::N1_sl2, "N1_sl2"},
    {ClosedForm::N2_sl2, "N2_sl2"},
    {ClosedForm::N1_sl4, "N1_sl4"},
    {ClosedForm::N2_sl4, "N2_sl4"},
    {ClosedForm::N1_spin_even, "N1_spin_even"},
    {ClosedForm::N2_spin_even, "N2_spin_even"},
    {ClosedForm::N1_spin_odd, "N1_spin_odd"},
    {ClosedForm::N2_spin_odd, "N2_spin_odd"},
    {ClosedForm::N2_minus_spin_odd_x2, "N2_minus_spin_odd_x2"},
    {ClosedForm::twisted_spin_odd, "twisted_spin_odd"},
}};

inline std::string_view name_of(ClosedForm f) {
  for (const auto& [form, name] : kClosedFormNames)
    if (form == f) return name;
  return "?";
}

inline ClosedForm parse_closed_form(std::string_view name) {
  for (const auto& [form, n] : kClosedFormNames)
    if (n == name) return form;
  throw InvalidArgument("unknown closed form '" + std::string(name) + "'");
}

struct ClosedFormParams {
  int n = 0;  // rank index of Spin_{2n} / Spin_{2n+1}; unused for SL forms
  int g = 2;
};

inline BigInt closed_form(ClosedForm form, const ClosedFormParams& p) {
  if (p.g < 1) throw InvalidArgument("closed forms need g >= 1");
  const unsigned long g = static_cast<unsigned long>(p.g);
  const BigInt n = p.n;
  const BigInt two_n = 2 * n;
  const BigInt odd = 2 * n + 1;
  auto needs_n = [&](int min_n) {
    if (p.n < min_n) throw InvalidArgument(std::string(name_of(form)) + " needs n >= " + std::to_string(min_n));
  };
  switch (form) {
    case ClosedForm::N1_sl2: return pow(2, g);
    case ClosedForm::N2_sl2: return pow(2, g - 1) * (pow(2, g) + 1);
    case ClosedForm::N1_sl4: return pow(2, 2 * g);
    case ClosedForm::N2_sl4: return pow(2, 3 * g - 1) * pow(3, g - 1) + pow(2, 3 * g - 1) + pow(2, g) * pow(3, g - 1);
    case ClosedForm::N1_spin_even: needs_n(2); return pow(2, 2 * g);
    case ClosedForm::N2_spin_even:
      needs_n(2);
      return pow(two_n, g) + (pow(2, 2 * g) - 1) * pow(two_n, g - 1) + pow(2, g - 1) * (pow(2, 2 * g) - pow(n, g));
    case ClosedForm::N1_spin_odd: needs_n(1); return pow(2, g - 1) * (pow(2, g) + 1);
    case ClosedForm::N2_spin_odd:
      needs_n(1);
      return pow(2, 2 * g - 1) * pow(odd, g - 1) + n * pow(odd, g - 1) + pow(2, 2 * g - 1);
    case ClosedForm::N2_minus_spin_odd_x2:
      needs_n(1);
      return pow(odd, g) + (pow(2, 2 * g) - 1) * pow(odd, g - 1);
    case ClosedForm::twisted_spin_odd:
      needs_n(1);
      return pow(2, 2 * g - 1) * pow(odd, g - 1) + n * pow(odd, g - 1) - pow(2, 2 * g - 1);
  }
  throw InvalidArgument("unknown closed form");
}

inline BigInt closed_form(std::string_view name, const ClosedFormParams& p) {
  return closed_form(parse_closed_form(name), p);
}

}  // namespace verlinde
