// Prints a small table of Verlinde numbers next to their closed forms.
#include <iostream>

#include "verlinde/closed_forms.hpp"
#include "verlinde/verlinde.hpp"

int main() {
  using namespace verlinde;
  std::cout << "n  g  N_2(Spin_{2n+1})  closed form\n";
  for (int n = 2; n <= 4; ++n) {
    for (int g = 2; g <= 4; ++g) {
      const BigInt exact = verlinde_number({GroupId::spin(2 * n + 1), 2, g});
      const BigInt reference = closed_form(ClosedForm::N2_spin_odd, {n, g});
      std::cout << n << "  " << g << "  " << exact << "  " << reference << "\n";
      if (exact != reference) return 1;
    }
  }
  const SplitValue s = verlinde_split({GroupId::spin(3), 4, 2});
  std::cout << "Spin_3 level 4 genus 2: N+ = " << s.plus << ", N- = " << s.minus << "\n";
  return 0;
}
