// A rotation built from two reflections, its spinor norm and orthogonal matrix.
#include <iostream>
#include <vector>

#include "verlinde/clifford.hpp"

int main() {
  using namespace verlinde;
  const std::vector<BigRational> x{1, 1, 0}, y{0, 1, 2};
  const CliffordElement s = CliffordElement::vector(x) * CliffordElement::vector(y);
  std::cout << "s = " << s << "\n";
  std::cout << "Nm(s) = " << spinor_norm(s) << "\n";
  std::cout << "even, in special Clifford group: " << std::boolalpha << is_in_special_clifford(s) << "\n";
  const Matrix m = orthogonal_matrix_of(s);
  for (const auto& row : m) {
    for (const auto& v : row) std::cout << v << "\t";
    std::cout << "\n";
  }
  std::cout << "det = " << determinant(m) << "\n";
  return determinant(m) == 1 ? 0 : 1;
}
