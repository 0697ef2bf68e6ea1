#include <gtest/gtest.h>

#include "verlinde/clifford.hpp"
#include "verlinde/identities.hpp"

using namespace verlinde;

namespace {

CliffordElement e(int m, int i) { return CliffordElement::generator(m, i); }
CliffordElement one(int m) { return CliffordElement::scalar(m, 1); }
CliffordElement blade(int m, std::initializer_list<int> idx) {
  BladeMask mask = 0;
  for (int i : idx) mask |= BladeMask{1} << (i - 1);
  return CliffordElement::blade(m, mask);
}
std::vector<BigRational> vec(std::initializer_list<long> xs) {
  std::vector<BigRational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
Matrix diag(std::initializer_list<long> xs) {
  const auto v = vec(xs);
  Matrix m = identity_matrix(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m[i][i] = v[i];
  return m;
}
BigRational dot(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST(CliffordMul, Examples) {
  EXPECT_EQ(e(3, 1) * e(3, 1), one(3));
  EXPECT_EQ(e(3, 1) * e(3, 2), blade(3, {1, 2}));
  EXPECT_EQ(e(3, 2) * e(3, 1), -blade(3, {1, 2}));
  EXPECT_EQ(clifford_mul(blade(4, {1, 2, 3, 4}), blade(4, {1, 2, 3, 4})), one(4));
  EXPECT_EQ(clifford_mul(blade(3, {1, 2, 3}), blade(3, {1, 2, 3})), -one(3));
  EXPECT_THROW(e(3, 1) * e(4, 1), OrderMismatch);
  EXPECT_THROW(e(3, 4), InvalidArgument);
}

TEST(Involutions, Examples) {
  EXPECT_EQ(alpha(e(3, 1)), -e(3, 1));
  EXPECT_EQ(beta(blade(3, {1, 2, 3})), e(3, 3) * e(3, 2) * e(3, 1));
  EXPECT_EQ(beta(blade(3, {1, 2, 3})), -blade(3, {1, 2, 3}));
  EXPECT_EQ(conjugate(e(3, 1)), -e(3, 1));
  EXPECT_EQ(alpha(blade(3, {1, 2})), blade(3, {1, 2}));
}

TEST(SpinorNorm, Examples) {
  EXPECT_EQ(spinor_norm(e(3, 1) * e(3, 2)), one(3));
  EXPECT_EQ(spinor_norm(CliffordElement::scalar(3, make_rational(-3, 2))), CliffordElement::scalar(3, make_rational(9, 4)));
  const auto s = CliffordElement::vector(vec({2, 0, 0})) * CliffordElement::vector(vec({0, 3, 0}));
  EXPECT_EQ(spinor_norm(s), CliffordElement::scalar(3, 36));
}

TEST(TwistedAction, Examples) {
  EXPECT_EQ(twisted_action(e(3, 1), vec({1, 0, 0})), vec({-1, 0, 0}));
  EXPECT_EQ(twisted_action(e(3, 1), vec({0, 1, 0})), vec({0, 1, 0}));
  EXPECT_EQ(twisted_action(e(3, 1) * e(3, 2), vec({1, 0, 0})), vec({-1, 0, 0}));
  EXPECT_THROW(twisted_action(one(3) + e(3, 1), vec({0, 1, 0})), NotInCliffordGroup);
  EXPECT_THROW(twisted_action(e(3, 1), vec({1, 0})), OrderMismatch);
}

TEST(Membership, Examples) {
  EXPECT_TRUE(is_in_clifford_group(e(3, 1)));
  EXPECT_FALSE(is_in_special_clifford(e(3, 1)));
  EXPECT_TRUE(is_in_special_clifford(e(3, 1) * e(3, 2)));
  EXPECT_TRUE(is_in_spin(e(3, 1) * e(3, 2)));
  EXPECT_FALSE(is_in_spin(CliffordElement::scalar(3, 2)));
  EXPECT_TRUE(is_in_special_clifford(CliffordElement::scalar(3, 2)));
  EXPECT_FALSE(is_in_clifford_group(CliffordElement(3)));
  // 1 + e_1234 squares to 2(1 + e_1234): a zero divisor up to scale, never invertible.
  for (long c : {1L, 2L, -5L}) {
    const auto s = (one(4) + blade(4, {1, 2, 3, 4})).scaled(c);
    EXPECT_FALSE(is_invertible(s));
    EXPECT_FALSE(is_in_clifford_group(s));
  }
  // 1 + 2 e_1234 is invertible and central in the even part, but not in the group.
  const auto central = one(4) + blade(4, {1, 2, 3, 4}).scaled(2);
  EXPECT_TRUE(is_invertible(central));
  EXPECT_FALSE(is_in_clifford_group(central));
  // At m = 3 the pseudoscalar is central and maps V to V.
  EXPECT_TRUE(is_in_clifford_group(blade(3, {1, 2, 3})));
}

TEST(Inverse, TwoSidedOnRandomElements) {
  CliffordSampler rng(5);
  for (int m = 2; m <= 6; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = rng.element(m, 5);
      const auto inv = clifford_inverse(s);
      if (!inv) continue;
      EXPECT_EQ(s * *inv, one(m));
      EXPECT_EQ(*inv * s, one(m));
    }
  }
  EXPECT_THROW(inverse_by_linear_solve(one(11) + e(11, 1)), ResourceBound);
}

TEST(OrthogonalMatrix, Examples) {
  EXPECT_EQ(orthogonal_matrix_of(e(3, 1)), diag({-1, 1, 1}));
  EXPECT_EQ(determinant(orthogonal_matrix_of(e(3, 1))), -1);
  EXPECT_EQ(orthogonal_matrix_of(e(3, 1) * e(3, 2)), diag({-1, -1, 1}));
  EXPECT_EQ(determinant(orthogonal_matrix_of(e(3, 1) * e(3, 2))), 1);
  EXPECT_EQ(orthogonal_matrix_of(CliffordElement::scalar(3, make_rational(7, 3))), identity_matrix(3));
  EXPECT_THROW(orthogonal_matrix_of(one(3) + e(3, 1)), NotInCliffordGroup);
}

TEST(CliffordProperties, AlgebraAxioms) {
  CliffordSampler rng(17);
  for (int m = 3; m <= 8; ++m) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = rng.element(m), b = rng.element(m), c = rng.element(m);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(alpha(a * b), alpha(a) * alpha(b));
      EXPECT_EQ(beta(a * b), beta(b) * beta(a));
      EXPECT_EQ(conjugate(a * b), conjugate(b) * conjugate(a));
      EXPECT_EQ(alpha(alpha(a)), a);
      EXPECT_EQ(beta(beta(a)), a);
      const auto x = rng.anisotropic_vector(m), y = rng.anisotropic_vector(m);
      const auto vx = CliffordElement::vector(x), vy = CliffordElement::vector(y);
      EXPECT_EQ(vx * vy + vy * vx, CliffordElement::scalar(m, 2 * dot(x, y)));
    }
  }
}

TEST(CliffordProperties, NormAndOrthogonality) {
  CliffordSampler rng(23);
  for (int m = 3; m <= 8; ++m) {
    for (int trial = 0; trial < 15; ++trial) {
      const int p = static_cast<int>(rng.uniform(1, 3)), q = static_cast<int>(rng.uniform(1, 3));
      const auto s = rng.vector_product(m, p), t = rng.vector_product(m, q);
      ASSERT_TRUE(is_in_clifford_group(s));
      EXPECT_EQ(spinor_norm(s * t), spinor_norm(s) * spinor_norm(t));
      const Matrix mat = orthogonal_matrix_of(s * t);
      EXPECT_EQ(multiply(transpose(mat), mat), identity_matrix(static_cast<std::size_t>(m)));
      EXPECT_EQ(determinant(mat), (p + q) % 2 == 0 ? 1 : -1);
      EXPECT_EQ(is_in_special_clifford(s * t), (p + q) % 2 == 0);
    }
  }
}

TEST(EvenCenter, Examples) {
  EXPECT_EQ(even_center_basis(3).size(), 1u);
  EXPECT_EQ(even_center_basis(5).size(), 1u);
  const auto b4 = even_center_basis(4);
  ASSERT_EQ(b4.size(), 2u);
  // The span must be {1, e_1234}; check membership of each basis element.
  for (const auto& z : b4) {
    for (const auto& [mask, c] : z.terms()) EXPECT_TRUE(mask == 0 || mask == 0b1111u);
  }
  for (int m = 3; m <= 8; ++m) EXPECT_EQ(even_center_basis(m).size(), m % 2 == 0 ? 2u : 1u) << m;
  EXPECT_THROW(even_center_basis(11), ResourceBound);
}
