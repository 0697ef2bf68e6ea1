#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "verlinde/closed_forms.hpp"
#include "verlinde/verlinde.hpp"

using namespace verlinde;

namespace {

std::vector<WeightVector> wv(std::vector<std::vector<int>> rows) {
  std::vector<WeightVector> out;
  for (auto& r : rows) out.push_back(WeightVector{r});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupId> groups_up_to_rank(int max_rank) {
  std::vector<GroupId> gs;
  for (int r = 2; r <= max_rank + 1; ++r) gs.push_back(GroupId::sl(r));
  for (int m = 3; m <= 2 * max_rank + 1; ++m) gs.push_back(GroupId::spin(m));
  return gs;
}

}  // namespace

TEST(GroupId, ParseAndValidate) {
  EXPECT_EQ(parse_group("sl:4"), GroupId::sl(4));
  EXPECT_EQ(parse_group("spin:7").family, Family::SpinOdd);
  EXPECT_EQ(parse_group("spin:8").family, Family::SpinEven);
  EXPECT_EQ(parse_group("spin:9").rank(), 4);
  EXPECT_THROW(parse_group("sl:1"), InvalidArgument);
  EXPECT_THROW(parse_group("spin:2"), InvalidArgument);
  EXPECT_THROW(parse_group("so:7"), InvalidArgument);
  EXPECT_THROW(parse_group("spin:"), InvalidArgument);
  EXPECT_THROW(parse_group("spin:7x"), InvalidArgument);
  EXPECT_TRUE(low_rank_notice(GroupId::spin(4)).has_value());
  EXPECT_TRUE(low_rank_notice(GroupId::spin(6)).has_value());
  EXPECT_FALSE(low_rank_notice(GroupId::spin(8)).has_value());
}

TEST(EnumerateWeights, Examples) {
  EXPECT_EQ(enumerate_weights(GroupId::sl(2), 4), wv({{1}, {2}, {3}, {4}, {5}}));
  EXPECT_EQ(enumerate_weights(GroupId::spin(5), 2), wv({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}));
  // Level 2 at n = 3: the all-ones weight and its six neighbours.
  EXPECT_EQ(enumerate_weights(GroupId::spin(7), 2),
            wv({{1, 1, 1}, {2, 1, 2}, {1, 1, 3}, {3, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
  EXPECT_EQ(enumerate_weights(GroupId::spin(3), 4), enumerate_weights(GroupId::sl(2), 4));
  EXPECT_THROW(enumerate_weights(GroupId::sl(2), 0), InvalidArgument);
}

TEST(EnumerateWeights, LexicographicAndLevelCounts) {
  for (const auto& g : groups_up_to_rank(4)) {
    for (int l = 1; l <= 4; ++l) {
      const auto w = enumerate_weights(g, l);
      EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
      EXPECT_EQ(std::adjacent_find(w.begin(), w.end()), w.end());
    }
  }
  // Level-1 integrable weight counts: |centre| of SL_r, 4 for Spin_{2n}, 3 for Spin_{2n+1}.
  for (int r = 2; r <= 6; ++r) EXPECT_EQ(enumerate_weights(GroupId::sl(r), 1).size(), static_cast<std::size_t>(r));
  for (int m = 8; m <= 14; m += 2) EXPECT_EQ(enumerate_weights(GroupId::spin(m), 1).size(), 4u);
  for (int m = 5; m <= 13; m += 2) EXPECT_EQ(enumerate_weights(GroupId::spin(m), 1).size(), 3u);
  EXPECT_EQ(enumerate_weights(GroupId::spin(4), 3).size(), 16u);  // (l+1)^2 for SL_2 x SL_2
}

TEST(EnumerateWeights, ResourceBound) {
  EXPECT_THROW(enumerate_weights(GroupId::sl(6), 30, 1000), ResourceBound);
}

TEST(SineArguments, NeverVanishOnAdmissibleDomains) {
  for (int l = 1; l <= 8; ++l) {
    std::vector<GroupId> gs;
    for (int r = 2; r <= 11; ++r) gs.push_back(GroupId::sl(r));
    for (int m = 3; m <= 11; ++m) gs.push_back(GroupId::spin(m));
    for (const auto& g : gs) {
      if (g.family == Family::SL && g.param > 8 && l > 4) continue;  // keep the scan quick
      for (const auto& w : enumerate_weights(g, l)) {
        const auto s = squared_sine_arguments(g, l, w);
        for (long a : s.args) {
          ASSERT_GT(a, 0) << g.tag() << " l=" << l;
          ASSERT_LT(a, s.order) << g.tag() << " l=" << l;
        }
      }
    }
  }
}

TEST(VerlindeNumber, Examples) {
  EXPECT_EQ(verlinde_number({GroupId::sl(2), 1, 2}), 4);
  EXPECT_EQ(verlinde_number({GroupId::spin(7), 2, 2}), 85);
  // 12 * (1 + 1/3 + 1/4 + 1/3 + 1), the float-oracle sum, confirmed exactly.
  EXPECT_EQ(verlinde_number({GroupId::sl(2), 4, 2}), 35);
  EXPECT_EQ(verlinde_number({GroupId::spin(8), 2, 2}), 184);
  EXPECT_EQ(verlinde_number({GroupId::sl(4), 2, 2}), 140);
}

TEST(VerlindeNumber, GenusOneCountsWeights) {
  for (const auto& g : groups_up_to_rank(3)) {
    for (int l = 1; l <= 4; ++l) {
      EXPECT_EQ(verlinde_number({g, l, 1}), static_cast<long>(enumerate_weights(g, l).size())) << g.tag();
    }
  }
}

TEST(VerlindeNumber, RejectsInvalidQueries) {
  EXPECT_THROW(verlinde_number({GroupId::sl(2), 1, 0}), InvalidArgument);
  EXPECT_THROW(verlinde_number({GroupId::sl(2), 0, 2}), InvalidArgument);
  EXPECT_THROW(verlinde_number({GroupId{Family::SpinOdd, 4}, 1, 2}), InvalidArgument);
}

TEST(VerlindeNumber, IntegralOverTheSmallRange) {
  for (int g = 1; g <= 5; ++g) {
    for (int l = 1; l <= 6; ++l) {
      for (int r = 2; r <= 5; ++r) EXPECT_NO_THROW(verlinde_number({GroupId::sl(r), l, g})) << r << " " << l << " " << g;
      for (int m = 3; m <= 11; ++m) {
        BigInt v;
        EXPECT_NO_THROW(v = verlinde_number({GroupId::spin(m), l, g})) << m << " " << l << " " << g;
        EXPECT_GT(v, 0);
      }
    }
  }
}

TEST(VerlindeNumber, AgreesWithFloatOracle) {
  for (const auto& g : groups_up_to_rank(4)) {
    for (int l = 1; l <= 4; ++l) {
      for (int genus = 1; genus <= 3; ++genus) {
        const double exact = verlinde_number({g, l, genus}).get_d();
        const double approx = verlinde_float({g, l, genus});
        EXPECT_LT(std::abs(exact - approx) / exact, 1e-6) << g.tag() << " l=" << l << " g=" << genus;
      }
    }
  }
}

TEST(VerlindeFloat, Examples) {
  EXPECT_NEAR(verlinde_float({GroupId::sl(2), 1, 2}), 4.0, 1e-9);
  EXPECT_NEAR(verlinde_float({GroupId::spin(5), 2, 2}), 58.0, 1e-9);
  EXPECT_NEAR(verlinde_float({GroupId::sl(2), 4, 2}), 35.0, 1e-9);
}

TEST(VerlindeNumber, SummationOrderDoesNotMatter) {
  std::mt19937 rng(3);
  for (const VerlindeQuery q : {VerlindeQuery{GroupId::spin(9), 3, 3}, VerlindeQuery{GroupId::sl(4), 4, 2},
                                VerlindeQuery{GroupId::spin(10), 2, 4}}) {
    auto terms = verlinde_contributions(q);
    const BigInt forward = assemble_contributions(q, terms);
    std::reverse(terms.begin(), terms.end());
    EXPECT_EQ(assemble_contributions(q, terms), forward);
    std::shuffle(terms.begin(), terms.end(), rng);
    EXPECT_EQ(assemble_contributions(q, terms), forward);
  }
}

TEST(VerlindeNumber, LowRankEvenSpinMatchesSL) {
  for (int g = 2; g <= 3; ++g) {
    for (int l = 1; l <= 2; ++l) {
      const BigInt sl2 = verlinde_number({GroupId::sl(2), l, g});
      EXPECT_EQ(verlinde_number({GroupId::spin(4), l, g}), sl2 * sl2);
      EXPECT_EQ(verlinde_number({GroupId::spin(6), l, g}), verlinde_number({GroupId::sl(4), l, g}));
    }
  }
}

TEST(VerlindeSplit, Examples) {
  // Parity partition of the SL_2 level-4 sum 12 + 4 + 3 + 4 + 12.
  EXPECT_EQ(verlinde_split({GroupId::spin(3), 4, 2}), (SplitValue{8, 27}));
  EXPECT_EQ(verlinde_split({GroupId::spin(5), 2, 2}), (SplitValue{8, 50}));
  EXPECT_THROW(verlinde_split({GroupId::spin(8), 2, 2}), InvalidArgument);
  EXPECT_THROW(verlinde_split({GroupId::sl(3), 2, 2}), InvalidArgument);
}

TEST(VerlindeSplit, PartitionsTheTotal) {
  for (int m = 3; m <= 11; m += 2) {
    for (int l = 1; l <= 5; ++l) {
      for (int g = 1; g <= 3; ++g) {
        const auto s = verlinde_split({GroupId::spin(m), l, g});
        EXPECT_EQ(s.plus + s.minus, verlinde_number({GroupId::spin(m), l, g}));
        EXPECT_GE(s.plus, 0);
        EXPECT_GE(s.minus, 0);
      }
    }
  }
}

TEST(TermValue, Examples) {
  EXPECT_EQ(term_value(GroupId::spin(5), WeightVector{{1, 1}}), 5);
  EXPECT_EQ(term_value(GroupId::spin(5), WeightVector{{1, 2}}), 25);
  EXPECT_EQ(term_value(GroupId::spin(5), WeightVector{{2, 1}}), 20);
  EXPECT_EQ(term_value(GroupId::spin(7), WeightVector{{1, 1, 1}}), 49);
  EXPECT_EQ(term_value(GroupId::spin(7), WeightVector{{1, 1, 2}}), 343);
  EXPECT_THROW(term_value(GroupId::spin(5), WeightVector{{4, 1}}), InvalidArgument);
  EXPECT_THROW(term_value(GroupId::spin(3), WeightVector{{1}}), InvalidArgument);
  EXPECT_THROW(term_value(GroupId::spin(8), WeightVector{{1, 1, 1, 1}}), InvalidArgument);
}

TEST(TermValue, ReassemblesTheLevelTwoNumber) {
  for (int n = 2; n <= 4; ++n) {
    const GroupId g = GroupId::spin(2 * n + 1);
    for (int genus = 2; genus <= 4; ++genus) {
      const auto e = static_cast<unsigned long>(genus - 1);
      BigRational sum = 0;
      for (const auto& w : enumerate_weights(g, 2)) sum += 1 / pow(term_value(g, w), e);
      sum *= BigRational(pow(prefactor(g, 2), e));
      EXPECT_EQ(sum, BigRational(verlinde_number({g, 2, genus})));
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form("N2_spin_odd", {3, 2}), 85);
  EXPECT_EQ(closed_form("N2_spin_even", {4, 2}), 184);
  EXPECT_EQ(closed_form("twisted_spin_odd", {1, 2}), 19);
  EXPECT_EQ(closed_form(ClosedForm::N2_sl4, {0, 2}), 140);
  EXPECT_EQ(closed_form(ClosedForm::N2_minus_spin_odd_x2, {2, 2}), 100);
  EXPECT_THROW(closed_form("N3_spin_odd", {3, 2}), InvalidArgument);
  EXPECT_THROW(closed_form("N2_spin_even", {1, 2}), InvalidArgument);
  for (const auto& [form, name] : kClosedFormNames) EXPECT_EQ(parse_closed_form(name), form);
}

TEST(VerlindeMemo, CachesAndIsSafeUnderConcurrentInsertion) {
  VerlindeMemo memo;
  const VerlindeQuery q{GroupId::spin(7), 3, 3};
  const BigInt direct = verlinde_number(q);
  std::vector<std::thread> threads;
  std::vector<BigInt> results(4);
  for (std::size_t i = 0; i < results.size(); ++i) threads.emplace_back([&, i] { results[i] = memo.number(q); });
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, direct);
  EXPECT_EQ(memo.size(), 1u);
  memo.clear();
  EXPECT_EQ(memo.size(), 0u);
}
