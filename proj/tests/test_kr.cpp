#include <gtest/gtest.h>

#include <set>

#include "darkc/crystal.hpp"
#include "darkc/kr.hpp"

using namespace darkc;

namespace {

Tableau tab(const std::string& text, int m) { return parse_tableau(text, m); }

// Hook-content formula for the number of r x s semistandard tableaux over {1..m}.
long long hook_content(int m, int r, int s) {
  long long num = 1, den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) {
      num *= m + j - i;
      den *= (s - j - 1) + (r - i - 1) + 1;
    }
  return num / den;
}

}  // namespace

TEST(KR, ElementExamples) {
  const CartanA c1(1);
  EXPECT_EQ(generate(c1, 1, 1), (std::vector<Tableau>{tab("1", 2), tab("2", 2)}));
  EXPECT_EQ(generate(c1, 1, 2), (std::vector<Tableau>{tab("11", 2), tab("12", 2), tab("22", 2)}));
  const auto cols = generate(CartanA(2), 2, 1);
  EXPECT_EQ(cols, (std::vector<Tableau>{tab("1/2", 3), tab("1/3", 3), tab("2/3", 3)}));
}

TEST(KR, CountsMatchHookContent) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 0; s <= 3; ++s)
        EXPECT_EQ(static_cast<long long>(generate(CartanA(n), r, s).size()), hook_content(n + 1, r, s));
}

TEST(KR, TextRoundTrip) {
  const CartanA c(3);
  for (const auto& t : generate(c, 2, 2)) EXPECT_EQ(parse_tableau(to_text(t, 4), 4), t);
  EXPECT_EQ(to_text(tab("11/23", 3), 3), "11/23");
  const CartanA big(10);
  for (const auto& t : generate(big, 1, 2)) EXPECT_EQ(parse_tableau(to_text(t, 11), 11), t);
  EXPECT_EQ(to_text(parse_tableau("10,11", 11), 11), "10,11");
  EXPECT_EQ(to_text(Tableau(2, 0), 3), ".");
  EXPECT_EQ(parse_tableau(".", 3, 2), Tableau(2, 0));
  EXPECT_THROW(parse_tableau("21", 3), invalid_input);
  EXPECT_THROW(parse_tableau("11/12", 3), invalid_input);
  EXPECT_THROW(parse_tableau("1/23", 3), invalid_input);
  EXPECT_THROW(parse_tableau("14", 3), invalid_input);
}

TEST(KR, SingleRowClassicalOperators) {
  // In one row every letter i precedes every i+1, so nothing brackets: f_i acts
  // iff some i is present, e_i iff some i+1 is present.
  const CartanA c(3);
  KRCrystal b(c, 1, 3);
  for (const auto& t : b.elements())
    for (int i = 1; i <= 3; ++i) {
      const int ni = static_cast<int>(std::count(t.cells.begin(), t.cells.end(), i));
      const int nj = static_cast<int>(std::count(t.cells.begin(), t.cells.end(), i + 1));
      EXPECT_EQ(b.phi(i, t), ni);
      EXPECT_EQ(b.epsilon(i, t), nj);
      EXPECT_EQ(b.f(i, t).has_value(), ni > 0);
    }
  EXPECT_EQ(*b.f(1, tab("112", 4)), tab("122", 4));
  EXPECT_EQ(*b.e(2, tab("133", 4)), tab("123", 4));
}

TEST(KR, SingleColumnClassicalOperators) {
  const CartanA c(3);
  KRCrystal b(c, 2, 1);
  for (const auto& t : b.elements())
    for (int i = 1; i <= 3; ++i) {
      const bool has_i = std::count(t.cells.begin(), t.cells.end(), i) > 0;
      const bool has_j = std::count(t.cells.begin(), t.cells.end(), i + 1) > 0;
      EXPECT_EQ(b.f(i, t).has_value(), has_i && !has_j);
      EXPECT_EQ(b.e(i, t).has_value(), has_j && !has_i);
    }
}

TEST(KR, ClassicalOperatorsOnTwoRows) {
  const CartanA c(2);
  KRCrystal b(c, 2, 2);
  // Reading word 2311: the 2 brackets one 1 and f_1 changes the other.
  EXPECT_EQ(*b.f(1, tab("11/23", 3)), tab("12/23", 3));
  EXPECT_FALSE(b.f(1, tab("12/23", 3)).has_value());
  EXPECT_EQ(b.classical_highest(), tab("11/22", 3));
}

TEST(KR, PromotionIsPeriodic) {
  for (int n = 1; n <= 3; ++n) {
    const CartanA c(n);
    for (int r = 1; r <= n; ++r)
      for (int s = 0; s <= 3; ++s)
        for (const auto& t : generate(c, r, s)) {
          Tableau cur = t;
          for (int k = 0; k < n + 1; ++k) {
            cur = promotion(c, cur);
            EXPECT_TRUE(cur.is_semistandard(n + 1));
          }
          EXPECT_EQ(cur, t);
          EXPECT_EQ(promotion_inverse(c, promotion(c, t)), t);
          EXPECT_EQ(promotion(c, promotion_inverse(c, t)), t);
          EXPECT_EQ(promotion_power(c, -1, t), promotion_inverse(c, t));
          EXPECT_EQ(promotion_power(c, 0, t), t);
        }
  }
}

TEST(KR, PromotionOnSingleRowShiftsContent) {
  // For one row, promotion removes the m's, adds 1 to every entry and refills with 1's.
  const CartanA c(2);
  EXPECT_EQ(promotion(c, tab("113", 3)), tab("122", 3));
  EXPECT_EQ(promotion(c, tab("233", 3)), tab("113", 3));
}

TEST(KR, CrystalAxiomsAndConnectivity) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 0; s <= 3; ++s) {
        KRCrystal b(CartanA(n), r, s);
        const auto elts = b.elements();
        const auto rep = check_axioms(b, elts);
        EXPECT_TRUE(rep.ok()) << b.label() << ": " << (rep.ok() ? "" : rep.failures.front());
        EXPECT_EQ(component(b, elts.front(), all_nodes(b.cartan())).size(), elts.size());
      }
}

TEST(KR, WeightIsLevelZeroAndMatchesStats) {
  const CartanA c(3);
  KRCrystal b(c, 2, 2);
  for (const auto& t : b.elements()) {
    EXPECT_EQ(b.weight(t).level(), 0);
    EXPECT_EQ(b.weight(t), weight_from_stats(b, t));
  }
}

TEST(KR, FindBrs) {
  EXPECT_EQ(find_b_rs(CartanA(1), 1, 1), tab("1", 2));
  EXPECT_EQ(find_b_rs(CartanA(2), 1, 2), tab("11", 3));
  EXPECT_EQ(find_b_rs(CartanA(2), 2, 0), Tableau(2, 0));
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 0; s <= 3; ++s) EXPECT_EQ(find_b_rs(CartanA(n), r, s), KRCrystal(CartanA(n), r, s).classical_highest());
}

TEST(KR, TwistIntertwinesOperators) {
  const CartanA c(2);
  KRCrystal b(c, 1, 2);
  for (const auto& t : b.elements()) {
    EXPECT_EQ(b.weight(promotion(c, t)), rotate(c, 1, b.weight(t)));
    for (int i = 0; i < 3; ++i) {
      auto lhs = b.f(i, t);
      auto rhs = b.f((i + 1) % 3, promotion(c, t));
      ASSERT_EQ(lhs.has_value(), rhs.has_value());
      if (lhs) EXPECT_EQ(promotion(c, *lhs), *rhs);
    }
  }
  EXPECT_EQ(twist(c, 0, {tab("12", 3)}), (std::vector<Tableau>{tab("12", 3)}));
}

TEST(KR, InvalidShapes) {
  EXPECT_THROW(KRCrystal(CartanA(2), 3, 1), invalid_input);
  EXPECT_THROW(KRCrystal(CartanA(2), 1, -1), invalid_input);
}
