#include <gtest/gtest.h>

#include "darkc/crystal.hpp"
#include "darkc/kr.hpp"

using namespace darkc;

namespace {

using Elt = std::vector<Tableau>;
using KRTensor = TensorProduct<KRCrystal>;
using Nested = TensorProduct<KRTensor>;

Tableau box(int v) { return Tableau(1, 1, {v}); }

Elt boxes(std::initializer_list<int> vs) {
  Elt x;
  for (int v : vs) x.push_back(box(v));
  return x;
}

}  // namespace

TEST(Crystal, TensorExamples) {
  const CartanA c(1);
  KRTensor t({KRCrystal(c, 1, 1), KRCrystal(c, 1, 1)});
  EXPECT_EQ(*t.f(1, boxes({1, 1})), boxes({2, 1}));
  EXPECT_EQ(*t.e(0, boxes({1, 1})), boxes({1, 2}));
  EXPECT_FALSE(t.f(1, boxes({1, 2})).has_value());
  EXPECT_EQ(t.epsilon(1, boxes({1, 2})), 0);
  EXPECT_EQ(f_closure(t, 1, {boxes({1, 1})}), (std::set<Elt>{boxes({1, 1}), boxes({2, 1}), boxes({2, 2})}));
}

TEST(Crystal, DemazureClosureExamples) {
  const CartanA c(1);
  KRCrystal b(c, 1, 1);
  EXPECT_EQ(demazure_closure(b, {}, {box(1)}), (std::set<Tableau>{box(1)}));
  EXPECT_EQ(demazure_closure(b, {1}, {box(1)}), (std::set<Tableau>{box(1), box(2)}));
  // The rightmost letter acts first.
  KRCrystal b2(CartanA(2), 1, 1);
  const Tableau one = box(1);
  EXPECT_EQ(demazure_closure(b2, {2, 1}, {one}), (std::set<Tableau>{box(1), box(2), box(3)}));
  EXPECT_EQ(demazure_closure(b2, {1, 2}, {one}), (std::set<Tableau>{box(1), box(2)}));
}

TEST(Crystal, ClassicalHighestPath) {
  const CartanA c(1);
  KRTensor t({KRCrystal(c, 1, 1), KRCrystal(c, 1, 1)});
  auto p = classical_highest_path(t, boxes({2, 1}));
  EXPECT_EQ(p.highest, boxes({1, 1}));
  EXPECT_EQ(p.word, (std::vector<int>{1}));
  EXPECT_EQ(lower_along(t, p.highest, p.word), boxes({2, 1}));
  auto q = classical_highest_path(t, boxes({1, 2}));
  EXPECT_EQ(q.highest, boxes({1, 2}));
  EXPECT_TRUE(q.word.empty());
}

TEST(Crystal, TensorRuleIsAssociative) {
  // (B1 (x) B2) (x) B3 and B1 (x) (B2 (x) B3) realized as nested products must agree
  // with the flat product on every operator.
  for (int n = 1; n <= 2; ++n) {
    const CartanA c(n);
    const KRCrystal a(c, 1, 1), b(c, 1, 2), d(c, n, 1);
    KRTensor flat({a, b, d});
    Nested left({KRTensor({a, b}), KRTensor({d})});
    Nested right({KRTensor({a}), KRTensor({b, d})});
    for (const auto& x : flat.elements()) {
      const std::vector<Elt> xl{{x[0], x[1]}, {x[2]}};
      const std::vector<Elt> xr{{x[0]}, {x[1], x[2]}};
      for (int i = 0; i < c.size(); ++i) {
        EXPECT_EQ(flat.epsilon(i, x), left.epsilon(i, xl));
        EXPECT_EQ(flat.phi(i, x), right.phi(i, xr));
        auto fx = flat.f(i, x);
        auto fl = left.f(i, xl);
        auto fr = right.f(i, xr);
        ASSERT_EQ(fx.has_value(), fl.has_value());
        ASSERT_EQ(fx.has_value(), fr.has_value());
        if (fx) {
          EXPECT_EQ((std::vector<Elt>{{(*fx)[0], (*fx)[1]}, {(*fx)[2]}}), *fl);
          EXPECT_EQ((std::vector<Elt>{{(*fx)[0]}, {(*fx)[1], (*fx)[2]}}), *fr);
        }
      }
    }
  }
}

TEST(Crystal, StatsAgreeWithIteration) {
  const CartanA c(2);
  KRTensor t({KRCrystal(c, 1, 2), KRCrystal(c, 2, 1)});
  for (const auto& x : t.elements()) {
    for (int i = 0; i < 3; ++i) {
      auto [eps, ph] = iterated_stats(t, i, x);
      EXPECT_EQ(t.epsilon(i, x), eps);
      EXPECT_EQ(t.phi(i, x), ph);
    }
    EXPECT_EQ(t.weight(x), weight_from_stats(t, x));
  }
}

TEST(Crystal, AxiomsOnTensorProducts) {
  for (int n = 1; n <= 3; ++n) {
    const CartanA c(n);
    KRTensor t({KRCrystal(c, 1, 1), KRCrystal(c, 1, 2), KRCrystal(c, 1, 1)});
    const auto rep = check_axioms(t, t.elements());
    EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.failures.front());
    EXPECT_GT(rep.checked, 0u);
  }
}

TEST(Crystal, ClassicalComponentsOfSquare) {
  // B^{1,1} (x) B^{1,1} for n = 2 splits classically into Sym^2 (6) and Alt^2 (3).
  const CartanA c(2);
  KRTensor t({KRCrystal(c, 1, 1), KRCrystal(c, 1, 1)});
  EXPECT_EQ(component(t, boxes({1, 1}), classical_nodes(c)).size(), 6u);
  EXPECT_EQ(component(t, boxes({1, 2}), classical_nodes(c)).size(), 3u);
  EXPECT_EQ(component(t, boxes({1, 1}), all_nodes(c)).size(), 9u);
}

TEST(Crystal, InducedEdgesAndStringPatterns) {
  const CartanA c(1);
  KRCrystal b(c, 1, 2);
  const std::set<Tableau> all{Tableau(1, 2, {1, 1}), Tableau(1, 2, {1, 2}), Tableau(1, 2, {2, 2})};
  const auto edges = induced_edges(b, all);
  EXPECT_EQ(edges.size(), 4u);
  const auto pats = string_patterns(b, 1, {Tableau(1, 2, {1, 1})});
  EXPECT_EQ(pats.at(StringPattern::highest_only), 1u);
  EXPECT_EQ(string_patterns(b, 1, all).at(StringPattern::full), 1u);
}

TEST(Crystal, RejectsMalformedElements) {
  const CartanA c(1);
  KRTensor t({KRCrystal(c, 1, 1), KRCrystal(c, 1, 1)});
  EXPECT_THROW(t.f(1, boxes({1})), invalid_input);
}
