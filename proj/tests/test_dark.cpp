#include <gtest/gtest.h>

#include <algorithm>

#include "darkc/dark.hpp"

using namespace darkc;

namespace {

Tableau tab(const std::string& text, int m) { return parse_tableau(text, m); }

DarkSpec single(int n, std::vector<int> lambda, std::vector<int> r, std::vector<ReducedWord> words) {
  DarkSpec s{n, std::move(lambda), std::move(r), {}};
  for (auto& w : words) s.words.push_back({{}, std::move(w)});
  return s;
}

bool subset(const std::set<TensorElt>& a, const std::set<TensorElt>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST(Dark, BuildExamples) {
  const auto e = build(single(1, {1}, {1}, {{}}));
  EXPECT_EQ(e.elements, (std::set<TensorElt>{{tab("1", 2)}}));
  const auto s1 = build(single(1, {1}, {1}, {{1}}));
  EXPECT_EQ(s1.elements, (std::set<TensorElt>{{tab("1", 2)}, {tab("2", 2)}}));
  const auto seeds = build(typeA_rows(2, {2, 1}, {{}, {}}));
  EXPECT_EQ(seeds.elements, (std::set<TensorElt>{{tab("11", 3), tab("2", 3)}}));
}

TEST(Dark, TypeARowsBruteForce) {
  // F_1({1} (x) pr(F_1{1})) = F_1{1 (x) 2, 1 (x) 1}.
  const CartanA c(1);
  KRCrystal b(c, 1, 1);
  KRTensor t({b, b});
  std::set<TensorElt> seeds;
  for (const auto& x : f_closure(b, 1, {tab("1", 2)})) seeds.insert({tab("1", 2), promotion(c, x)});
  const auto expected = f_closure(t, 1, seeds);
  const auto spec = typeA_rows(1, {1, 1}, {{1}, {1}});
  EXPECT_EQ(build(spec).elements, expected);
  EXPECT_EQ(expected.size(), 4u);
  EXPECT_TRUE(verify(spec).ok);
}

TEST(Dark, LhsCharacterExamples) {
  const CartanA c(1);
  EnergyCache cache(c);
  const auto spec_e = single(1, {1}, {1}, {{}});
  EXPECT_EQ(lhs_character(spec_e, build(spec_e), cache),
            CharPoly::monomial(AffineWeight{{0, 1}, Rational(1, 4)}));
  const auto spec_s = single(1, {1}, {1}, {{1}});
  EXPECT_EQ(lhs_character(spec_s, build(spec_s), cache),
            CharPoly::monomial(AffineWeight{{0, 1}, Rational(1, 4)}) +
                CharPoly::monomial(AffineWeight{{2, -1}, Rational(-1, 4)}));
}

TEST(Dark, VerifyAnchor) {
  for (const ReducedWord& w : {ReducedWord{}, ReducedWord{1}}) {
    const auto v = verify(single(1, {1}, {1}, {w}));
    ASSERT_TRUE(v.ok);
    EXPECT_EQ(*v.C, Rational(-1, 4));
    EXPECT_TRUE(v.diff.empty());
  }
  EXPECT_EQ(*verify(full_tensor_spec(1, {1, 1}, {1, 1})).C, Rational(-1));
}

TEST(Dark, VerifyMaximalClassicalWords) {
  const auto v = verify(typeA_rows(2, {2, 1}, {{1, 2, 1}, {1, 2, 1}}));
  EXPECT_TRUE(v.ok);
}

TEST(Dark, ConstantDependsOnlyOnLambdaAndR) {
  const CartanA c(2);
  const std::vector<int> lambda{2, 1};
  const std::vector<int> r{1, 2};
  std::optional<Rational> seen;
  for (const auto& w1 : bruhat_interval(kr_translation_data(c, 1).y))
    for (const auto& w2 : bruhat_interval(kr_translation_data(c, 2).y)) {
      const auto v = verify(single(2, lambda, r, {reduced_word(w1), reduced_word(w2)}));
      ASSERT_TRUE(v.ok);
      if (!seen) seen = *v.C;
      EXPECT_EQ(*v.C, *seen);
    }
}

TEST(Dark, ThreeFactors) {
  EXPECT_TRUE(verify(full_tensor_spec(1, {1, 1, 1}, {1, 1, 1})).ok);
  EXPECT_TRUE(verify(full_tensor_spec(2, {2, 1, 1}, {1, 2, 1})).ok);
  EXPECT_TRUE(verify(single(2, {2, 2, 1}, {1, 1, 2}, {{2}, {2, 1}, {2}})).ok);
  EXPECT_TRUE(verify(typeA_rows(2, {3, 2, 1}, {{1}, {2, 1}, {1, 2}})).ok);
}

TEST(Dark, ZeroColumnsAreTrivialFactors) {
  const auto v = verify(single(2, {2, 0}, {1, 1}, {{2, 1}, {1}}));
  EXPECT_TRUE(v.ok);
  const auto set = build(single(2, {2, 0}, {1, 1}, {{2, 1}, {}}));
  for (const auto& x : set.elements) EXPECT_EQ(x[1], Tableau(1, 0));
}

TEST(Dark, FullTensorCase) {
  const auto spec = full_tensor_spec(2, {2, 1}, {1, 2});
  const auto set = build(spec);
  KRTensor product(set.factors);
  EXPECT_EQ(set.elements.size(), product.elements().size());
  const auto one = build(full_tensor_spec(2, {2}, {2}));
  EXPECT_EQ(one.elements.size(), KRCrystal(CartanA(2), 2, 2).elements().size());
}

TEST(Dark, MonotoneInEachWord) {
  // Sampled Bruhat chains e < s_i < ... < y in each factor.
  const CartanA c(2);
  const auto y1 = reduced_word(kr_translation_data(c, 1).y);
  for (std::size_t len = 0; len < y1.size(); ++len) {
    const ReducedWord shorter(y1.end() - static_cast<long>(len), y1.end());
    const ReducedWord longer(y1.end() - static_cast<long>(len + 1), y1.end());
    for (const ReducedWord& other : {ReducedWord{}, ReducedWord{2}, y1}) {
      EXPECT_TRUE(subset(build(single(2, {2, 1}, {1, 1}, {shorter, other})).elements,
                         build(single(2, {2, 1}, {1, 1}, {longer, other})).elements));
      EXPECT_TRUE(subset(build(single(2, {2, 1}, {1, 1}, {other, shorter})).elements,
                         build(single(2, {2, 1}, {1, 1}, {other, longer})).elements));
    }
  }
}

TEST(Dark, WellDefinedness) {
  auto spec = typeA_rows(2, {1}, {{1, 2, 1}});
  const auto wd = well_definedness_check(spec);
  EXPECT_TRUE(wd.ok);
  EXPECT_EQ(wd.combinations, 2u);
  const auto wd2 = well_definedness_check(typeA_rows(2, {2, 1}, {{1, 2, 1}, {1, 2, 1}}));
  EXPECT_TRUE(wd2.ok);
  EXPECT_EQ(wd2.combinations, 4u);
  EXPECT_EQ(well_definedness_check(single(1, {1}, {1}, {{1}})).combinations, 1u);
}

TEST(Dark, PrefixedWordsUseDemazureProduct) {
  // v = s_1 and w' = s_1: the product s_1 s_1 is not reduced; the Demazure product is s_1.
  DarkSpec spec{1, {1}, {1}, {{{1}, {1}}}};
  const auto factors = resolve(spec);
  EXPECT_EQ(factors.front().w, ExtAffPerm::simple(2, 1));
  EXPECT_EQ(factors.front().word, (ReducedWord{1}));
  EXPECT_TRUE(verify(spec).ok);
}

TEST(Dark, InvalidSpecs) {
  EXPECT_THROW(build(single(1, {1, 2}, {1, 1}, {{}, {}})), invalid_input);
  EXPECT_THROW(build(single(1, {-1}, {1}, {{}})), invalid_input);
  EXPECT_THROW(build(single(1, {1}, {1, 1}, {{}})), invalid_input);
  EXPECT_THROW(build(single(1, {1}, {1}, {{1, 1}})), invalid_input);
  EXPECT_THROW(build(single(1, {1}, {1}, {{0}})), invalid_input);
  EXPECT_THROW(build(single(2, {1}, {1}, {{1, 2}})), invalid_input);
  EXPECT_THROW(build(single(2, {1}, {3}, {{}})), invalid_input);
  EXPECT_THROW(build(DarkSpec{2, {1}, {1}, {{{0}, {}}}}), invalid_input);
  EXPECT_THROW(build(DarkSpec{2, {}, {}, {}}), invalid_input);
}

TEST(Dark, CompareCharactersReportsDiff) {
  const CartanA c(1);
  const auto a = CharPoly::monomial(fundamental_weight(c, 0));
  const auto b = CharPoly::monomial(fundamental_weight(c, 1));
  const auto v = compare_characters(c, a, a + b);
  EXPECT_FALSE(v.ok);
  ASSERT_EQ(v.diff.size(), 1u);
  EXPECT_EQ(v.diff.front(), "-1 e^(0,1;0)");
  EXPECT_EQ(describe(AffineWeight{{2, -1}, Rational(-1, 2)}), "(2,-1;-1/2)");
}
