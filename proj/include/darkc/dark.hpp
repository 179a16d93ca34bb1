#pragma once

// DARK crystals: Demazure-closed subsets of B^{r_1,lambda_1} (x) ... (x) B^{r_p,lambda_p}
// obtained by alternating seeds b^{r_j,lambda_j}, promotion twists and
// Demazure closures, together with the energy-adjusted character identity.

#include <algorithm>
#include <functional>
#include <limits>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "darkc/cartan.hpp"
#include "darkc/charring.hpp"
#include "darkc/crystal.hpp"
#include "darkc/energy.hpp"
#include "darkc/kr.hpp"
#include "darkc/weyl.hpp"

namespace darkc {

/// w_j = v_j w'_j with v_j a classical prefix and w'_j <= y_{r_j}.
struct FactorWord {
  ReducedWord prefix;
  ReducedWord word;
};

struct DarkSpec {
  int n = 1;
  std::vector<int> lambda;
  std::vector<int> r;
  std::vector<FactorWord> words;
};

struct ResolvedFactor {
  KRCrystal crystal;
  Tableau seed;     // b^{r, lambda}
  ExtAffPerm y;     // from t_{w_0(varpi_r)} = y tau
  int tau;          // rotation class of tau
  ExtAffPerm w;     // the Weyl group element closing this factor
  ReducedWord word; // the reduced word used for w
};

struct DarkSet {
  std::vector<KRCrystal> factors;
  std::set<TensorElt> elements;
};

/// Validates the spec and computes the per-factor data.
inline std::vector<ResolvedFactor> resolve(const DarkSpec& spec) {
  const CartanA c(spec.n);
  const std::size_t p = spec.lambda.size();
  if (p == 0) throw invalid_input("lambda must be nonempty");
  if (spec.r.size() != p) throw invalid_input("r and lambda lengths differ");
  if (spec.words.size() != p) throw invalid_input("number of words differs from length of lambda");
  for (std::size_t j = 0; j < p; ++j) {
    if (spec.lambda[j] < 0) throw invalid_input("lambda entries must be >= 0");
    if (j + 1 < p && spec.lambda[j] < spec.lambda[j + 1]) throw invalid_input("lambda must be weakly decreasing");
  }
  const int m = c.size();
  std::vector<ResolvedFactor> out;
  for (std::size_t j = 0; j < p; ++j) {
    const auto& fw = spec.words[j];
    for (int i : fw.prefix)
      if (i < 1 || i > spec.n) throw invalid_input("classical prefix letters must lie in 1..n");
    for (int i : fw.word) c.check_node(i);
    if (!is_reduced(m, fw.prefix)) throw invalid_input("classical prefix of factor " + std::to_string(j + 1) + " is not reduced");
    if (!is_reduced(m, fw.word)) throw invalid_input("word of factor " + std::to_string(j + 1) + " is not reduced");
    const auto data = kr_translation_data(c, spec.r[j]);
    const auto w_tail = ExtAffPerm::from_word(m, fw.word);
    if (!bruhat_leq(w_tail, data.y))
      throw invalid_input("word of factor " + std::to_string(j + 1) + " is not below y_" + std::to_string(spec.r[j]) +
                          " in Bruhat order");
    ReducedWord joined = fw.prefix;
    joined.insert(joined.end(), fw.word.begin(), fw.word.end());
    ExtAffPerm w = demazure_product(m, joined);
    ReducedWord used = is_reduced(m, joined) ? joined : reduced_word(w);
    KRCrystal b(c, spec.r[j], spec.lambda[j]);
    out.push_back({b, find_b_rs(c, spec.r[j], spec.lambda[j]), data.y, data.k, std::move(w), std::move(used)});
  }
  return out;
}

/// S_p = F_{w_p}{b_p}; S_j = F_{w_j}({b_j (x) twist(tau_j, x) : x in S_{j+1}}).
inline DarkSet build_with_words(const std::vector<ResolvedFactor>& factors, const std::vector<ReducedWord>& words) {
  const std::size_t p = factors.size();
  if (words.size() != p) throw invalid_input("build: one word per factor required");
  const CartanA& c = factors.front().crystal.cartan();
  std::vector<KRCrystal> shape;
  for (const auto& f : factors) shape.push_back(f.crystal);

  std::set<TensorElt> current;
  {
    KRTensor tail({shape[p - 1]});
    current = demazure_closure(tail, words[p - 1], {TensorElt{factors[p - 1].seed}});
  }
  for (std::size_t j = p - 1; j-- > 0;) {
    KRTensor tail(std::vector<KRCrystal>(shape.begin() + static_cast<long>(j), shape.end()));
    std::set<TensorElt> seeds;
    for (const auto& x : current) {
      TensorElt y{factors[j].seed};
      auto twisted = twist(c, factors[j].tau, x);
      y.insert(y.end(), twisted.begin(), twisted.end());
      seeds.insert(std::move(y));
    }
    current = demazure_closure(tail, words[j], std::move(seeds));
  }
  return {std::move(shape), std::move(current)};
}

inline DarkSet build(const DarkSpec& spec) {
  const auto factors = resolve(spec);
  std::vector<ReducedWord> words;
  for (const auto& f : factors) words.push_back(f.word);
  return build_with_words(factors, words);
}

struct WellDefinedness {
  bool ok = true;
  std::size_t combinations = 0;
};

/// Rebuilds the DARK set for every combination of reduced words of the w_j.
inline WellDefinedness well_definedness_check(const DarkSpec& spec, std::int64_t cap = 12) {
  const auto factors = resolve(spec);
  std::vector<std::vector<ReducedWord>> choices;
  for (const auto& f : factors) choices.push_back(all_reduced_words(f.w, cap));
  WellDefinedness out;
  std::optional<std::set<TensorElt>> reference;
  std::vector<ReducedWord> pick(factors.size());
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (!out.ok) return;
    if (k == factors.size()) {
      ++out.combinations;
      auto set = build_with_words(factors, pick).elements;
      if (!reference)
        reference = std::move(set);
      else if (set != *reference)
        out.ok = false;
      return;
    }
    for (const auto& w : choices[k]) {
      pick[k] = w;
      walk(k + 1);
    }
  };
  walk(0);
  return out;
}

/// sum over b of e^{lambda_1 Lambda_0 + aff(wt b) - delta D(b)}.
inline CharPoly lhs_character(const DarkSpec& spec, const DarkSet& set, EnergyCache& cache) {
  const CartanA c(spec.n);
  KRTensor product(set.factors);
  const AffineWeight base = static_cast<long long>(spec.lambda.front()) * fundamental_weight(c, 0);
  CharPoly out;
  for (const auto& b : set.elements) {
    AffineWeight mu = base + aff_level_zero(c, product.weight(b));
    mu.delta -= total_D(cache, set.factors, b).total;
    out.add(mu, 1);
  }
  return out;
}

inline CharPoly rhs_character(const DarkSpec& spec) {
  const CartanA c(spec.n);
  const auto factors = resolve(spec);
  std::vector<ReducedWord> words;
  std::vector<int> taus;
  for (const auto& f : factors) {
    words.push_back(f.word);
    taus.push_back(f.tau);
  }
  return rhs_formula(c, spec.lambda, words, taus);
}

struct VerifyResult {
  bool ok = false;
  std::optional<Rational> C;
  CharPoly lhs;  // without the e^{delta C} factor
  CharPoly rhs;
  std::vector<std::string> diff;  // term-level mismatches, "+" only in shifted lhs, "-" only in rhs
};

inline std::string describe(const AffineWeight& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.lam.size(); ++i) s += (i ? "," : "") + std::to_string(mu.lam[i]);
  return s + ";" + to_string(mu.delta) + ")";
}

/// Fits a single C with e^{delta C} * lhs == rhs and checks exact equality.
inline VerifyResult compare_characters(const CartanA& c, CharPoly lhs, CharPoly rhs) {
  VerifyResult out;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  if (out.lhs.empty() || out.rhs.empty()) {
    out.ok = out.lhs.empty() && out.rhs.empty();
    if (out.ok) out.C = Rational(0);
    return out;
  }
  // Smallest lam in the lhs, lowest delta within it, against the same lam in the rhs.
  const AffineWeight& anchor = out.lhs.terms().begin()->first;
  auto it = out.rhs.terms().lower_bound(AffineWeight{anchor.lam, Rational(std::numeric_limits<std::int64_t>::min() / 2)});
  if (it != out.rhs.terms().end() && it->first.lam == anchor.lam) out.C = it->first.delta - anchor.delta;
  AffineWeight shift = zero_weight(c);
  if (out.C) shift.delta = *out.C;
  const CharPoly shifted = out.lhs.shifted(shift);
  const CharPoly delta = shifted - out.rhs;
  for (const auto& [mu, k] : delta.terms())
    out.diff.push_back((k > 0 ? "+" : "-") + std::to_string(k > 0 ? k : -k) + " e^" + describe(mu));
  out.ok = out.C.has_value() && delta.empty();
  return out;
}

inline VerifyResult verify(const DarkSpec& spec, EnergyCache& cache) {
  const CartanA c(spec.n);
  auto rhs = std::async(std::launch::async, [&spec] { return rhs_character(spec); });
  const DarkSet set = build(spec);
  CharPoly lhs = lhs_character(spec, set, cache);
  return compare_characters(c, std::move(lhs), rhs.get());
}

inline VerifyResult verify(const DarkSpec& spec) {
  EnergyCache cache{CartanA(spec.n)};
  return verify(spec, cache);
}

/// Single-row case: every r_j = 1 and every w_j drawn from W_0,
/// passed as a classical prefix with empty tail.
inline DarkSpec typeA_rows(int n, const std::vector<int>& lambda, const std::vector<ReducedWord>& classical_words) {
  DarkSpec spec;
  spec.n = n;
  spec.lambda = lambda;
  spec.r.assign(lambda.size(), 1);
  for (const auto& w : classical_words) spec.words.push_back({w, {}});
  return spec;
}

/// The spec with every w_j = y_{r_j}.
inline DarkSpec full_tensor_spec(int n, const std::vector<int>& lambda, const std::vector<int>& r) {
  const CartanA c(n);
  DarkSpec spec{n, lambda, r, {}};
  for (int rj : r) spec.words.push_back({{}, reduced_word(kr_translation_data(c, rj).y)});
  return spec;
}

}  // namespace darkc
