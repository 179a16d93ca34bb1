#pragma once

// Reference routines that recompute quantities along an independent route.
// Used by the self-test and the test suites, never by the main algorithms.

#include <map>
#include <optional>

#include "darkc/cartan.hpp"
#include "darkc/charring.hpp"

namespace darkc::oracle {

/// Exact quotient num / (1 - e^{-alpha_i}), or nullopt when it does not divide.
inline std::optional<CharPoly> divide_by_one_minus_root(const CartanA& c, int i, const CharPoly& num) {
  const AffineWeight alpha = simple_root(c, i);
  // Each alpha_i-string has a representative with lam[i] in {0, 1}; a term sits
  // at position floor(lam[i] / 2) above it.
  std::map<AffineWeight, std::map<long long, std::int64_t>> strings;
  for (const auto& [mu, k] : num.terms()) {
    const long long lam = mu.lam[i];
    const long long pos = lam >= 0 ? lam / 2 : -((-lam + 1) / 2);
    strings[mu - pos * alpha][pos] += k;
  }
  CharPoly q;
  for (const auto& [rep, terms] : strings) {
    std::int64_t carry = 0;
    const long long top = terms.rbegin()->first;
    const long long bottom = terms.begin()->first;
    for (long long t = top; t >= bottom; --t) {
      auto it = terms.find(t);
      carry += it == terms.end() ? 0 : it->second;
      q.add(rep + t * alpha, carry);
    }
    if (carry != 0) return std::nullopt;
  }
  return q;
}

/// D_i evaluated literally as (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}).
inline std::optional<CharPoly> demazure_by_division(const CartanA& c, int i, const CharPoly& f) {
  const AffineWeight alpha = simple_root(c, i);
  CharPoly num = f - reflect(c, i, f).shifted(zero_weight(c) - alpha);
  return divide_by_one_minus_root(c, i, num);
}

}  // namespace darkc::oracle
