#pragma once

// The group ring Z[P], Demazure operators and the nested operator formula for
// characters of generalized Demazure crystals.

#include <cstdint>
#include <map>
#include <vector>

#include "darkc/cartan.hpp"
#include "darkc/error.hpp"
#include "darkc/weyl.hpp"

namespace darkc {

/// Finitely supported map AffineWeight -> integer; zero coefficients are never stored.
class CharPoly {
 public:
  using Terms = std::map<AffineWeight, std::int64_t>;

  CharPoly() = default;

  static CharPoly monomial(const AffineWeight& mu, std::int64_t coef = 1) {
    CharPoly p;
    p.add(mu, coef);
    return p;
  }

  void add(const AffineWeight& mu, std::int64_t coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(const AffineWeight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  CharPoly& operator+=(const CharPoly& o) {
    for (const auto& [mu, k] : o.terms_) add(mu, k);
    return *this;
  }
  CharPoly& operator-=(const CharPoly& o) {
    for (const auto& [mu, k] : o.terms_) add(mu, -k);
    return *this;
  }
  friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
  friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }

  friend CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    CharPoly out;
    for (const auto& [mu, k] : a.terms_)
      for (const auto& [nu, l] : b.terms_) out.add(mu + nu, k * l);
    return out;
  }

  /// e^{shift} * this
  CharPoly shifted(const AffineWeight& shift) const {
    CharPoly out;
    for (const auto& [mu, k] : terms_) out.terms_.emplace(mu + shift, k);
    return out;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  Terms terms_;
};

/// s_i acting on exponents.
inline CharPoly reflect(const CartanA& c, int i, const CharPoly& f) {
  CharPoly out;
  for (const auto& [mu, k] : f.terms()) out.add(reflect(c, i, mu), k);
  return out;
}

/// D_i(f) = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i}), evaluated per
/// monomial as a geometric sum.
inline CharPoly demazure_op(const CartanA& c, int i, const CharPoly& f) {
  c.check_node(i);
  const AffineWeight alpha = simple_root(c, i);
  CharPoly out;
  for (const auto& [mu, coef] : f.terms()) {
    const int k = mu.lam[i];
    if (k >= 0) {
      AffineWeight cur = mu;
      for (int t = 0; t <= k; ++t) {
        out.add(cur, coef);
        cur -= alpha;
      }
    } else if (k <= -2) {
      AffineWeight cur = mu;
      for (int t = 1; t <= -k - 1; ++t) {
        cur += alpha;
        out.add(cur, -coef);
      }
    }
  }
  return out;
}

/// D_{i_1} ... D_{i_l} f: the last letter acts first.
inline CharPoly demazure_word(const CartanA& c, const ReducedWord& word, CharPoly f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_op(c, *it, f);
  return f;
}

inline CharPoly sigma_act(const CartanA& c, long long k, const CharPoly& f) {
  CharPoly out;
  for (const auto& [mu, coef] : f.terms()) out.add(rotate(c, k, mu), coef);
  return out;
}

/// D_{w_1} tau_1(e^{lam^1 Lambda_0} D_{w_2} tau_2( ... D_{w_p} tau_p(e^{lam^p Lambda_0}))),
/// with lam^j = lambda_j - lambda_{j+1}.
inline CharPoly rhs_formula(const CartanA& c, const std::vector<int>& lambda, const std::vector<ReducedWord>& words,
                            const std::vector<int>& taus) {
  const std::size_t p = lambda.size();
  if (words.size() != p || taus.size() != p) throw invalid_input("rhs_formula: lengths of lambda, words, taus differ");
  for (std::size_t j = 0; j < p; ++j) {
    const int next = j + 1 < p ? lambda[j + 1] : 0;
    if (lambda[j] < next || lambda[j] < 0) throw invalid_input("rhs_formula: lambda must be weakly decreasing and >= 0");
  }
  CharPoly g = CharPoly::monomial(zero_weight(c));
  for (std::size_t jj = p; jj-- > 0;) {
    const int diff = lambda[jj] - (jj + 1 < p ? lambda[jj + 1] : 0);
    const AffineWeight seed = static_cast<long long>(diff) * fundamental_weight(c, 0);
    g = demazure_word(c, words[jj], sigma_act(c, taus[jj], g.shifted(seed)));
  }
  return g;
}

}  // namespace darkc
