#pragma once

// Extended affine Weyl group of type A_n^(1), realized as bijections f of Z
// with f(i + m) = f(i) + m, stored by their window [f(1), ..., f(m)].

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "darkc/cartan.hpp"
#include "darkc/error.hpp"

namespace darkc {

/// Sequence of node indices i_1 ... i_l standing for s_{i_1} ... s_{i_l}.
using ReducedWord = std::vector<int>;

namespace detail {
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
}  // namespace detail

class ExtAffPerm {
 public:
  ExtAffPerm() = default;

  explicit ExtAffPerm(std::vector<std::int64_t> window) : win_(std::move(window)) {
    const auto m = static_cast<std::int64_t>(win_.size());
    if (m < 2) throw invalid_input("window must have length >= 2");
    std::vector<bool> seen(m, false);
    for (auto v : win_) {
      auto r = ((v % m) + m) % m;
      if (seen[r]) throw invalid_input("window residues are not distinct");
      seen[r] = true;
    }
  }

  static ExtAffPerm identity(int m) {
    std::vector<std::int64_t> w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1;
    return ExtAffPerm(std::move(w));
  }

  /// s_i swaps the residue classes of i and i+1; s_0 swaps m and m+1.
  static ExtAffPerm simple(int m, int i) {
    if (i < 0 || i >= m) throw invalid_input("simple reflection index out of range");
    auto w = identity(m);
    if (i == 0) {
      w.win_[0] = 0;
      w.win_[m - 1] = m + 1;
    } else {
      std::swap(w.win_[i - 1], w.win_[i]);
    }
    return w;
  }

  /// pi^k where pi(i) = i + 1 generates the rotation subgroup Sigma.
  static ExtAffPerm rotation(int m, std::int64_t k) {
    std::vector<std::int64_t> w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1 + k;
    return ExtAffPerm(std::move(w));
  }

  /// t_a: f(i) = i + m * a_i for i = 1..m (a indexed from 0).
  static ExtAffPerm translation(const std::vector<std::int64_t>& a) {
    const auto m = static_cast<std::int64_t>(a.size());
    std::vector<std::int64_t> w(m);
    for (std::int64_t i = 0; i < m; ++i) w[i] = i + 1 + m * a[i];
    return ExtAffPerm(std::move(w));
  }

  static ExtAffPerm from_word(int m, const ReducedWord& word) {
    auto w = identity(m);
    for (int i : word) w = w * simple(m, i);
    return w;
  }

  int size() const noexcept { return static_cast<int>(win_.size()); }
  const std::vector<std::int64_t>& window() const noexcept { return win_; }

  std::int64_t operator()(std::int64_t i) const {
    const std::int64_t m = size();
    const std::int64_t q = detail::floor_div(i - 1, m);
    return win_[i - 1 - q * m] + q * m;
  }

  friend ExtAffPerm operator*(const ExtAffPerm& a, const ExtAffPerm& b) {
    if (a.size() != b.size()) throw invalid_input("rank mismatch in product");
    std::vector<std::int64_t> w(a.size());
    for (int i = 0; i < a.size(); ++i) w[i] = a(b.win_[i]);
    ExtAffPerm out;
    out.win_ = std::move(w);
    return out;
  }

  ExtAffPerm inverse() const {
    const std::int64_t m = size();
    std::vector<std::int64_t> w(m);
    for (std::int64_t i = 1; i <= m; ++i) {
      const std::int64_t v = win_[i - 1];
      const std::int64_t q = detail::floor_div(v - 1, m);
      // f(i) = v  =>  f^{-1}(v - q m) = i - q m
      w[v - q * m - 1] = i - q * m;
    }
    ExtAffPerm out;
    out.win_ = std::move(w);
    return out;
  }

  /// sum_i (f(i) - i); always divisible by m.
  std::int64_t shift() const {
    std::int64_t s = 0;
    for (int i = 0; i < size(); ++i) s += win_[i] - (i + 1);
    return s;
  }

  /// shift / m, the exponent of pi in the decomposition f = y pi^k.
  std::int64_t rotation_amount() const { return shift() / size(); }

  /// Member of the non-extended group W (shift 0 modulo the central pi^m).
  bool in_W() const { return detail::floor_div(rotation_amount(), size()) * size() == rotation_amount(); }

  /// Multiplies by the central element pi^{-qm} so that the shift lies in [0, m^2).
  ExtAffPerm central_reduced() const {
    const std::int64_t m = size();
    const std::int64_t q = detail::floor_div(rotation_amount(), m);
    if (q == 0) return *this;
    return *this * rotation(size(), -q * m);
  }

  /// Number of pairs (i, j) with 1 <= i <= m, i < j, f(i) > f(j).
  std::int64_t length() const {
    const std::int64_t m = size();
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < m; ++i) {
      for (std::int64_t j = 0; j < m; ++j) {
        const std::int64_t kmin = j > i ? 0 : 1;
        const std::int64_t kmax_excl = detail::ceil_div(win_[i] - win_[j], m);
        count += std::max<std::int64_t>(0, kmax_excl - kmin);
      }
    }
    return count;
  }

  friend bool operator==(const ExtAffPerm&, const ExtAffPerm&) = default;
  friend bool operator<(const ExtAffPerm& a, const ExtAffPerm& b) { return a.win_ < b.win_; }

 private:
  std::vector<std::int64_t> win_;
};

struct SigmaFactor {
  int k;         ///< rotation class in Z/m
  ExtAffPerm y;  ///< element of W (shift 0)
};

/// w = y * pi^k modulo the central element pi^m.
inline SigmaFactor factor_sigma(const ExtAffPerm& w) {
  const int m = w.size();
  const std::int64_t k = w.rotation_amount();
  ExtAffPerm y = w * ExtAffPerm::rotation(m, -k);
  const int cls = static_cast<int>(((k % m) + m) % m);
  // Recompose: y * pi^k must agree with w up to a central factor.
  ExtAffPerm back = y * ExtAffPerm::rotation(m, cls);
  if ((back.inverse() * w).central_reduced() != ExtAffPerm::identity(m))
    throw model_error("factor_sigma: recomposition failed");
  return {cls, y};
}

inline std::vector<int> left_descents(const ExtAffPerm& w) {
  std::vector<int> out;
  const auto len = w.length();
  for (int i = 0; i < w.size(); ++i)
    if ((ExtAffPerm::simple(w.size(), i) * w).length() < len) out.push_back(i);
  return out;
}

/// Greedy left-descent removal, smallest descent first.
inline ReducedWord reduced_word(const ExtAffPerm& y) {
  ReducedWord word;
  ExtAffPerm cur = y;
  auto len = cur.length();
  while (len > 0) {
    int found = -1;
    for (int i = 0; i < cur.size(); ++i) {
      auto next = ExtAffPerm::simple(cur.size(), i) * cur;
      if (next.length() < len) {
        found = i;
        cur = std::move(next);
        break;
      }
    }
    if (found < 0) throw model_error("reduced_word: no descent for positive-length element");
    word.push_back(found);
    --len;
  }
  return word;
}

/// Every reduced word of y, in lexicographic order.
inline std::vector<ReducedWord> all_reduced_words(const ExtAffPerm& y, std::int64_t cap) {
  if (y.length() > cap)
    throw invalid_input("length " + std::to_string(y.length()) + " exceeds cap " + std::to_string(cap));
  std::vector<ReducedWord> out;
  ReducedWord prefix;
  std::function<void(const ExtAffPerm&)> walk = [&](const ExtAffPerm& cur) {
    if (cur.length() == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i : left_descents(cur)) {
      prefix.push_back(i);
      walk(ExtAffPerm::simple(cur.size(), i) * cur);
      prefix.pop_back();
    }
  };
  walk(y);
  return out;
}

inline bool is_reduced(int m, const ReducedWord& word) {
  return ExtAffPerm::from_word(m, word).length() == static_cast<std::int64_t>(word.size());
}

/// Product in the 0-Hecke monoid: letters that would shorten the element are dropped.
inline ExtAffPerm demazure_product(int m, const ReducedWord& word) {
  auto w = ExtAffPerm::identity(m);
  for (int i : word) {
    auto next = w * ExtAffPerm::simple(m, i);
    if (next.length() > w.length()) w = std::move(next);
  }
  return w;
}

/// The Bruhat interval [e, y]: all products of subwords of a reduced word of y.
inline std::set<ExtAffPerm> bruhat_interval(const ExtAffPerm& y) {
  if (!y.in_W()) throw invalid_input("bruhat_interval: argument must lie in W");
  const int m = y.size();
  std::set<ExtAffPerm> interval{ExtAffPerm::identity(m)};
  for (int i : reduced_word(y.central_reduced())) {
    std::set<ExtAffPerm> grown = interval;
    const auto s = ExtAffPerm::simple(m, i);
    for (const auto& x : interval) grown.insert(x * s);
    interval = std::move(grown);
  }
  return interval;
}

inline bool bruhat_leq(const ExtAffPerm& w, const ExtAffPerm& y) {
  if (!w.in_W() || !y.in_W()) throw invalid_input("bruhat_leq: arguments must lie in W");
  const ExtAffPerm wr = w.central_reduced();
  if (wr.length() > y.length()) return false;
  return bruhat_interval(y).count(wr) > 0;
}

struct KRTranslation {
  ExtAffPerm y;
  int k;
};

/// Factorization t_mu = y tau for mu = w_0(varpi_r): the translation by the
/// integer vector with ones in the last r coordinates.
inline KRTranslation kr_translation_data(const CartanA& c, int r) {
  if (r < 1 || r > c.rank())
    throw invalid_input("r = " + std::to_string(r) + " outside 1.." + std::to_string(c.rank()));
  const int m = c.size();
  std::vector<std::int64_t> a(m, 0);
  for (int i = m - r; i < m; ++i) a[i] = 1;
  auto f = factor_sigma(ExtAffPerm::translation(a));
  return {f.y, f.k};
}

}  // namespace darkc
