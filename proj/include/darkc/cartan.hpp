#pragma once

// Affine Cartan data of type A_n^(1) and the weight lattice P written in the
// basis {Lambda_0, ..., Lambda_n, delta}.

#include <cstdint>
#include <string>
#include <vector>

#include "darkc/error.hpp"
#include "darkc/rational.hpp"

namespace darkc {

/// Cartan datum of type A_n^(1); nodes are 0..n and m = n + 1.
class CartanA {
 public:
  explicit CartanA(int n) : n_(n) {
    if (n < 1) throw invalid_input("rank must be >= 1, got " + std::to_string(n));
  }

  int rank() const noexcept { return n_; }
  int size() const noexcept { return n_ + 1; }

  void check_node(int i) const {
    if (i < 0 || i > n_)
      throw invalid_input("node " + std::to_string(i) + " outside 0.." + std::to_string(n_));
  }

  int mod(long long k) const noexcept {
    const long long m = size();
    return static_cast<int>(((k % m) + m) % m);
  }

  int entry(int i, int j) const {
    check_node(i);
    check_node(j);
    if (i == j) return 2;
    if (n_ == 1) return -2;
    const int d = mod(i - j);
    return (d == 1 || d == size() - 1) ? -1 : 0;
  }

  /// <d, Lambda_j> under the normalization <d, Lambda_0> = 0.
  Rational d_lambda(int j) const {
    check_node(j);
    const std::int64_t m = size();
    return Rational(-static_cast<std::int64_t>(j) * (m - j), 2 * m);
  }

  friend bool operator==(const CartanA&, const CartanA&) = default;

 private:
  int n_;
};

/// Element of P_cl: coefficients of cl(Lambda_i).
struct ClWeight {
  std::vector<int> lam;

  int level() const {
    int total = 0;
    for (int x : lam) total += x;
    return total;
  }

  ClWeight& operator+=(const ClWeight& o) {
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += o.lam[i];
    return *this;
  }
  ClWeight& operator-=(const ClWeight& o) {
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] -= o.lam[i];
    return *this;
  }
  friend ClWeight operator+(ClWeight a, const ClWeight& b) { return a += b; }
  friend ClWeight operator-(ClWeight a, const ClWeight& b) { return a -= b; }
  friend bool operator==(const ClWeight&, const ClWeight&) = default;
  friend bool operator<(const ClWeight& a, const ClWeight& b) { return a.lam < b.lam; }
};

/// Element of P: sum_i lam[i] Lambda_i + delta * delta.
struct AffineWeight {
  std::vector<int> lam;
  Rational delta{0};

  AffineWeight& operator+=(const AffineWeight& o) {
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += o.lam[i];
    delta += o.delta;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] -= o.lam[i];
    delta -= o.delta;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(long long k, AffineWeight a) {
    for (int& x : a.lam) x = static_cast<int>(x * k);
    a.delta *= k;
    return a;
  }

  ClWeight cl() const { return ClWeight{lam}; }

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  // Lexicographic on lam, then delta.
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (a.lam != b.lam) return a.lam < b.lam;
    return a.delta < b.delta;
  }
};

inline AffineWeight zero_weight(const CartanA& c) {
  return AffineWeight{std::vector<int>(c.size(), 0), Rational(0)};
}

inline ClWeight zero_cl_weight(const CartanA& c) { return ClWeight{std::vector<int>(c.size(), 0)}; }

inline AffineWeight fundamental_weight(const CartanA& c, int j) {
  c.check_node(j);
  auto w = zero_weight(c);
  w.lam[j] = 1;
  return w;
}

inline AffineWeight null_root(const CartanA& c) {
  auto w = zero_weight(c);
  w.delta = 1;
  return w;
}

/// alpha_i: lam is the i-th column of the Cartan matrix and every simple root
/// carries delta-coefficient 1/m, so that the simple roots sum to delta.
inline AffineWeight simple_root(const CartanA& c, int i) {
  c.check_node(i);
  AffineWeight a = zero_weight(c);
  for (int j = 0; j < c.size(); ++j) a.lam[j] = c.entry(j, i);
  a.delta = Rational(1, c.size());
  return a;
}

inline ClWeight cl_simple_root(const CartanA& c, int i) { return simple_root(c, i).cl(); }

/// s_i(mu) = mu - <alpha_i^vee, mu> alpha_i.
inline AffineWeight reflect(const CartanA& c, int i, const AffineWeight& mu) {
  c.check_node(i);
  return mu - static_cast<long long>(mu.lam[i]) * simple_root(c, i);
}

/// Dynkin rotation j -> j + k (mod m); fixes delta.
inline AffineWeight rotate(const CartanA& c, long long k, const AffineWeight& mu) {
  AffineWeight out = zero_weight(c);
  for (int j = 0; j < c.size(); ++j) out.lam[c.mod(j + k)] = mu.lam[j];
  out.delta = mu.delta;
  return out;
}

inline ClWeight rotate(const CartanA& c, long long k, const ClWeight& mu) {
  ClWeight out = zero_cl_weight(c);
  for (int j = 0; j < c.size(); ++j) out.lam[c.mod(j + k)] = mu.lam[j];
  return out;
}

inline Rational d_pair(const CartanA& c, const AffineWeight& mu) {
  Rational total = mu.delta;
  for (int j = 0; j < c.size(); ++j) total += static_cast<std::int64_t>(mu.lam[j]) * c.d_lambda(j);
  return total;
}

/// The section aff of cl with <d, aff(mu)> = 0. Only level-zero input is accepted.
inline AffineWeight aff_level_zero(const CartanA& c, const ClWeight& mu) {
  if (static_cast<int>(mu.lam.size()) != c.size()) throw invalid_input("weight has wrong length");
  if (mu.level() != 0)
    throw invalid_input("aff_level_zero: weight has level " + std::to_string(mu.level()));
  AffineWeight out{mu.lam, Rational(0)};
  out.delta = -d_pair(c, out);
  return out;
}

}  // namespace darkc
