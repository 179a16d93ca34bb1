#pragma once

// Combinatorial R-matrix, local energy H and the total energy D on tensor
// products of rectangular KR crystals.

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "darkc/crystal.hpp"
#include "darkc/kr.hpp"

namespace darkc {

using TensorElt = std::vector<Tableau>;
using KRTensor = TensorProduct<KRCrystal>;

/// R: B1 (x) B2 -> B2 (x) B1 and H on B1 (x) B2, built once per pair.
class EnergyTable {
 public:
  EnergyTable(const KRCrystal& b1, const KRCrystal& b2) : pair_({b1, b2}), swapped_({b2, b1}) {
    build_r();
    build_h();
  }

  const KRTensor& pair() const noexcept { return pair_; }
  const KRTensor& swapped() const noexcept { return swapped_; }

  const TensorElt& R(const TensorElt& x) const {
    auto it = r_.find(x);
    if (it == r_.end()) throw invalid_input("R: element not in B1 (x) B2");
    return it->second;
  }

  int H(const TensorElt& x) const {
    auto it = h_.find(x);
    if (it == h_.end()) throw invalid_input("H: element not in B1 (x) B2");
    return it->second;
  }

  const std::map<TensorElt, TensorElt>& r_map() const noexcept { return r_; }
  const std::map<TensorElt, int>& h_map() const noexcept { return h_; }

 private:
  static std::map<ClWeight, TensorElt> classical_highest(const KRTensor& t) {
    std::map<ClWeight, TensorElt> out;
    for (const auto& x : t.elements()) {
      bool highest = true;
      for (int i = 1; i <= t.cartan().rank() && highest; ++i) highest = t.epsilon(i, x) == 0;
      if (!highest) continue;
      if (!out.emplace(t.weight(x), x).second)
        throw model_error("comb_R: classical decomposition is not multiplicity-free");
    }
    return out;
  }

  void build_r() {
    classical_highest(pair_);
    const auto targets = classical_highest(swapped_);
    std::set<TensorElt> image;
    for (const auto& x : pair_.elements()) {
      auto path = classical_highest_path(pair_, x);
      auto it = targets.find(pair_.weight(path.highest));
      if (it == targets.end()) throw model_error("comb_R: no matching classical component");
      auto y = lower_along(swapped_, it->second, path.word);
      if (!image.insert(y).second) throw model_error("comb_R: not injective");
      r_.emplace(x, std::move(y));
    }
  }

  // +1 if e_0 acts on the left factor in both x and R(x), -1 if on the right
  // in both, 0 otherwise. Requires e_0 x != 0.
  int zero_arrow_step(const TensorElt& x) const {
    const auto here = pair_.e_position(0, x);
    const auto there = swapped_.e_position(0, R(x));
    if (!here || !there) throw model_error("local_H: e_0 vanished on one side of R");
    if (*here == 0 && *there == 0) return 1;
    if (*here == 1 && *there == 1) return -1;
    return 0;
  }

  void build_h() {
    const TensorElt start{pair_.factors()[0].classical_highest(), pair_.factors()[1].classical_highest()};
    h_.emplace(start, 0);
    std::deque<TensorElt> work{start};
    auto assign = [&](const TensorElt& y, int value) {
      auto [it, inserted] = h_.emplace(y, value);
      if (inserted)
        work.push_back(y);
      else if (it->second != value)
        throw model_error("local_H: contradictory assignment");
    };
    while (!work.empty()) {
      const TensorElt x = work.front();
      work.pop_front();
      const int hx = h_.at(x);
      for (int i = 0; i < pair_.cartan().size(); ++i) {
        if (auto up = pair_.e(i, x)) assign(*up, i == 0 ? hx + zero_arrow_step(x) : hx);
        if (auto down = pair_.f(i, x)) assign(*down, i == 0 ? hx - zero_arrow_step(*down) : hx);
      }
    }
    if (h_.size() != r_.size()) throw model_error("local_H: B1 (x) B2 is not connected");
  }

  KRTensor pair_;
  KRTensor swapped_;
  std::map<TensorElt, TensorElt> r_;
  std::map<TensorElt, int> h_;
};

/// Memoized energy tables for one rank, keyed by the two rectangle shapes.
class EnergyCache {
 public:
  explicit EnergyCache(CartanA c) : c_(c) {}

  const CartanA& cartan() const noexcept { return c_; }

  const EnergyTable& table(const KRCrystal& b1, const KRCrystal& b2) {
    if (!(b1.cartan() == c_) || !(b2.cartan() == c_)) throw invalid_input("EnergyCache: rank mismatch");
    const auto key = std::make_tuple(b1.r(), b1.s(), b2.r(), b2.s());
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(key);
    if (it == tables_.end()) it = tables_.emplace(key, std::make_unique<EnergyTable>(b1, b2)).first;
    return *it->second;
  }

 private:
  CartanA c_;
  std::mutex mu_;
  std::map<std::tuple<int, int, int, int>, std::unique_ptr<EnergyTable>> tables_;
};

inline TensorElt comb_R(EnergyCache& cache, const KRCrystal& b1, const KRCrystal& b2, const TensorElt& x) {
  return cache.table(b1, b2).R(x);
}

inline int local_H(EnergyCache& cache, const KRCrystal& b1, const KRCrystal& b2, const TensorElt& x) {
  return cache.table(b1, b2).H(x);
}

struct EnergyTerm {
  std::size_t i;
  std::size_t j;
  int h;
};

struct EnergyBreakdown {
  int total = 0;
  std::vector<EnergyTerm> terms;
};

/// D(b_1 (x) ... (x) b_p) = sum_{i<j} H(b_i (x) b_j'), where b_j' is factor j
/// carried to position i+1 by R-moves at (j-1, j), ..., (i+1, i+2).
inline EnergyBreakdown total_D(EnergyCache& cache, const std::vector<KRCrystal>& factors, const TensorElt& x) {
  if (x.size() != factors.size()) throw invalid_input("total_D: element arity mismatch");
  EnergyBreakdown out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      TensorElt cur = x;
      std::vector<KRCrystal> shape = factors;
      for (std::size_t k = j - 1; k > i; --k) {
        const auto& moved = cache.table(shape[k], shape[k + 1]).R({cur[k], cur[k + 1]});
        cur[k] = moved[0];
        cur[k + 1] = moved[1];
        std::swap(shape[k], shape[k + 1]);
      }
      const int h = cache.table(shape[i], shape[i + 1]).H({cur[i], cur[i + 1]});
      out.terms.push_back({i, j, h});
      out.total += h;
    }
  }
  return out;
}

}  // namespace darkc
