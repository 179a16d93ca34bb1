#pragma once

// Generic crystal algorithms, and tensor products under the rule
//   e_i(b1 (x) b2) = e_i b1 (x) b2  if phi_i(b1) >= eps_i(b2), else b1 (x) e_i b2
//   f_i(b1 (x) b2) = f_i b1 (x) b2  if phi_i(b1) >  eps_i(b2), else b1 (x) f_i b2.

#include <concepts>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "darkc/cartan.hpp"
#include "darkc/weyl.hpp"

namespace darkc {

template <class C>
concept Crystal = requires(const C& c, const typename C::value_type& b, int i) {
  { c.cartan() } -> std::convertible_to<const CartanA&>;
  { c.e(i, b) } -> std::same_as<std::optional<typename C::value_type>>;
  { c.f(i, b) } -> std::same_as<std::optional<typename C::value_type>>;
  { c.epsilon(i, b) } -> std::convertible_to<int>;
  { c.phi(i, b) } -> std::convertible_to<int>;
  { c.weight(b) } -> std::same_as<ClWeight>;
};

template <Crystal Factor>
class TensorProduct {
 public:
  using factor_value = typename Factor::value_type;
  using value_type = std::vector<factor_value>;

  explicit TensorProduct(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw invalid_input("tensor product needs at least one factor");
    for (const auto& f : factors_)
      if (!(f.cartan() == factors_.front().cartan())) throw invalid_input("tensor factors disagree on rank");
  }

  const CartanA& cartan() const noexcept { return factors_.front().cartan(); }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t arity() const noexcept { return factors_.size(); }

  int epsilon(int i, const value_type& x) const { return fold(i, x, x.size()).first; }
  int phi(int i, const value_type& x) const { return fold(i, x, x.size()).second; }

  /// Index of the factor e_i acts on, or nullopt when e_i x = 0.
  std::optional<std::size_t> e_position(int i, const value_type& x) const {
    check(x);
    std::size_t k = x.size();
    while (k > 1) {
      const int phi_left = fold(i, x, k - 1).second;
      if (phi_left >= factors_[k - 1].epsilon(i, x[k - 1]))
        --k;
      else
        break;
    }
    if (factors_[k - 1].epsilon(i, x[k - 1]) == 0) return std::nullopt;
    return k - 1;
  }

  std::optional<std::size_t> f_position(int i, const value_type& x) const {
    check(x);
    std::size_t k = x.size();
    while (k > 1) {
      const int phi_left = fold(i, x, k - 1).second;
      if (phi_left > factors_[k - 1].epsilon(i, x[k - 1]))
        --k;
      else
        break;
    }
    if (factors_[k - 1].phi(i, x[k - 1]) == 0) return std::nullopt;
    return k - 1;
  }

  std::optional<value_type> e(int i, const value_type& x) const {
    auto pos = e_position(i, x);
    if (!pos) return std::nullopt;
    auto moved = factors_[*pos].e(i, x[*pos]);
    if (!moved) return std::nullopt;
    value_type out = x;
    out[*pos] = std::move(*moved);
    return out;
  }

  std::optional<value_type> f(int i, const value_type& x) const {
    auto pos = f_position(i, x);
    if (!pos) return std::nullopt;
    auto moved = factors_[*pos].f(i, x[*pos]);
    if (!moved) return std::nullopt;
    value_type out = x;
    out[*pos] = std::move(*moved);
    return out;
  }

  ClWeight weight(const value_type& x) const {
    check(x);
    ClWeight w = zero_cl_weight(cartan());
    for (std::size_t k = 0; k < x.size(); ++k) w += factors_[k].weight(x[k]);
    return w;
  }

  /// Cartesian product of the factor element lists, lexicographic.
  std::vector<value_type> elements() const {
    std::vector<std::vector<factor_value>> lists;
    for (const auto& f : factors_) lists.push_back(f.elements());
    std::vector<value_type> out;
    value_type cur(factors_.size());
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == lists.size()) {
        out.push_back(cur);
        return;
      }
      for (const auto& b : lists[k]) {
        cur[k] = b;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

 private:
  void check(const value_type& x) const {
    if (x.size() != factors_.size()) throw invalid_input("tensor element has wrong number of factors");
  }

  // (eps, phi) of the left-bracketed prefix b_1 (x) ... (x) b_k.
  std::pair<int, int> fold(int i, const value_type& x, std::size_t k) const {
    check(x);
    int eps = factors_[0].epsilon(i, x[0]);
    int ph = factors_[0].phi(i, x[0]);
    for (std::size_t j = 1; j < k; ++j) {
      const int e2 = factors_[j].epsilon(i, x[j]);
      const int p2 = factors_[j].phi(i, x[j]);
      const int new_eps = eps + std::max(0, e2 - ph);
      const int new_phi = p2 + std::max(0, ph - e2);
      eps = new_eps;
      ph = new_phi;
    }
    return {eps, ph};
  }

  std::vector<Factor> factors_;
};

/// (eps_i, phi_i) by iterating e_i and f_i to exhaustion.
template <Crystal C>
std::pair<int, int> iterated_stats(const C& c, int i, const typename C::value_type& b) {
  int eps = 0;
  for (auto cur = c.e(i, b); cur; cur = c.e(i, *cur)) ++eps;
  int ph = 0;
  for (auto cur = c.f(i, b); cur; cur = c.f(i, *cur)) ++ph;
  return {eps, ph};
}

/// Weight assembled from phi_i - eps_i over all nodes.
template <Crystal C>
ClWeight weight_from_stats(const C& c, const typename C::value_type& b) {
  ClWeight w = zero_cl_weight(c.cartan());
  for (int i = 0; i < c.cartan().size(); ++i) {
    auto [eps, ph] = iterated_stats(c, i, b);
    w.lam[i] = ph - eps;
  }
  return w;
}

/// F_i S: all f_i^k b with b in S, k >= 0.
template <Crystal C>
std::set<typename C::value_type> f_closure(const C& c, int i, const std::set<typename C::value_type>& s) {
  c.cartan().check_node(i);
  std::set<typename C::value_type> out;
  for (const auto& b : s) {
    if (!out.insert(b).second) continue;
    for (auto cur = c.f(i, b); cur; cur = c.f(i, *cur))
      if (!out.insert(*cur).second) break;
  }
  return out;
}

/// F_{i_1} ... F_{i_l} S, innermost (rightmost letter) first.
template <Crystal C>
std::set<typename C::value_type> demazure_closure(const C& c, const ReducedWord& word,
                                                  std::set<typename C::value_type> s) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = f_closure(c, *it, s);
  return s;
}

template <class T>
struct HighestPath {
  T highest;
  std::vector<int> word;  // classical nodes in the order the e_i were applied
};

/// Raise with classical e_i (smallest applicable i first) until none applies.
template <Crystal C>
HighestPath<typename C::value_type> classical_highest_path(const C& c, typename C::value_type x) {
  HighestPath<typename C::value_type> out{std::move(x), {}};
  for (;;) {
    bool moved = false;
    for (int i = 1; i <= c.cartan().rank(); ++i) {
      if (auto up = c.e(i, out.highest)) {
        out.highest = std::move(*up);
        out.word.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) return out;
  }
}

/// Undo a HighestPath: apply f along the reversed word.
template <Crystal C>
typename C::value_type lower_along(const C& c, typename C::value_type x, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto down = c.f(*it, x);
    if (!down) throw model_error("lower_along: f returned zero on a recorded path");
    x = std::move(*down);
  }
  return x;
}

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the crystal axioms on every given element and every node:
/// e_i/f_i shift the weight by -/+ alpha_i, eps/phi are finite and agree with
/// iteration, <alpha_i^vee, wt> = phi - eps, and e_i, f_i are mutually inverse.
template <Crystal C>
AxiomReport check_axioms(const C& c, const std::vector<typename C::value_type>& elts) {
  AxiomReport rep;
  const CartanA& cart = c.cartan();
  const int bound = 1 << 20;
  auto fail = [&](const std::string& what, int i) {
    if (rep.failures.size() < 20) rep.failures.push_back(what + " at node " + std::to_string(i));
  };
  for (const auto& b : elts) {
    const ClWeight wt = c.weight(b);
    for (int i = 0; i < cart.size(); ++i) {
      ++rep.checked;
      const ClWeight ai = cl_simple_root(cart, i);
      int eps = 0;
      for (auto cur = c.e(i, b); cur && eps <= bound; cur = c.e(i, *cur)) ++eps;
      int ph = 0;
      for (auto cur = c.f(i, b); cur && ph <= bound; cur = c.f(i, *cur)) ++ph;
      if (eps > bound || ph > bound) fail("infinite string", i);
      if (eps != c.epsilon(i, b)) fail("epsilon disagrees with iteration", i);
      if (ph != c.phi(i, b)) fail("phi disagrees with iteration", i);
      if (wt.lam[i] != ph - eps) fail("<alpha^vee, wt> != phi - eps", i);
      if (auto up = c.e(i, b)) {
        if (!(c.weight(*up) == wt + ai)) fail("wt(e b) != wt(b) + alpha", i);
        auto back = c.f(i, *up);
        if (!back || !(*back == b)) fail("f(e b) != b", i);
      }
      if (auto down = c.f(i, b)) {
        if (!(c.weight(*down) == wt - ai)) fail("wt(f b) != wt(b) - alpha", i);
        auto back = c.e(i, *down);
        if (!back || !(*back == b)) fail("e(f b) != b", i);
      }
    }
  }
  return rep;
}

/// Connected component of `start` under e_i, f_i for the given nodes.
template <Crystal C>
std::set<typename C::value_type> component(const C& c, const typename C::value_type& start,
                                           const std::vector<int>& nodes) {
  std::set<typename C::value_type> seen{start};
  std::deque<typename C::value_type> work{start};
  while (!work.empty()) {
    auto b = std::move(work.front());
    work.pop_front();
    for (int i : nodes) {
      for (auto next : {c.e(i, b), c.f(i, b)})
        if (next && seen.insert(*next).second) work.push_back(*next);
    }
  }
  return seen;
}

inline std::vector<int> all_nodes(const CartanA& c) {
  std::vector<int> v(c.size());
  for (int i = 0; i < c.size(); ++i) v[i] = i;
  return v;
}

inline std::vector<int> classical_nodes(const CartanA& c) {
  std::vector<int> v;
  for (int i = 1; i <= c.rank(); ++i) v.push_back(i);
  return v;
}

template <class T>
struct Edge {
  T src;
  T dst;
  int i;
};

/// f_i-arrows with both ends inside the subset, ordered by (src, i).
template <Crystal C>
std::vector<Edge<typename C::value_type>> induced_edges(const C& c, const std::set<typename C::value_type>& subset) {
  std::vector<Edge<typename C::value_type>> out;
  for (const auto& b : subset)
    for (int i = 0; i < c.cartan().size(); ++i)
      if (auto d = c.f(i, b); d && subset.count(*d)) out.push_back({b, *d, i});
  return out;
}

/// How a subset meets one i-string of the ambient crystal.
enum class StringPattern { full, highest_only, top_segment, other };

/// For every i-string meeting the subset: which pattern it shows. Diagnostic only.
template <Crystal C>
std::map<StringPattern, std::size_t> string_patterns(const C& c, int i, const std::set<typename C::value_type>& subset) {
  std::map<StringPattern, std::size_t> counts;
  std::set<typename C::value_type> done;
  for (const auto& b : subset) {
    auto top = b;
    while (auto up = c.e(i, top)) top = *up;
    if (!done.insert(top).second) continue;
    std::vector<bool> in;
    for (std::optional<typename C::value_type> cur = top; cur; cur = c.f(i, *cur))
      in.push_back(subset.count(*cur) > 0);
    std::size_t prefix = 0;
    while (prefix < in.size() && in[prefix]) ++prefix;
    bool rest_empty = true;
    for (std::size_t k = prefix; k < in.size(); ++k) rest_empty = rest_empty && !in[k];
    StringPattern p = StringPattern::other;
    if (prefix == in.size())
      p = StringPattern::full;
    else if (rest_empty && prefix == 1)
      p = StringPattern::highest_only;
    else if (rest_empty && prefix > 1)
      p = StringPattern::top_segment;
    ++counts[p];
  }
  return counts;
}

inline const char* to_string(StringPattern p) {
  switch (p) {
    case StringPattern::full: return "full";
    case StringPattern::highest_only: return "highest_only";
    case StringPattern::top_segment: return "top_segment";
    case StringPattern::other: return "other";
  }
  return "other";
}

}  // namespace darkc
