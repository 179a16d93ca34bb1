#pragma once

// Kirillov-Reshetikhin crystals B^{r,s} of type A_n^(1), modeled by r x s
// rectangular semistandard tableaux over {1, ..., n+1}. Classical arrows come
// from the signature rule; the 0-arrows are conjugated from the 1-arrows by
// Schuetzenberger promotion.

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "darkc/cartan.hpp"
#include "darkc/error.hpp"

namespace darkc {

struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<int> cells;  // row-major

  Tableau() = default;
  Tableau(int r, int s) : rows(r), cols(s), cells(static_cast<std::size_t>(r) * s, 0) {}
  Tableau(int r, int s, std::vector<int> entries) : rows(r), cols(s), cells(std::move(entries)) {
    if (cells.size() != static_cast<std::size_t>(r) * s) throw invalid_input("tableau entry count mismatch");
  }

  int& at(int i, int j) { return cells[static_cast<std::size_t>(i) * cols + j]; }
  int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }

  bool is_semistandard(int m) const {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const int v = at(i, j);
        if (v < 1 || v > m) return false;
        if (j > 0 && at(i, j - 1) > v) return false;
        if (i > 0 && at(i - 1, j) >= v) return false;
      }
    return true;
  }

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Rows joined by '/'; digits for m <= 9, comma-separated entries otherwise.
/// The empty (s = 0) tableau prints as ".".
inline std::string to_text(const Tableau& t, int m) {
  if (t.cols == 0) return ".";
  std::string out;
  for (int i = 0; i < t.rows; ++i) {
    if (i) out += '/';
    for (int j = 0; j < t.cols; ++j) {
      if (m > 9 && j) out += ',';
      out += std::to_string(t.at(i, j));
    }
  }
  return out;
}

/// Inverse of to_text. For "." the caller supplies the row count.
inline Tableau parse_tableau(const std::string& text, int m, int empty_rows = 0) {
  if (text == ".") return Tableau(empty_rows, 0);
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, '/')) {
    std::vector<int> entries;
    if (m > 9) {
      std::stringstream rs(row);
      std::string tok;
      while (std::getline(rs, tok, ',')) {
        try {
          entries.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw invalid_input("bad tableau entry '" + tok + "'");
        }
      }
    } else {
      for (char ch : row) {
        if (ch < '0' || ch > '9') throw invalid_input("bad tableau entry in '" + text + "'");
        entries.push_back(ch - '0');
      }
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty() || rows.front().empty()) throw invalid_input("empty tableau text '" + text + "'");
  Tableau t(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < t.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != t.cols) throw invalid_input("tableau '" + text + "' is not rectangular");
    for (int j = 0; j < t.cols; ++j) t.at(i, j) = rows[i][j];
  }
  if (!t.is_semistandard(m)) throw invalid_input("tableau '" + text + "' is not semistandard");
  return t;
}

/// All r x s semistandard tableaux over {1..m}, in lexicographic order.
inline std::vector<Tableau> generate(const CartanA& c, int r, int s) {
  if (r < 1 || r > c.rank()) throw invalid_input("KR shape: r must lie in 1..n");
  if (s < 0) throw invalid_input("KR shape: s must be >= 0");
  const int m = c.size();
  std::vector<Tableau> out;
  Tableau t(r, s);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == r * s) {
      out.push_back(t);
      return;
    }
    const int i = pos / s;
    const int j = pos % s;
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.at(i, j - 1));
    if (i > 0) lo = std::max(lo, t.at(i - 1, j) + 1);
    const int hi = m - (r - 1 - i);
    for (int v = lo; v <= hi; ++v) {
      t.at(i, j) = v;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

namespace detail {

// Cell indices in reading order: bottom row first, each row left to right.
inline std::vector<int> reading_positions(const Tableau& t) {
  std::vector<int> pos;
  pos.reserve(t.cells.size());
  for (int i = t.rows - 1; i >= 0; --i)
    for (int j = 0; j < t.cols; ++j) pos.push_back(i * t.cols + j);
  return pos;
}

struct Signature {
  std::vector<int> free_lower;  // unbracketed letters i, reading order
  std::vector<int> free_upper;  // unbracketed letters i+1, reading order
};

// A letter i+1 followed later by a letter i cancel each other.
inline Signature signature(const Tableau& t, int i) {
  Signature sig;
  for (int p : reading_positions(t)) {
    const int v = t.cells[p];
    if (v == i + 1) {
      sig.free_upper.push_back(p);
    } else if (v == i) {
      if (!sig.free_upper.empty())
        sig.free_upper.pop_back();
      else
        sig.free_lower.push_back(p);
    }
  }
  return sig;
}

}  // namespace detail

/// f_i for classical i: the rightmost unbracketed i becomes i+1.
inline std::optional<Tableau> classical_f(const CartanA& c, int i, const Tableau& t) {
  if (i < 1 || i > c.rank()) throw invalid_input("classical_f: node must be in 1..n");
  auto sig = detail::signature(t, i);
  if (sig.free_lower.empty()) return std::nullopt;
  Tableau out = t;
  out.cells[sig.free_lower.back()] = i + 1;
  return out;
}

/// e_i for classical i: the leftmost unbracketed i+1 becomes i.
inline std::optional<Tableau> classical_e(const CartanA& c, int i, const Tableau& t) {
  if (i < 1 || i > c.rank()) throw invalid_input("classical_e: node must be in 1..n");
  auto sig = detail::signature(t, i);
  if (sig.free_upper.empty()) return std::nullopt;
  Tableau out = t;
  out.cells[sig.free_upper.front()] = i;
  return out;
}

/// Remove every n+1, slide the holes to the upper-left by jeu de taquin,
/// add one to every entry and fill the holes with 1.
inline Tableau promotion(const CartanA& c, const Tableau& t) {
  const int m = c.size();
  Tableau out = t;
  // 0 = entry, 1 = hole still to slide, 2 = hole already at its final place.
  std::vector<int> hole(t.cells.size(), 0);
  for (std::size_t p = 0; p < t.cells.size(); ++p)
    if (t.cells[p] == m) hole[p] = 1;
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * t.cols + j; };
  for (;;) {
    int hi = -1, hj = -1;
    for (int i = 0; i < t.rows && hi < 0; ++i)
      for (int j = 0; j < t.cols; ++j)
        if (hole[idx(i, j)] == 1) {
          hi = i;
          hj = j;
          break;
        }
    if (hi < 0) break;
    for (;;) {
      const bool up = hi > 0 && hole[idx(hi - 1, hj)] == 0;
      const bool left = hj > 0 && hole[idx(hi, hj - 1)] == 0;
      if (!up && !left) break;
      bool take_up = up;
      if (up && left) take_up = out.at(hi - 1, hj) >= out.at(hi, hj - 1);
      const int si = take_up ? hi - 1 : hi;
      const int sj = take_up ? hj : hj - 1;
      out.at(hi, hj) = out.at(si, sj);
      hole[idx(hi, hj)] = 0;
      hole[idx(si, sj)] = 1;
      hi = si;
      hj = sj;
    }
    hole[idx(hi, hj)] = 2;
  }
  for (std::size_t p = 0; p < out.cells.size(); ++p) out.cells[p] = hole[p] ? 1 : out.cells[p] + 1;
  return out;
}

/// Two-sided inverse of promotion.
inline Tableau promotion_inverse(const CartanA& c, const Tableau& t) {
  const int m = c.size();
  Tableau out = t;
  std::vector<int> hole(t.cells.size(), 0);
  for (std::size_t p = 0; p < t.cells.size(); ++p)
    if (t.cells[p] == 1) hole[p] = 1;
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * t.cols + j; };
  for (;;) {
    int hi = -1, hj = -1;
    for (int i = t.rows - 1; i >= 0 && hi < 0; --i)
      for (int j = t.cols - 1; j >= 0; --j)
        if (hole[idx(i, j)] == 1) {
          hi = i;
          hj = j;
          break;
        }
    if (hi < 0) break;
    for (;;) {
      const bool down = hi + 1 < t.rows && hole[idx(hi + 1, hj)] == 0;
      const bool right = hj + 1 < t.cols && hole[idx(hi, hj + 1)] == 0;
      if (!down && !right) break;
      bool take_down = down;
      if (down && right) take_down = out.at(hi + 1, hj) <= out.at(hi, hj + 1);
      const int si = take_down ? hi + 1 : hi;
      const int sj = take_down ? hj : hj + 1;
      out.at(hi, hj) = out.at(si, sj);
      hole[idx(hi, hj)] = 0;
      hole[idx(si, sj)] = 1;
      hi = si;
      hj = sj;
    }
    hole[idx(hi, hj)] = 2;
  }
  for (std::size_t p = 0; p < out.cells.size(); ++p) out.cells[p] = hole[p] ? m : out.cells[p] - 1;
  return out;
}

inline Tableau promotion_power(const CartanA& c, long long k, Tableau t) {
  const int steps = c.mod(k);
  for (int a = 0; a < steps; ++a) t = promotion(c, t);
  return t;
}

inline std::optional<Tableau> affine_f0(const CartanA& c, const Tableau& t) {
  auto g = classical_f(c, 1, promotion(c, t));
  if (!g) return std::nullopt;
  return promotion_inverse(c, *g);
}

inline std::optional<Tableau> affine_e0(const CartanA& c, const Tableau& t) {
  auto g = classical_e(c, 1, promotion(c, t));
  if (!g) return std::nullopt;
  return promotion_inverse(c, *g);
}

/// The crystal B^{r,s} with element type Tableau.
class KRCrystal {
 public:
  using value_type = Tableau;

  KRCrystal(CartanA c, int r, int s) : c_(c), r_(r), s_(s) {
    if (r < 1 || r > c.rank()) throw invalid_input("KR shape: r must lie in 1..n");
    if (s < 0) throw invalid_input("KR shape: s must be >= 0");
  }

  const CartanA& cartan() const noexcept { return c_; }
  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }

  std::optional<Tableau> e(int i, const Tableau& t) const {
    c_.check_node(i);
    return i == 0 ? affine_e0(c_, t) : classical_e(c_, i, t);
  }

  std::optional<Tableau> f(int i, const Tableau& t) const {
    c_.check_node(i);
    return i == 0 ? affine_f0(c_, t) : classical_f(c_, i, t);
  }

  int epsilon(int i, const Tableau& t) const {
    c_.check_node(i);
    if (i == 0) return static_cast<int>(detail::signature(promotion(c_, t), 1).free_upper.size());
    return static_cast<int>(detail::signature(t, i).free_upper.size());
  }

  int phi(int i, const Tableau& t) const {
    c_.check_node(i);
    if (i == 0) return static_cast<int>(detail::signature(promotion(c_, t), 1).free_lower.size());
    return static_cast<int>(detail::signature(t, i).free_lower.size());
  }

  /// Content weight: sum over entries k of cl(Lambda_k - Lambda_{k-1}), indices mod m.
  ClWeight weight(const Tableau& t) const {
    ClWeight w = zero_cl_weight(c_);
    for (int v : t.cells) {
      w.lam[c_.mod(v)] += 1;
      w.lam[c_.mod(v - 1)] -= 1;
    }
    return w;
  }

  std::vector<Tableau> elements() const { return generate(c_, r_, s_); }

  /// The classically highest element: row k filled with k.
  Tableau classical_highest() const {
    Tableau t(r_, s_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < s_; ++j) t.at(i, j) = i + 1;
    return t;
  }

  bool contains(const Tableau& t) const {
    return t.rows == r_ && t.cols == s_ && t.is_semistandard(c_.size());
  }

  std::string label() const { return std::to_string(r_) + "x" + std::to_string(s_); }

  friend bool operator==(const KRCrystal&, const KRCrystal&) = default;

 private:
  CartanA c_;
  int r_;
  int s_;
};

/// The unique element with eps_0 = s and eps_i = 0 for all classical i.
inline Tableau find_b_rs(const CartanA& c, int r, int s) {
  KRCrystal b(c, r, s);
  std::vector<Tableau> hits;
  for (const auto& t : b.elements()) {
    if (b.epsilon(0, t) != s) continue;
    bool classical_zero = true;
    for (int i = 1; i <= c.rank() && classical_zero; ++i) classical_zero = b.epsilon(i, t) == 0;
    if (classical_zero) hits.push_back(t);
  }
  if (hits.size() != 1)
    throw model_error("find_b_rs: found " + std::to_string(hits.size()) + " candidates in B^{" +
                      std::to_string(r) + "," + std::to_string(s) + "}");
  return hits.front();
}

/// promotion^k applied factor-wise.
inline std::vector<Tableau> twist(const CartanA& c, long long k, std::vector<Tableau> x) {
  for (auto& t : x) t = promotion_power(c, k, std::move(t));
  return x;
}

}  // namespace darkc
