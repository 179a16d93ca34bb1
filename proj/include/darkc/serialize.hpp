#pragma once

// JSON and DOT encodings for weights, polynomials, tableaux, DARK sets and crystal graphs.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "darkc/cartan.hpp"
#include "darkc/charring.hpp"
#include "darkc/crystal.hpp"
#include "darkc/dark.hpp"
#include "darkc/kr.hpp"

namespace darkc {

using json = nlohmann::json;

inline json to_json(const AffineWeight& mu) { return json{{"lam", mu.lam}, {"delta", to_string(mu.delta)}}; }

inline AffineWeight weight_from_json(const json& j) {
  try {
    return AffineWeight{j.at("lam").get<std::vector<int>>(), parse_rational(j.at("delta").get<std::string>())};
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad weight JSON: ") + e.what());
  }
}

/// Sorted list of {"lam", "delta", "coef"}: lexicographic on lam, then delta.
inline json to_json(const CharPoly& f) {
  json out = json::array();
  for (const auto& [mu, k] : f.terms()) {
    json t = to_json(mu);
    t["coef"] = k;
    out.push_back(std::move(t));
  }
  return out;
}

inline CharPoly charpoly_from_json(const json& j) {
  CharPoly f;
  if (!j.is_array()) throw invalid_input("CharPoly JSON must be an array");
  for (const auto& t : j) {
    try {
      f.add(weight_from_json(t), t.at("coef").get<std::int64_t>());
    } catch (const json::exception& e) {
      throw invalid_input(std::string("bad CharPoly JSON: ") + e.what());
    }
  }
  return f;
}

inline std::string tensor_text(const TensorElt& x, int m) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += " | ";
    out += to_text(x[k], m);
  }
  return out;
}

/// Tableaux separated by '|'; each factor must belong to the matching crystal.
inline TensorElt parse_tensor(const std::string& text, const std::vector<KRCrystal>& factors) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? std::string() : part.substr(b, e - b + 1));
  }
  if (parts.size() != factors.size())
    throw invalid_input("element has " + std::to_string(parts.size()) + " factors, expected " +
                        std::to_string(factors.size()));
  TensorElt x;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& b = factors[k];
    Tableau t = parse_tableau(parts[k], b.cartan().size(), b.r());
    if (!b.contains(t)) throw invalid_input("factor '" + parts[k] + "' is not in B^{" + b.label() + "}");
    x.push_back(std::move(t));
  }
  return x;
}

inline json to_json(const Tableau& t, int m) { return to_text(t, m); }

inline json to_json(const TensorElt& x, int m) {
  json out = json::array();
  for (const auto& t : x) out.push_back(to_text(t, m));
  return out;
}

inline json to_json(const DarkSet& set) {
  const int m = set.factors.front().cartan().size();
  json factors = json::array();
  for (const auto& b : set.factors) factors.push_back(json{{"r", b.r()}, {"s", b.s()}});
  json elts = json::array();
  for (const auto& x : set.elements) elts.push_back(to_json(x, m));
  return json{{"n", m - 1}, {"factors", factors}, {"elements", elts}};
}

inline DarkSet darkset_from_json(const json& j) {
  try {
    const CartanA c(j.at("n").get<int>());
    DarkSet set;
    for (const auto& f : j.at("factors")) set.factors.emplace_back(c, f.at("r").get<int>(), f.at("s").get<int>());
    if (set.factors.empty()) throw invalid_input("DarkSet JSON has no factors");
    for (const auto& e : j.at("elements")) {
      TensorElt x;
      if (e.size() != set.factors.size()) throw invalid_input("DarkSet JSON element has wrong arity");
      for (std::size_t k = 0; k < e.size(); ++k) {
        Tableau t = parse_tableau(e[k].get<std::string>(), c.size(), set.factors[k].r());
        if (!set.factors[k].contains(t)) throw invalid_input("DarkSet JSON element outside its factor");
        x.push_back(std::move(t));
      }
      set.elements.insert(std::move(x));
    }
    return set;
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad DarkSet JSON: ") + e.what());
  }
}

/// {"nodes": [...], "edges": [{"src", "dst", "i"}]} for the f_i-arrows inside the set.
inline json graph_json(const DarkSet& set) {
  KRTensor product(set.factors);
  const int m = product.cartan().size();
  json nodes = json::array();
  for (const auto& x : set.elements) nodes.push_back(tensor_text(x, m));
  json edges = json::array();
  for (const auto& e : induced_edges(product, set.elements))
    edges.push_back(json{{"src", tensor_text(e.src, m)}, {"dst", tensor_text(e.dst, m)}, {"i", e.i}});
  return json{{"nodes", nodes}, {"edges", edges}};
}

inline std::string graph_dot(const DarkSet& set) {
  KRTensor product(set.factors);
  const int m = product.cartan().size();
  std::map<TensorElt, std::size_t> ids;
  std::ostringstream os;
  os << "digraph dark {\n";
  for (const auto& x : set.elements) {
    const auto id = ids.size();
    ids.emplace(x, id);
    os << "  n" << id << " [label=\"" << tensor_text(x, m) << "\"];\n";
  }
  for (const auto& e : induced_edges(product, set.elements))
    os << "  n" << ids.at(e.src) << " -> n" << ids.at(e.dst) << " [label=\"" << e.i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace darkc
