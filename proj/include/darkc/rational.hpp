#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "darkc/error.hpp"

namespace darkc {

using Rational = boost::rational<std::int64_t>;

/// Reduced fraction text: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      auto p = std::stoll(text, &used);
      if (used != text.size()) throw invalid_input("bad rational: " + text);
      return Rational(p);
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    auto p = std::stoll(num, &used);
    if (used != num.size()) throw invalid_input("bad rational: " + text);
    auto q = std::stoll(den, &used);
    if (used != den.size() || q == 0) throw invalid_input("bad rational: " + text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw invalid_input("bad rational: " + text);
  }
}

}  // namespace darkc
