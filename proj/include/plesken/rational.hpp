#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "plesken/error.hpp"

namespace plesken {

// Exact arithmetic throughout: arbitrary-precision integers and canonical
// rationals (reduced, positive denominator). cpp_rational maintains both
// invariants on every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Renders `p` when the denominator is 1, `p/q` otherwise.
inline std::string format_rational(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/// Parses `p` or `p/q` with an optional sign on p and q > 0.
inline Rat parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw parse_error("invalid rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  const auto parse_int = [&](std::string_view s, bool allow_sign) -> Int {
    if (s.empty()) fail();
    std::size_t pos = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) pos = 1;
    if (pos == s.size()) fail();
    for (std::size_t i = pos; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    }
    return Int(std::string(s));
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, true));

  const Int p = parse_int(text.substr(0, slash), true);
  const Int q = parse_int(text.substr(slash + 1), false);
  if (q == 0) fail();
  return Rat(p, q);
}

} // namespace plesken
