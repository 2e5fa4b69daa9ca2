#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace minrep {

/// Arbitrary-precision rational; all structure-constant work is done in this type.
using Rational = mpq_class;

/// Canonical "p/q" text ("3", "-1/2"); the denominator is omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "p", "p/q" and optional leading sign; throws std::invalid_argument otherwise.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace minrep
