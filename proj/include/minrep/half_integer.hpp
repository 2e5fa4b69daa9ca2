#pragma once

#include "minrep/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace minrep {

/// An element of (1/2)Z, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_int(int k) { return from_twice(2 * k); }

  static HalfInteger from_rational(const Rational& q) {
    Rational t = 2 * q;
    if (t.get_den() != 1) throw std::invalid_argument("not a half-integer: " + q.get_str());
    if (!t.get_num().fits_sint_p()) throw std::out_of_range("half-integer out of range");
    return from_twice(static_cast<int>(t.get_num().get_si()));
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }
  Rational as_rational() const {
    Rational q(twice_, 2);
    q.canonicalize();
    return q;
  }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger operator+(int k) const { return from_twice(twice_ + 2 * k); }
  constexpr HalfInteger operator-(int k) const { return from_twice(twice_ - 2 * k); }
  constexpr HalfInteger abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_ = 0;
};

}  // namespace minrep
