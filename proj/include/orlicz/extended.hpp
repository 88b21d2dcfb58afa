#pragma once

#include <limits>
#include <string>

namespace orlicz {

/// A nonnegative real that may also be +infinity. Infinity is explicit so it
/// never leaks out of arithmetic by accident.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // +inf when infinite; convenient for comparisons.
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

// "inf" or the shortest round-trip decimal.
std::string to_string(const ExtendedReal& x);

}  // namespace orlicz
