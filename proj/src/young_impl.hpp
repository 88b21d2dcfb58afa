#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "orlicz/young.hpp"

namespace orlicz::detail {

/// Per-kind evaluation behind YoungFunction. All methods are raw: they may
/// return +inf and never throw for t ≥ 0.
class YoungImpl {
 public:
  virtual ~YoungImpl() = default;

  virtual YoungKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual ParamList params() const = 0;

  virtual double A(double t) const = 0;
  virtual double a(double t) const = 0;
  virtual void A_and_a(double t, double& A_out, double& a_out) const {
    A_out = A(t);
    a_out = a(t);
  }
  virtual double log_A(double t) const { return std::log(A(t)); }
  virtual double log_a(double t) const { return std::log(a(t)); }

  virtual std::optional<double> inverse(double /*y*/) const { return std::nullopt; }
  virtual std::optional<YoungFunction> conjugate() const { return std::nullopt; }
  virtual const YoungFunction* base() const { return nullptr; }
};

// log(e^x + e^y) without overflow.
inline double log_add_exp(double x, double y) {
  if (x < y) std::swap(x, y);
  if (y == -INFINITY) return x;
  return x + std::log1p(std::exp(y - x));
}

// log(1 + e^x).
inline double log1p_exp(double x) {
  if (x > 36.0) return x + std::exp(-x);
  return std::log1p(std::exp(x));
}

}  // namespace orlicz::detail
