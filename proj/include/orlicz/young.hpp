#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/error.hpp"

namespace orlicz {

enum class YoungKind {
  power,          // c·t^p
  p_q,            // t^p/p + t^q/q
  p_log,          // t^p·ln^r(1 + t^q)
  exp_taylor,     // e^t − Σ_{j<k} t^j/j!
  double_exp,     // e^{e^t} − e
  exp_neg_power,  // e^{−t^{−r}} up to its inflection point, tangent line beyond
  tabulated,      // A = trapezoid integral of tabulated a
  conjugate,      // numeric complementary function of another Young function
  e_function,     // t^{n/(n−s)} ∫_t^∞ Ã(τ) τ^{−1−n/(n−s)} dτ
};

const char* to_string(YoungKind kind) noexcept;

enum class Which { A, a };

/// Values above this are reported as saturated instead of overflowing.
inline constexpr double kSaturation = 1e300;
inline constexpr double kDefaultRtol = 1e-10;
inline constexpr int kMaxBisection = 200;

struct SaturatedValue {
  double value = 0.0;
  bool saturated = false;
};

using ParamList = std::vector<std::pair<std::string, double>>;

namespace detail {
class YoungImpl;
}

/// Immutable handle to a Young function A together with its left derivative a.
/// Copies share the same underlying representation.
class YoungFunction {
 public:
  static YoungFunction power(double p, double c = 1.0);
  static YoungFunction p_q(double p, double q);
  static YoungFunction p_log(double p, double q, double r);
  static YoungFunction exp_taylor(int k);
  static YoungFunction double_exp();
  static YoungFunction exp_neg_power(double r);
  // Knots must start at t = 0 and increase strictly; a must be nondecreasing.
  static YoungFunction tabulated_derivative(std::vector<double> t, std::vector<double> a);
  // A given at the knots; a is recovered by central differences (forward at 0).
  static YoungFunction tabulated_values(const std::vector<double>& t, const std::vector<double>& A);

  static YoungFunction from_impl(std::shared_ptr<const detail::YoungImpl> impl);

  YoungKind kind() const;
  std::string name() const;
  ParamList params() const;
  bool is_catalog() const;

  // Checked evaluation: throws ErrorCode::overflow above kSaturation.
  double A(double t) const;
  double a(double t) const;
  SaturatedValue eval_saturating(double t, Which which) const;

  // Unchecked evaluation for inner loops; may return +inf.
  double A_raw(double t) const;
  double a_raw(double t) const;
  void A_and_a_raw(double t, double& A, double& a) const;
  double log_A(double t) const;
  double log_a(double t) const;

  std::optional<double> closed_form_inverse(double y) const;
  std::optional<YoungFunction> closed_form_conjugate() const;

  // Underlying function for derived kinds (conjugate, e_function).
  const YoungFunction* base() const;

  const detail::YoungImpl& impl() const { return *impl_; }

 private:
  explicit YoungFunction(std::shared_ptr<const detail::YoungImpl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::YoungImpl> impl_;
};

double eval(const YoungFunction& f, double t, Which which = Which::A);

/// t ≥ 0 with A(t) = y. Closed form when registered, else geometric
/// bracketing followed by bisection on log A.
double inverse(const YoungFunction& f, double y, double rtol = kDefaultRtol);

/// Complementary function Ã(t) = sup{τt − A(τ) : τ ≥ 0}.
YoungFunction conjugate(const YoungFunction& f);

/// Maximizing τ in the definition of Ã(t), i.e. sup{τ : a(τ) ≤ t}.
/// Returns +inf when a stays below t (Ã(t) = ∞).
double conjugate_argmax(const YoungFunction& f, double t);

struct DoublingClass {
  bool delta2_zero = false;
  double C0 = 0.0;  // max A(2t)/A(t) sampled on t ≤ 1
  bool delta2_inf = false;
  double Cinf = 0.0;  // max A(2t)/A(t) sampled on t ≥ 1
  bool delta2_global = false;
  double pA_plus = 0.0;   // sup t·a(t)/A(t)
  double pA_minus = 0.0;  // inf t·a(t)/A(t)
  bool analytic = false;  // flags taken from the catalog instead of sampling
};

/// Samples t·a/A on a log grid over [t_lo, t_hi]; catalog kinds then get their
/// known doubling flags and exact p_A bounds.
DoublingClass classify_doubling(const YoungFunction& f, double t_lo = 1e-6, double t_hi = 1e6);
DoublingClass classify_doubling_numeric(const YoungFunction& f, double t_lo = 1e-6, double t_hi = 1e6);

struct InvariantCheck {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Convexity, monotone derivative, A ≤ t·a and the scaling inequalities on a
/// log sample grid.
InvariantCheck check_young_invariants(const YoungFunction& f, double t_lo = 1e-4, double t_hi = 1e4,
                                      double tol = 1e-9);

}  // namespace orlicz
