#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/extended.hpp"
#include "orlicz/matuszewska.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class Verdict { holds, fails, inconclusive };
const char* to_string(Verdict v) noexcept;

/// Dimension n ≥ 1 and fractional order s ∈ (0, 1).
struct Order {
  int n = 1;
  double s = 0.5;

  // s/(n−s) and n/(n−s).
  double gamma() const { return s / (n - s); }
  double m() const { return n / (n - s); }
  void validate() const;
};

struct GrowthConditions {
  // ∫^∞ (t/A(t))^{s/(n−s)} dt < ∞
  Verdict cond1 = Verdict::inconclusive;
  // divergent at ∞ and convergent at 0
  Verdict cond2 = Verdict::inconclusive;
  // sup_t A(kt)/(k^{n/s}A(t)) → 0 as k → ∞ and sup_t A(kt)/(k^{1/s}A(t)) → 0 as k → 0
  Verdict cond3 = Verdict::inconclusive;

  // Log-log slopes of the integrand over three windows moving outwards.
  std::vector<double> slopes_inf;
  std::vector<double> slopes_zero;
  // Log-log slopes of M(k)/k^{n/s} (k → ∞) and M(k)/k^{1/s} (k → 0).
  std::vector<double> cond3_slopes_inf;
  std::vector<double> cond3_slopes_zero;
  // ∫_1^T for T = 1e4, 1e6, 1e8 and ∫_ε^1 for ε = 1e-4, 1e-6, 1e-8.
  std::vector<double> partial_sums_inf;
  std::vector<double> partial_sums_zero;
};

GrowthConditions check_conditions(const YoungFunction& f, Order order);

/// The Young function E(t) = t^{n/(n−s)} ∫_t^∞ Ã(τ) τ^{−1−n/(n−s)} dτ.
/// Throws condition_violated unless cond1 holds. The automatic method returns
/// the closed form for power kinds.
YoungFunction e_function(const YoungFunction& f, Order order, Method method = Method::automatic);
double E_function(const YoungFunction& f, Order order, double t, Method method = Method::automatic);

/// Ψ_s(r) = 1/(r^{n−s} E⁻¹(r^{−n})).
double psi_s(const YoungFunction& f, Order order, double r, Method method = Method::automatic);
/// r^s B⁻¹(r^{−n}) with B = Ẽ; comparable to Ψ_s up to constants.
double psi_s_dual(const YoungFunction& f, Order order, double r, Method method = Method::automatic);

enum class Theorem { thm1, thm2_inverse, thm2_diameter, thm4_inradius };
const char* to_string(Theorem t) noexcept;

enum class AlphaRegime { below_alpha0, above_alpha0 };
const char* to_string(AlphaRegime r) noexcept;

struct BoundInputs {
  Order order;
  double length = 0.0;       // r_Ω or d_Ω
  double weight_norm = 0.0;  // ‖ω‖_{L¹} or ‖ω‖_{L∞}
  std::optional<double> alpha;
  std::optional<AlphaRegime> regime;
};

struct BoundReport {
  Theorem theorem = Theorem::thm1;
  // Formula value whenever M (or A) is finite; applicability is reported
  // separately. 0 only when the formula itself is not evaluable.
  double value = 0.0;
  double calibration_C = 1.0;
  bool applicable = false;
  std::vector<std::string> reasons;
  BoundInputs inputs;
};

BoundReport bound_thm1(const YoungFunction& f, Order order, double r_omega, double omega_l1, AlphaRegime regime,
                       double C = 1.0);
BoundReport bound_thm2_inverse(const YoungFunction& f, Order order, double r_omega, double omega_l1, double alpha,
                               AlphaRegime regime, double C = 1.0);
BoundReport bound_diameter(const YoungFunction& f, Order order, double d_omega, double omega_linf, double C = 1.0);
BoundReport bound_inradius_delta2(const YoungFunction& f, Order order, double r_omega, double omega_linf,
                                  double C = 1.0);

/// Constant making a report computed with C = 1 equal `reference` (all
/// theorems except thm2_inverse are linear in C).
double calibrate_linear(const BoundReport& unit_report, double reference);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x, double rel_slack = 0.0) const {
    return x >= lo * (1.0 - rel_slack) && x <= hi * (1.0 + rel_slack);
  }
};

/// Range [λ/p_A, p_A·λ] admissible for the eigenvalue given the critical value.
Interval eigenvalue_interval(double lambda, ExtendedReal pA);

/// Same bound for the eigenvalue: value/p_A. Throws if p_A is infinite.
BoundReport rescale_for_eigenvalue(BoundReport report, ExtendedReal pA);

}  // namespace orlicz
