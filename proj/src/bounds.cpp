#include "orlicz/bounds.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "young_impl.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeAgreement = 0.1;
constexpr double kQuadTol = 1e-12;
const double kLn10 = std::log(10.0);

using Gk = boost::math::quadrature::gauss_kronrod<double, 21>;

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double param(const YoungFunction& f, const char* key) {
  for (const auto& [k, v] : f.params())
    if (k == key) return v;
  return 0.0;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::invalid_argument, std::string(what) + " must be > 0");
}

// Least-squares slope of ys against xs; NaN if any sample is not finite.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(ys[i])) return std::numeric_limits<double>::quiet_NaN();
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

// Slope of y(ln t) over [lo, hi] from 9 samples. `extreme` is substituted when
// the sampled function leaves the representable range (super-power tails).
template <class F>
double window_slope(F&& log_y, double lo, double hi, double extreme) {
  std::vector<double> xs, ys;
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i <= 8; ++i) {
    const double x = a + (b - a) * i / 8.0;
    const double y = log_y(x);
    if (std::isinf(y) || std::isnan(y)) return extreme;
    xs.push_back(x);
    ys.push_back(y);
  }
  return fit_slope(xs, ys);
}

enum class Tail { converges, diverges, inconclusive };

// `margin(σ)` is positive on the convergent side. Slopes are ordered outwards.
template <class Margin>
Tail classify_tail(const std::vector<double>& slopes, Margin margin) {
  std::vector<double> d;
  for (double s : slopes) {
    if (std::isnan(s)) return Tail::inconclusive;
    d.push_back(margin(s));
  }
  const auto [lo, hi] = std::minmax_element(slopes.begin(), slopes.end());
  const bool agree = (*lo == *hi) || (*hi - *lo <= kSlopeAgreement);
  if (agree) return d.back() > 1e-9 ? Tail::converges : Tail::diverges;
  bool all_conv = true, all_div = true, toward_conv = true, toward_div = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    all_conv = all_conv && d[i] > 1e-9;
    all_div = all_div && d[i] <= 1e-9;
    if (i > 0) {
      toward_conv = toward_conv && d[i] >= d[i - 1];
      toward_div = toward_div && d[i] <= d[i - 1];
    }
  }
  if (all_conv && toward_conv) return Tail::converges;
  if (all_div && toward_div) return Tail::diverges;
  return Tail::inconclusive;
}

Verdict to_verdict(Tail t, Tail wanted) {
  if (t == Tail::inconclusive) return Verdict::inconclusive;
  return t == wanted ? Verdict::holds : Verdict::fails;
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
  if (a == Verdict::holds && b == Verdict::holds) return Verdict::holds;
  return Verdict::inconclusive;
}

// ∫_lo^hi e^{h(u)} du with h given in log form, split into decade panels.
template <class LogIntegrand>
double integrate_log(LogIntegrand&& h, double u_lo, double u_hi) {
  if (!(u_hi > u_lo)) return 0.0;
  // Equal panels of at most a decade; a fixed count avoids ulp-wide remainders.
  const int panels = std::max(1, static_cast<int>(std::ceil((u_hi - u_lo) / kLn10 - 1e-9)));
  const double width = (u_hi - u_lo) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = u_lo + i * width;
    const double b = i + 1 == panels ? u_hi : a + width;
    double err = 0.0;
    total += Gk::integrate([&](double u) { return std::exp(h(u)); }, a, b, 15, kQuadTol, &err);
  }
  return total;
}

// ∫_T^∞ Ã(τ)τ^{−1−m} dτ from the local power law of the integrand at T.
double tail_integral(const YoungFunction& conj, double m, double T) {
  const double g1 = std::log(conj.A_raw(T)) - (1.0 + m) * std::log(T);
  const double g0 = std::log(conj.A_raw(T / 10.0)) - (1.0 + m) * std::log(T / 10.0);
  if (g1 == -kInf) return 0.0;
  const double beta = (g0 - g1) / kLn10;
  if (!std::isfinite(g1) || !std::isfinite(beta) || beta <= 1.0 + 1e-6)
    throw Error(ErrorCode::tail_inconclusive, "tail inconclusive: integrand decays like t^-" + fmt(beta) +
                                                  " beyond T=" + fmt(T));
  return std::exp(g1) * T / (beta - 1.0);
}

// ∫_t^∞ Ã(τ)τ^{−1−m} dτ: quadrature up to T* = max(t·1e6, 1e8), power-law tail beyond.
double tail_moment(const YoungFunction& conj, double m, double t) {
  const double T = std::max(t * 1e6, 1e8);
  auto h = [&](double u) {
    const double v = conj.A_raw(std::exp(u));
    if (!std::isfinite(v))
      throw Error(ErrorCode::conjugate_infinite, "conjugate infinite at t=" + fmt(std::exp(u)));
    return std::log(v) - m * u;
  };
  return integrate_log(h, std::log(t), std::log(T)) + tail_integral(conj, m, T);
}

void require_cond1(const YoungFunction& f, Order order) {
  const GrowthConditions gc = check_conditions(f, order);
  if (gc.cond1 != Verdict::holds)
    throw Error(ErrorCode::condition_violated,
                std::string("E undefined: growth condition at infinity ") + to_string(gc.cond1));
}

// E tabulated on a log grid: log I is cubic Hermite in log t with the exact
// slopes −Ã(t)t^{−m}/I(t); a(t) = m t^{m−1} I(t) − Ã(t)/t uses Ã directly.
class EImpl final : public detail::YoungImpl {
 public:
  EImpl(YoungFunction base, Order order) : base_(std::move(base)), conj_(orlicz::conjugate(base_)), order_(order) {
    m_ = order_.m();
    const int count = kDecades * kPerDecade + 1;
    u_.resize(count);
    logI_.resize(count);
    slope_.resize(count);
    for (int k = 0; k < count; ++k) u_[k] = std::log(10.0) * (kLowExp + static_cast<double>(k) / kPerDecade);
    auto h = [&](double u) {
      const double v = conj_.A_raw(std::exp(u));
      if (!std::isfinite(v))
        throw Error(ErrorCode::conjugate_infinite, "conjugate infinite at t=" + fmt(std::exp(u)));
      return std::log(v) - m_ * u;
    };
    const double top = std::exp(u_.back()) * 1e6;
    double I = integrate_log(h, u_.back(), std::log(top)) + tail_integral(conj_, m_, top);
    for (int k = count - 1; k >= 0; --k) {
      if (k < count - 1) I += integrate_log(h, u_[k], u_[k + 1]);
      if (!(I > 0.0) || !std::isfinite(I)) throw Error(ErrorCode::tail_inconclusive, "E integral not finite");
      logI_[k] = std::log(I);
      const double at = conj_.A_raw(std::exp(u_[k]));
      slope_[k] = -at * std::exp(-m_ * u_[k]) / I;
    }
  }

  YoungKind kind() const override { return YoungKind::e_function; }
  std::string name() const override {
    return "E(" + base_.name() + ",n=" + std::to_string(order_.n) + ",s=" + fmt(order_.s) + ")";
  }
  ParamList params() const override { return {{"n", static_cast<double>(order_.n)}, {"s", order_.s}}; }
  double log_A(double t) const override {
    if (!(t > 0.0)) return -kInf;
    return m_ * std::log(t) + log_I(std::log(t));
  }
  double A(double t) const override { return t > 0.0 ? std::exp(log_A(t)) : 0.0; }
  double a(double t) const override {
    if (!(t > 0.0)) return 0.0;
    const double I = std::exp(log_I(std::log(t)));
    return std::max(0.0, m_ * std::pow(t, m_ - 1.0) * I - conj_.A_raw(t) / t);
  }
  const YoungFunction* base() const override { return &base_; }

 private:
  static constexpr int kLowExp = -12;
  static constexpr int kDecades = 24;
  static constexpr int kPerDecade = 8;

  double log_I(double u) const {
    const std::size_t last = u_.size() - 1;
    if (u <= u_[0]) return logI_[0] + slope_[0] * (u - u_[0]);
    if (u >= u_[last]) return logI_[last] + slope_[last] * (u - u_[last]);
    const double step = u_[1] - u_[0];
    std::size_t k = std::min(last - 1, static_cast<std::size_t>((u - u_[0]) / step));
    const double x = (u - u_[k]) / step;
    const double x2 = x * x, x3 = x2 * x;
    return (2 * x3 - 3 * x2 + 1) * logI_[k] + (x3 - 2 * x2 + x) * step * slope_[k] + (-2 * x3 + 3 * x2) * logI_[k + 1] +
           (x3 - x2) * step * slope_[k + 1];
  }

  YoungFunction base_;
  YoungFunction conj_;
  Order order_;
  double m_ = 1.0;
  std::vector<double> u_, logI_, slope_;
};

// Closed-form E for c·t^p: Ã = c′t^{q}, E = c′/(m − q)·t^q.
std::optional<YoungFunction> power_e(const YoungFunction& f, Order order) {
  if (f.kind() != YoungKind::power) return std::nullopt;
  const auto conj = f.closed_form_conjugate();
  if (!conj) return std::nullopt;
  const double q = param(*conj, "p"), c = param(*conj, "c");
  const double m = order.m();
  if (!(q < m)) return std::nullopt;
  return YoungFunction::power(q, c / (m - q));
}

BoundReport make_report(Theorem th, Order order, double length, double norm, double C) {
  BoundReport r;
  r.theorem = th;
  r.calibration_C = C;
  r.inputs.order = order;
  r.inputs.length = length;
  r.inputs.weight_norm = norm;
  return r;
}

void index_condition(const YoungFunction& f, Order order, AlphaRegime regime, BoundReport& r) {
  const double ns = order.n / order.s;
  const bool below = regime == AlphaRegime::below_alpha0;
  const ExtendedReal idx = matuszewska_index(f, below ? IndexKind::zero : IndexKind::infinity);
  if (!(idx.value() > ns)) {
    r.applicable = false;
    r.reasons.push_back(std::string("index condition: ") + (below ? "i0" : "iinf") + "=" + to_string(idx) +
                        " <= n/s=" + fmt(ns));
  }
}

void cond_requirement(Verdict v, const char* name, BoundReport& r) {
  if (v != Verdict::holds) {
    r.applicable = false;
    r.reasons.push_back(std::string("growth condition ") + name + " " + to_string(v));
  }
}

void delta2_requirement(const YoungFunction& f, BoundReport& r) {
  if (!classify_doubling(f).delta2_global) {
    r.applicable = false;
    r.reasons.push_back("doubling condition: A not in Delta2");
  }
}

// value = C·numerator / (norm·M(x)); value 0 with a reason when M(x) is infinite.
void apply_m_formula(const YoungFunction& f, double x, double numerator, BoundReport& r) {
  const ExtendedReal M = matuszewska_sup(f, x);
  if (M.is_infinite()) {
    r.applicable = false;
    r.value = 0.0;
    r.reasons.push_back("M infinite at " + fmt(x));
    return;
  }
  r.value = r.calibration_C * numerator / (r.inputs.weight_norm * M.value());
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::thm1: return "thm1";
    case Theorem::thm2_inverse: return "thm2_inverse";
    case Theorem::thm2_diameter: return "thm2_diameter";
    case Theorem::thm4_inradius: return "thm4_inradius";
  }
  return "?";
}

const char* to_string(AlphaRegime r) noexcept {
  return r == AlphaRegime::below_alpha0 ? "below_alpha0" : "above_alpha0";
}

void Order::validate() const {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::invalid_argument, "s must lie in (0, 1)");
}

GrowthConditions check_conditions(const YoungFunction& f, Order order) {
  order.validate();
  GrowthConditions gc;
  const double gamma = order.gamma();
  // log of (t/A(t))^γ as a function of u = ln t.
  auto log_g = [&](double u) { return gamma * (u - f.log_A(std::exp(u))); };

  const double windows_inf[3][2] = {{1e2, 1e4}, {1e4, 1e6}, {1e6, 1e8}};
  const double windows_zero[3][2] = {{1e-4, 1e-2}, {1e-6, 1e-4}, {1e-8, 1e-6}};
  for (const auto& w : windows_inf) gc.slopes_inf.push_back(window_slope(log_g, w[0], w[1], -kInf));
  for (const auto& w : windows_zero) gc.slopes_zero.push_back(window_slope(log_g, w[0], w[1], -kInf));

  // ∫^∞ t^σ converges iff σ < −1; ∫_0 t^σ converges iff σ > −1.
  const Tail at_inf = classify_tail(gc.slopes_inf, [](double s) { return -1.0 - s; });
  const Tail at_zero = classify_tail(gc.slopes_zero, [](double s) { return s + 1.0; });
  gc.cond1 = to_verdict(at_inf, Tail::converges);
  gc.cond2 = both(to_verdict(at_inf, Tail::diverges), to_verdict(at_zero, Tail::converges));

  auto integrand = [&](double u) { return log_g(u) + u; };
  auto partial = [&](double lo, double hi) {
    const double v = integrate_log(integrand, lo, hi);
    return std::isfinite(v) ? v : kInf;
  };
  for (double T : {1e4, 1e6, 1e8}) gc.partial_sums_inf.push_back(partial(0.0, std::log(T)));
  for (double eps : {1e-4, 1e-6, 1e-8}) gc.partial_sums_zero.push_back(partial(std::log(eps), 0.0));

  // cond3 from the log-log slopes of M(k)/k^{n/s} at ∞ and M(k)/k^{1/s} at 0.
  const double ns = order.n / order.s, is = 1.0 / order.s;
  bool m_infinite = false;
  auto log_r = [&](double u, double power) {
    const ExtendedReal M = matuszewska_sup(f, std::exp(u));
    if (M.is_infinite()) {
      m_infinite = true;
      return kInf;
    }
    return M.value() > 0.0 ? std::log(M.value()) - power * u : -kInf;
  };
  for (const auto& w : windows_inf)
    gc.cond3_slopes_inf.push_back(window_slope([&](double u) { return log_r(u, ns); }, w[0], w[1], kInf));
  for (const auto& w : windows_zero)
    gc.cond3_slopes_zero.push_back(window_slope([&](double u) { return log_r(u, is); }, w[0], w[1], kInf));

  Verdict k_inf, k_zero;
  if (m_infinite) {
    k_inf = Verdict::fails;
  } else {
    // M(k)/k^{n/s} → 0 iff the slope is negative.
    k_inf = to_verdict(classify_tail(gc.cond3_slopes_inf, [](double s) { return -s - 1e-6; }), Tail::converges);
  }
  // M(k)/k^{1/s} → 0 as k → 0 iff the slope is positive; M = 0 there counts as +∞ slope.
  k_zero = to_verdict(classify_tail(gc.cond3_slopes_zero, [](double s) { return s - 1e-6; }), Tail::converges);
  gc.cond3 = both(k_inf, k_zero);
  return gc;
}

YoungFunction e_function(const YoungFunction& f, Order order, Method method) {
  order.validate();
  require_cond1(f, order);
  if (method == Method::automatic)
    if (auto closed = power_e(f, order)) return *closed;
  return YoungFunction::from_impl(std::make_shared<EImpl>(f, order));
}

double E_function(const YoungFunction& f, Order order, double t, Method method) {
  order.validate();
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::invalid_argument, "E: t must be finite and >= 0");
  require_cond1(f, order);
  if (t == 0.0) return 0.0;
  if (method == Method::automatic)
    if (auto closed = power_e(f, order)) return closed->A_raw(t);
  const double m = order.m();
  return std::pow(t, m) * tail_moment(conjugate(f), m, t);
}

double psi_s(const YoungFunction& f, Order order, double r, Method method) {
  require_positive(r, "r");
  const YoungFunction E = e_function(f, order, method);
  return 1.0 / (std::pow(r, order.n - order.s) * inverse(E, std::pow(r, -order.n)));
}

double psi_s_dual(const YoungFunction& f, Order order, double r, Method method) {
  require_positive(r, "r");
  const YoungFunction B = conjugate(e_function(f, order, method));
  return std::pow(r, order.s) * inverse(B, std::pow(r, -order.n));
}

BoundReport bound_thm1(const YoungFunction& f, Order order, double r_omega, double omega_l1, AlphaRegime regime,
                       double C) {
  order.validate();
  require_positive(r_omega, "r_Omega");
  require_positive(omega_l1, "omega_L1");
  require_positive(C, "C");
  BoundReport r = make_report(Theorem::thm1, order, r_omega, omega_l1, C);
  r.inputs.regime = regime;
  r.applicable = true;
  cond_requirement(check_conditions(f, order).cond1, "cond1", r);
  index_condition(f, order, regime, r);
  apply_m_formula(f, std::pow(r_omega, order.s), std::pow(r_omega, order.n), r);
  return r;
}

BoundReport bound_thm2_inverse(const YoungFunction& f, Order order, double r_omega, double omega_l1, double alpha,
                               AlphaRegime regime, double C) {
  order.validate();
  require_positive(r_omega, "r_Omega");
  require_positive(omega_l1, "omega_L1");
  require_positive(alpha, "alpha");
  require_positive(C, "C");
  BoundReport r = make_report(Theorem::thm2_inverse, order, r_omega, omega_l1, C);
  r.inputs.alpha = alpha;
  r.inputs.regime = regime;
  r.applicable = true;
  cond_requirement(check_conditions(f, order).cond1, "cond1", r);
  index_condition(f, order, regime, r);
  try {
    const double arg = inverse(f, alpha / omega_l1) / (C * std::pow(r_omega, order.s));
    const SaturatedValue A = f.eval_saturating(arg, Which::A);
    if (A.saturated) {
      r.applicable = false;
      r.reasons.push_back("A saturated at " + fmt(arg));
    } else {
      r.value = std::pow(r_omega, order.n) / alpha * A.value;
    }
  } catch (const Error& e) {
    r.applicable = false;
    r.value = 0.0;
    r.reasons.push_back(e.what());
  }
  return r;
}

BoundReport bound_diameter(const YoungFunction& f, Order order, double d_omega, double omega_linf, double C) {
  order.validate();
  require_positive(d_omega, "d_Omega");
  require_positive(omega_linf, "omega_Linf");
  require_positive(C, "C");
  BoundReport r = make_report(Theorem::thm2_diameter, order, d_omega, omega_linf, C);
  r.applicable = true;
  cond_requirement(check_conditions(f, order).cond2, "cond2", r);
  const ExtendedReal i = matuszewska_index(f, IndexKind::global);
  const double ns = order.n / order.s;
  if (!(i.value() < ns)) {
    r.applicable = false;
    r.reasons.push_back("index condition: i=" + to_string(i) + " >= n/s=" + fmt(ns));
  }
  delta2_requirement(f, r);
  apply_m_formula(f, std::pow(d_omega, order.s), 1.0, r);
  return r;
}

BoundReport bound_inradius_delta2(const YoungFunction& f, Order order, double r_omega, double omega_linf, double C) {
  order.validate();
  require_positive(r_omega, "r_Omega");
  require_positive(omega_linf, "omega_Linf");
  require_positive(C, "C");
  BoundReport r = make_report(Theorem::thm4_inradius, order, r_omega, omega_linf, C);
  r.applicable = true;
  delta2_requirement(f, r);
  cond_requirement(check_conditions(f, order).cond3, "cond3", r);
  apply_m_formula(f, std::pow(r_omega, order.s), 1.0, r);
  return r;
}

double calibrate_linear(const BoundReport& unit_report, double reference) {
  if (unit_report.theorem == Theorem::thm2_inverse)
    throw Error(ErrorCode::invalid_argument, "calibrate_linear: thm2_inverse is not linear in C");
  if (!(unit_report.value > 0.0)) throw Error(ErrorCode::degenerate, "calibrate_linear: reference bound is 0");
  require_positive(reference, "reference");
  return reference * unit_report.calibration_C / unit_report.value;
}

Interval eigenvalue_interval(double lambda, ExtendedReal pA) {
  require_positive(lambda, "lambda");
  if (pA.is_infinite()) throw Error(ErrorCode::condition_violated, "interval unbounded: A not in Delta2");
  if (!(pA.value() >= 1.0)) throw Error(ErrorCode::invalid_argument, "pA must be >= 1");
  return {lambda / pA.value(), lambda * pA.value()};
}

BoundReport rescale_for_eigenvalue(BoundReport report, ExtendedReal pA) {
  if (pA.is_infinite()) throw Error(ErrorCode::condition_violated, "interval unbounded: A not in Delta2");
  if (!(pA.value() >= 1.0)) throw Error(ErrorCode::invalid_argument, "pA must be >= 1");
  report.value /= pA.value();
  return report;
}

}  // namespace orlicz
