#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "young_impl.hpp"

namespace orlicz {

namespace {

using detail::log1p_exp;
using detail::log_add_exp;
using detail::YoungImpl;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_params(const std::string& kind, const ParamList& params) {
  std::ostringstream os;
  os << kind << '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ',';
    os << params[i].first << '=' << params[i].second;
  }
  os << ')';
  return os.str();
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::invalid_argument, message);
}

class PowerImpl final : public YoungImpl {
 public:
  PowerImpl(double p, double c) : p_(p), c_(c) {
    require(std::isfinite(p) && p >= 1.0, "power: p must be >= 1");
    require(std::isfinite(c) && c > 0.0, "power: c must be > 0");
  }
  YoungKind kind() const override { return YoungKind::power; }
  std::string name() const override { return format_params("power", params()); }
  ParamList params() const override { return {{"p", p_}, {"c", c_}}; }
  double A(double t) const override { return c_ * std::pow(t, p_); }
  double a(double t) const override { return c_ * p_ * std::pow(t, p_ - 1.0); }
  void A_and_a(double t, double& A_out, double& a_out) const override {
    const double tp1 = std::pow(t, p_ - 1.0);
    a_out = c_ * p_ * tp1;
    A_out = c_ * tp1 * t;
  }
  double log_A(double t) const override { return std::log(c_) + p_ * std::log(t); }
  double log_a(double t) const override { return std::log(c_ * p_) + (p_ - 1.0) * std::log(t); }
  std::optional<double> inverse(double y) const override { return std::pow(y / c_, 1.0 / p_); }
  std::optional<YoungFunction> conjugate() const override {
    if (p_ <= 1.0) return std::nullopt;
    const double q = p_ / (p_ - 1.0);
    const double c = (p_ - 1.0) * c_ * std::pow(c_ * p_, -q);
    return YoungFunction::power(q, c);
  }

 private:
  double p_, c_;
};

class PQImpl final : public YoungImpl {
 public:
  PQImpl(double p, double q) : p_(p), q_(q) {
    require(std::isfinite(p) && std::isfinite(q) && 1.0 < p && p < q, "p_q: need 1 < p < q");
  }
  YoungKind kind() const override { return YoungKind::p_q; }
  std::string name() const override { return format_params("p_q", params()); }
  ParamList params() const override { return {{"p", p_}, {"q", q_}}; }
  double A(double t) const override { return std::pow(t, p_) / p_ + std::pow(t, q_) / q_; }
  double a(double t) const override { return std::pow(t, p_ - 1.0) + std::pow(t, q_ - 1.0); }
  void A_and_a(double t, double& A_out, double& a_out) const override {
    const double tp = std::pow(t, p_ - 1.0);
    const double tq = std::pow(t, q_ - 1.0);
    a_out = tp + tq;
    A_out = t * (tp / p_ + tq / q_);
  }
  double log_A(double t) const override {
    const double lt = std::log(t);
    return log_add_exp(p_ * lt - std::log(p_), q_ * lt - std::log(q_));
  }
  double log_a(double t) const override {
    const double lt = std::log(t);
    return log_add_exp((p_ - 1.0) * lt, (q_ - 1.0) * lt);
  }

 private:
  double p_, q_;
};

class PLogImpl final : public YoungImpl {
 public:
  PLogImpl(double p, double q, double r) : p_(p), q_(q), r_(r) {
    require(std::isfinite(p) && p >= 1.0, "p_log: p must be >= 1");
    require(std::isfinite(q) && q > 0.0, "p_log: q must be > 0");
    require(std::isfinite(r) && r >= 0.0, "p_log: r must be >= 0");
    require(p > 1.0 || r > 0.0, "p_log: p = 1 with r = 0 is linear");
  }
  YoungKind kind() const override { return YoungKind::p_log; }
  std::string name() const override { return format_params("p_log", params()); }
  ParamList params() const override { return {{"p", p_}, {"q", q_}, {"r", r_}}; }

  double A(double t) const override {
    if (t == 0.0) return 0.0;
    return std::exp(log_A(t));
  }
  double a(double t) const override {
    if (t == 0.0) return 0.0;
    return std::exp(log_a(t));
  }
  double log_A(double t) const override { return p_ * std::log(t) + r_ * log_L(t); }
  double log_a(double t) const override {
    const double lt = std::log(t);
    const double lL = log_L(t);
    const double L = std::exp(lL);
    // t^q/(1+t^q)
    const double frac = 1.0 / (1.0 + std::exp(-q_ * lt));
    return (p_ - 1.0) * lt + (r_ - 1.0) * lL + std::log(p_ * L + r_ * q_ * frac);
  }

 private:
  // log(ln(1 + t^q)), stable at both ends.
  double log_L(double t) const {
    const double x = q_ * std::log(t);
    if (x < -30.0) return x - 0.5 * std::exp(x);
    return std::log(log1p_exp(x));
  }
  double p_, q_, r_;
};

// log Σ_{j≥k} t^j/j!
double log_exp_tail(double t, int k) {
  if (t == 0.0) return k == 0 ? 0.0 : -kInf;
  if (k == 0) return t;
  if (t <= 40.0) {
    // Σ_{i≥0} t^i k!/(k+i)!
    double sum = 1.0;
    double term = 1.0;
    for (int i = 1; i < 400; ++i) {
      term *= t / (k + i);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return k * std::log(t) - std::lgamma(k + 1.0) + std::log(sum);
  }
  // e^t (1 − e^{−t} Σ_{j<k} t^j/j!)
  const double lt = std::log(t);
  double log_poly = -kInf;
  for (int j = 0; j < k; ++j) log_poly = log_add_exp(log_poly, j * lt - std::lgamma(j + 1.0));
  return t + std::log1p(-std::exp(log_poly - t));
}

double exp_tail(double t, int k) {
  if (k == 0) return std::exp(t);
  if (t == 0.0) return 0.0;
  if (t <= 40.0) {
    double sum = 1.0;
    double term = 1.0;
    for (int i = 1; i < 400; ++i) {
      term *= t / (k + i);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return std::exp(k * std::log(t) - std::lgamma(k + 1.0)) * sum;
  }
  return std::exp(log_exp_tail(t, k));
}

class ExpTaylorImpl final : public YoungImpl {
 public:
  explicit ExpTaylorImpl(int k) : k_(k) { require(k >= 1 && k <= 60, "exp_taylor: k must be in [1, 60]"); }
  YoungKind kind() const override { return YoungKind::exp_taylor; }
  std::string name() const override { return format_params("exp_taylor", params()); }
  ParamList params() const override { return {{"k", static_cast<double>(k_)}}; }
  double A(double t) const override { return exp_tail(t, k_); }
  double a(double t) const override { return exp_tail(t, k_ - 1); }
  double log_A(double t) const override { return log_exp_tail(t, k_); }
  double log_a(double t) const override { return log_exp_tail(t, k_ - 1); }

 private:
  int k_;
};

class DoubleExpImpl final : public YoungImpl {
 public:
  YoungKind kind() const override { return YoungKind::double_exp; }
  std::string name() const override { return "double_exp()"; }
  ParamList params() const override { return {}; }
  double A(double t) const override { return std::exp(1.0) * std::expm1(std::expm1(t)); }
  double a(double t) const override { return std::exp(t + std::exp(t)); }
  double log_A(double t) const override {
    if (t == 0.0) return -kInf;
    const double u = std::expm1(t);
    if (u < 700.0) return 1.0 + std::log(std::expm1(u));
    return 1.0 + u + std::log1p(-std::exp(-u));
  }
  double log_a(double t) const override { return t + std::exp(t); }
};

class ExpNegPowerImpl final : public YoungImpl {
 public:
  explicit ExpNegPowerImpl(double r) : r_(r) {
    require(std::isfinite(r) && r > 0.0, "exp_neg_power: r must be > 0");
    tc_ = std::pow(r / (r + 1.0), 1.0 / r);
    Ac_ = std::exp(-(r + 1.0) / r);
    ac_ = r * std::pow(tc_, -r - 1.0) * Ac_;
  }
  YoungKind kind() const override { return YoungKind::exp_neg_power; }
  std::string name() const override { return format_params("exp_neg_power", params()); }
  ParamList params() const override { return {{"r", r_}}; }
  double A(double t) const override {
    if (t == 0.0) return 0.0;
    if (t <= tc_) return std::exp(-std::pow(t, -r_));
    return Ac_ + ac_ * (t - tc_);
  }
  double a(double t) const override {
    if (t == 0.0) return 0.0;
    if (t <= tc_) return r_ * std::pow(t, -r_ - 1.0) * std::exp(-std::pow(t, -r_));
    return ac_;
  }
  double log_A(double t) const override {
    if (t == 0.0) return -kInf;
    if (t <= tc_) return -std::pow(t, -r_);
    return std::log(A(t));
  }
  double log_a(double t) const override {
    if (t == 0.0) return -kInf;
    if (t <= tc_) return std::log(r_) - (r_ + 1.0) * std::log(t) - std::pow(t, -r_);
    return std::log(ac_);
  }

 private:
  double r_, tc_, Ac_, ac_;
};

class TabulatedImpl final : public YoungImpl {
 public:
  TabulatedImpl(std::vector<double> t, std::vector<double> a) : t_(std::move(t)), a_(std::move(a)) {
    require(t_.size() == a_.size(), "tabulated: t and a must have equal length");
    require(t_.size() >= 3, "tabulated: need at least 3 knots");
    require(t_.front() == 0.0, "tabulated: first knot must be t = 0");
    for (std::size_t i = 1; i < t_.size(); ++i) {
      require(std::isfinite(t_[i]) && t_[i] > t_[i - 1], "tabulated: t must increase strictly");
      require(std::isfinite(a_[i]) && a_[i] >= a_[i - 1], "tabulated: a must be nondecreasing");
    }
    require(a_.front() >= 0.0, "tabulated: a must be nonnegative");
    require(a_.back() > 0.0, "tabulated: a is identically zero");
    cumulative_.assign(t_.size(), 0.0);
    for (std::size_t i = 1; i < t_.size(); ++i)
      cumulative_[i] = cumulative_[i - 1] + 0.5 * (a_[i] + a_[i - 1]) * (t_[i] - t_[i - 1]);
    const std::size_t n = t_.size();
    if (a_[n - 2] > 0.0)
      tail_exponent_ = std::log(a_[n - 1] / a_[n - 2]) / std::log(t_[n - 1] / t_[n - 2]);
    else
      tail_exponent_ = 1.0;
  }
  YoungKind kind() const override { return YoungKind::tabulated; }
  std::string name() const override {
    return "tabulated(knots=" + std::to_string(t_.size()) + ")";
  }
  ParamList params() const override {
    return {{"knots", static_cast<double>(t_.size())}, {"t_max", t_.back()}};
  }
  double A(double t) const override {
    const std::size_t n = t_.size();
    if (t >= t_[n - 1]) {
      const double tn = t_[n - 1];
      const double b = tail_exponent_;
      return cumulative_[n - 1] + a_[n - 1] * tn / (b + 1.0) * (std::pow(t / tn, b + 1.0) - 1.0);
    }
    const std::size_t i = segment(t);
    const double dt = t - t_[i];
    const double slope = (a_[i + 1] - a_[i]) / (t_[i + 1] - t_[i]);
    return cumulative_[i] + a_[i] * dt + 0.5 * slope * dt * dt;
  }
  double a(double t) const override {
    const std::size_t n = t_.size();
    if (t >= t_[n - 1]) return a_[n - 1] * std::pow(t / t_[n - 1], tail_exponent_);
    const std::size_t i = segment(t);
    const double w = (t - t_[i]) / (t_[i + 1] - t_[i]);
    return a_[i] + w * (a_[i + 1] - a_[i]);
  }

 private:
  std::size_t segment(double t) const {
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - t_.begin()) - 1));
  }
  std::vector<double> t_, a_, cumulative_;
  double tail_exponent_ = 1.0;
};

// sup{τ ≥ 0 : a(τ) ≤ t}; +inf when a never exceeds t.
double argmax_for(const YoungFunction& f, double t) {
  if (!(t > 0.0)) return 0.0;
  double lo = 1.0;
  double hi = 1.0;
  if (f.a_raw(1.0) <= t) {
    hi = 2.0;
    while (f.a_raw(hi) <= t) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) return kInf;
    }
  } else {
    lo = 0.5;
    while (f.a_raw(lo) > t) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) return 0.0;
    }
  }
  for (int i = 0; i < kMaxBisection && hi / lo - 1.0 > 4e-16; ++i) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (mid <= lo || mid >= hi) break;
    if (f.a_raw(mid) <= t)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

class ConjugateImpl final : public YoungImpl {
 public:
  explicit ConjugateImpl(YoungFunction base) : base_(std::move(base)) {}
  YoungKind kind() const override { return YoungKind::conjugate; }
  std::string name() const override { return "conjugate(" + base_.name() + ")"; }
  ParamList params() const override { return {}; }
  double A(double t) const override {
    if (!(t > 0.0)) return 0.0;
    const double tau = argmax_for(base_, t);
    if (std::isinf(tau)) return kInf;
    if (tau == 0.0) return 0.0;
    return std::max(0.0, t * tau - base_.A_raw(tau));
  }
  double a(double t) const override { return argmax_for(base_, t); }
  const YoungFunction* base() const override { return &base_; }

 private:
  YoungFunction base_;
};

}  // namespace

const char* to_string(YoungKind kind) noexcept {
  switch (kind) {
    case YoungKind::power: return "power";
    case YoungKind::p_q: return "p_q";
    case YoungKind::p_log: return "p_log";
    case YoungKind::exp_taylor: return "exp_taylor";
    case YoungKind::double_exp: return "double_exp";
    case YoungKind::exp_neg_power: return "exp_neg_power";
    case YoungKind::tabulated: return "tabulated";
    case YoungKind::conjugate: return "conjugate";
    case YoungKind::e_function: return "e_function";
  }
  return "unknown";
}

YoungFunction YoungFunction::power(double p, double c) { return YoungFunction(std::make_shared<PowerImpl>(p, c)); }
YoungFunction YoungFunction::p_q(double p, double q) { return YoungFunction(std::make_shared<PQImpl>(p, q)); }
YoungFunction YoungFunction::p_log(double p, double q, double r) {
  return YoungFunction(std::make_shared<PLogImpl>(p, q, r));
}
YoungFunction YoungFunction::exp_taylor(int k) { return YoungFunction(std::make_shared<ExpTaylorImpl>(k)); }
YoungFunction YoungFunction::double_exp() { return YoungFunction(std::make_shared<DoubleExpImpl>()); }
YoungFunction YoungFunction::exp_neg_power(double r) { return YoungFunction(std::make_shared<ExpNegPowerImpl>(r)); }
YoungFunction YoungFunction::tabulated_derivative(std::vector<double> t, std::vector<double> a) {
  return YoungFunction(std::make_shared<TabulatedImpl>(std::move(t), std::move(a)));
}

YoungFunction YoungFunction::tabulated_values(const std::vector<double>& t, const std::vector<double>& A) {
  require(t.size() == A.size() && t.size() >= 3, "tabulated: need at least 3 (t, A) knots");
  std::vector<double> a(t.size());
  a[0] = (A[1] - A[0]) / (t[1] - t[0]);
  for (std::size_t i = 1; i + 1 < t.size(); ++i) a[i] = (A[i + 1] - A[i - 1]) / (t[i + 1] - t[i - 1]);
  const std::size_t n = t.size();
  a[n - 1] = (A[n - 1] - A[n - 2]) / (t[n - 1] - t[n - 2]);
  // Central differences of a convex table can dip by rounding; restore monotonicity.
  for (std::size_t i = 1; i < n; ++i) a[i] = std::max(a[i], a[i - 1]);
  return tabulated_derivative(t, std::move(a));
}

YoungFunction YoungFunction::from_impl(std::shared_ptr<const detail::YoungImpl> impl) {
  return YoungFunction(std::move(impl));
}

YoungKind YoungFunction::kind() const { return impl_->kind(); }
std::string YoungFunction::name() const { return impl_->name(); }
ParamList YoungFunction::params() const { return impl_->params(); }

bool YoungFunction::is_catalog() const {
  switch (kind()) {
    case YoungKind::tabulated:
    case YoungKind::conjugate:
    case YoungKind::e_function: return false;
    default: return true;
  }
}

double YoungFunction::A(double t) const {
  const SaturatedValue v = eval_saturating(t, Which::A);
  if (v.saturated) {
    std::ostringstream os;
    os << "value exceeds representable range: A(" << t << ") > " << kSaturation;
    throw Error(ErrorCode::overflow, os.str());
  }
  return v.value;
}

double YoungFunction::a(double t) const {
  const SaturatedValue v = eval_saturating(t, Which::a);
  if (v.saturated) {
    std::ostringstream os;
    os << "value exceeds representable range: a(" << t << ") > " << kSaturation;
    throw Error(ErrorCode::overflow, os.str());
  }
  return v.value;
}

SaturatedValue YoungFunction::eval_saturating(double t, Which which) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::invalid_argument, "Young function argument must be finite and >= 0");
  const double v = which == Which::A ? impl_->A(t) : impl_->a(t);
  if (kind() == YoungKind::conjugate && std::isinf(v) && which == Which::A) {
    std::ostringstream os;
    os << "conjugate infinite at t=" << t;
    throw Error(ErrorCode::conjugate_infinite, os.str());
  }
  if (!(v <= kSaturation)) return {kSaturation, true};
  return {v, false};
}

double YoungFunction::A_raw(double t) const { return impl_->A(t); }
double YoungFunction::a_raw(double t) const { return impl_->a(t); }
void YoungFunction::A_and_a_raw(double t, double& A_out, double& a_out) const { impl_->A_and_a(t, A_out, a_out); }
double YoungFunction::log_A(double t) const { return impl_->log_A(t); }
double YoungFunction::log_a(double t) const { return impl_->log_a(t); }
std::optional<double> YoungFunction::closed_form_inverse(double y) const { return impl_->inverse(y); }
std::optional<YoungFunction> YoungFunction::closed_form_conjugate() const { return impl_->conjugate(); }
const YoungFunction* YoungFunction::base() const { return impl_->base(); }

double eval(const YoungFunction& f, double t, Which which) { return which == Which::A ? f.A(t) : f.a(t); }

double inverse(const YoungFunction& f, double y, double rtol) {
  if (!(y >= 0.0) || !std::isfinite(y)) throw Error(ErrorCode::invalid_argument, "inverse: y must be finite and >= 0");
  if (y == 0.0) return 0.0;
  if (auto closed = f.closed_form_inverse(y)) return *closed;
  const double target = std::log(y);
  double lo = 1.0;
  double hi = 1.0;
  if (f.log_A(1.0) < target) {
    hi = 2.0;
    while (f.log_A(hi) < target) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) {
        std::ostringstream os;
        os << "inverse out of bracket: A(t) < " << y << " on [" << lo << ", " << hi << "]";
        throw Error(ErrorCode::out_of_bracket, os.str());
      }
    }
  } else {
    lo = 0.5;
    while (f.log_A(lo) >= target) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) {
        std::ostringstream os;
        os << "inverse out of bracket: A(t) > " << y << " on [" << lo << ", " << hi << "]";
        throw Error(ErrorCode::out_of_bracket, os.str());
      }
    }
  }
  // Bisection runs to machine resolution; rtol only bounds the accepted residual.
  (void)rtol;
  for (int i = 0; i < kMaxBisection && hi / lo - 1.0 > 4e-16; ++i) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (mid <= lo || mid >= hi) break;
    if (f.log_A(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

YoungFunction conjugate(const YoungFunction& f) {
  if (auto closed = f.closed_form_conjugate()) return *closed;
  return YoungFunction::from_impl(std::make_shared<ConjugateImpl>(f));
}

double conjugate_argmax(const YoungFunction& f, double t) { return argmax_for(f, t); }

namespace {

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = lo * std::pow(10.0, decades * i / (n - 1));
  return grid;
}

// ta/A sampled from t = 1 towards one end. Divergent when large or still
// growing at least half as fast over the last decade as over the one before.
bool diverges(const std::vector<double>& t, const std::vector<double>& ratio, double log_doubling) {
  if (ratio.empty()) return false;
  const double peak = *std::max_element(ratio.begin(), ratio.end());
  if (peak > 1e3 || log_doubling > 1e3 * std::log(2.0)) return true;
  // Locate samples one and two decades before the end.
  const double t_end = t.back();
  auto at_decades = [&](double decades) {
    const double target = std::log10(t_end) - (t_end > 1.0 ? decades : -decades);
    std::size_t best = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (std::abs(std::log10(t[i]) - target) < std::abs(std::log10(t[best]) - target)) best = i;
    return ratio[best];
  };
  const double v0 = ratio.back();
  const double v1 = at_decades(1.0);
  const double v2 = at_decades(2.0);
  const double last = v0 - v1;
  const double prev = v1 - v2;
  return last > 1e-3 && last >= 0.5 * prev;
}

}  // namespace

DoublingClass classify_doubling_numeric(const YoungFunction& f, double t_lo, double t_hi) {
  if (!(0.0 < t_lo && t_lo < 1.0 && 1.0 < t_hi))
    throw Error(ErrorCode::invalid_argument, "classify_doubling: need 0 < t_lo < 1 < t_hi");
  const std::vector<double> grid = log_grid(t_lo, t_hi, 20);
  DoublingClass out;
  out.pA_plus = -std::numeric_limits<double>::infinity();
  out.pA_minus = std::numeric_limits<double>::infinity();
  // Samples ordered from t = 1 outwards for each side.
  std::vector<double> t_zero, r_zero, t_inf, r_inf;
  double log_c0 = -kInf, log_cinf = -kInf;
  for (double t : grid) {
    const double lA = f.log_A(t);
    if (lA == -kInf || std::isnan(lA))
      throw Error(ErrorCode::degenerate, "degenerate Young function: A(" + std::to_string(t) + ") = 0");
    // Beyond log A ~ 1e12 the difference log a − log A has no significant
    // digits left; such growth is far from any power, so ta/A counts as unbounded.
    const bool huge = lA > 1e12;
    const double ratio = huge ? kInf : std::exp(std::log(t) + f.log_a(t) - lA);
    const double log_doubling = huge ? kInf : f.log_A(2.0 * t) - lA;
    out.pA_plus = std::max(out.pA_plus, ratio);
    out.pA_minus = std::min(out.pA_minus, ratio);
    if (t <= 1.0) {
      t_zero.push_back(t);
      r_zero.push_back(ratio);
      log_c0 = std::max(log_c0, log_doubling);
    }
    if (t >= 1.0) {
      t_inf.push_back(t);
      r_inf.push_back(ratio);
      log_cinf = std::max(log_cinf, log_doubling);
    }
  }
  std::reverse(t_zero.begin(), t_zero.end());
  std::reverse(r_zero.begin(), r_zero.end());
  out.delta2_zero = !diverges(t_zero, r_zero, log_c0);
  out.delta2_inf = !diverges(t_inf, r_inf, log_cinf);
  out.delta2_global = out.delta2_zero && out.delta2_inf;
  out.C0 = std::min(std::exp(log_c0), kSaturation);
  out.Cinf = std::min(std::exp(log_cinf), kSaturation);
  return out;
}

DoublingClass classify_doubling(const YoungFunction& f, double t_lo, double t_hi) {
  DoublingClass out = classify_doubling_numeric(f, t_lo, t_hi);
  const ParamList params = f.params();
  auto param = [&](const char* key) {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    return 0.0;
  };
  auto set_flags = [&](bool zero, bool inf) {
    out.delta2_zero = zero;
    out.delta2_inf = inf;
    out.delta2_global = zero && inf;
    out.analytic = true;
  };
  switch (f.kind()) {
    case YoungKind::power:
      set_flags(true, true);
      out.pA_plus = out.pA_minus = param("p");
      break;
    case YoungKind::p_q:
      set_flags(true, true);
      out.pA_plus = param("q");
      out.pA_minus = param("p");
      break;
    case YoungKind::p_log:
      set_flags(true, true);
      out.pA_plus = param("p") + param("q") * param("r");
      out.pA_minus = param("p");
      break;
    case YoungKind::exp_taylor:
    case YoungKind::double_exp: set_flags(true, false); break;
    case YoungKind::exp_neg_power: set_flags(false, true); break;
    case YoungKind::conjugate: {
      // p_Ã± are the Hölder conjugates of p_A∓ when 1 < p_A⁻ ≤ p_A⁺ < ∞.
      const YoungFunction* b = f.base();
      if (!b || !b->is_catalog()) break;
      const DoublingClass bd = classify_doubling(*b, t_lo, t_hi);
      if (!bd.analytic || !bd.delta2_global || !(bd.pA_minus > 1.0) || !std::isfinite(bd.pA_plus)) break;
      set_flags(true, true);
      out.pA_plus = bd.pA_minus / (bd.pA_minus - 1.0);
      out.pA_minus = bd.pA_plus / (bd.pA_plus - 1.0);
      break;
    }
    default: break;
  }
  return out;
}

InvariantCheck check_young_invariants(const YoungFunction& f, double t_lo, double t_hi, double tol) {
  InvariantCheck out;
  auto fail = [&](const std::string& what, double t) {
    std::ostringstream os;
    os << f.name() << ": " << what << " at t=" << t;
    out.violations.push_back(os.str());
  };
  if (f.A_raw(0.0) != 0.0) fail("A(0) != 0", 0.0);
  const std::vector<double> grid = log_grid(t_lo, t_hi, 10);
  double prev_t = 0.0, prev_A = 0.0, prev_a = f.a_raw(0.0), prev_slope = -kInf;
  bool nonconstant = false;
  for (double t : grid) {
    double A = 0.0, a = 0.0;
    f.A_and_a_raw(t, A, a);
    if (!std::isfinite(A) || !std::isfinite(a) || A > kSaturation) break;
    if (A > 0.0) nonconstant = true;
    if (A < 0.0) fail("A negative", t);
    if (a < prev_a * (1.0 - tol) - 1e-300) fail("a decreasing", t);
    if (A > t * a * (1.0 + tol) + 1e-300) fail("A(t) > t a(t)", t);
    const double slope = (A - prev_A) / (t - prev_t);
    if (slope < prev_slope - tol * std::abs(prev_slope) - 1e-300) fail("A not convex", t);
    for (double r : {0.1, 0.5}) {
      const double Ar = f.A_raw(r * t);
      if (Ar > r * A * (1.0 + tol) + 1e-300) fail("A(rt) > rA(t) for r<1", t);
    }
    for (double r : {2.0, 10.0}) {
      const double Ar = f.A_raw(r * t);
      if (std::isfinite(Ar) && Ar < r * A * (1.0 - tol)) fail("A(rt) < rA(t) for r>1", t);
    }
    prev_t = t;
    prev_A = A;
    prev_a = a;
    prev_slope = slope;
  }
  if (!nonconstant) fail("A identically zero on sample grid", t_hi);
  return out;
}

}  // namespace orlicz
