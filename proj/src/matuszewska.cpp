#include "orlicz/matuszewska.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kStepsPerOctave = 8;
constexpr int kOctaves = 60;
constexpr int kLimitTerms = 10;
const double kLogInfiniteSup = std::log(1e12);
const double kLogHuge = std::log(1e300);
const double kLogTiny = std::log(1e-300);

double param(const YoungFunction& f, const char* key) {
  for (const auto& [k, v] : f.params())
    if (k == key) return v;
  return 0.0;
}

ExtendedReal from_log(double log_value) {
  if (log_value >= kLogHuge) return ExtendedReal::infinity();
  if (log_value <= kLogTiny) return ExtendedReal(0.0);
  return ExtendedReal(std::exp(log_value));
}

// 0 below 1, 1 at 1, ∞ above: the jump profile of non-doubling ends.
ExtendedReal jump(double t) {
  if (t < 1.0) return ExtendedReal(0.0);
  if (t == 1.0) return ExtendedReal(1.0);
  return ExtendedReal::infinity();
}

// t^e for t ≤ 1, ∞ above.
ExtendedReal capped(double t, double e) {
  if (t <= 1.0) return ExtendedReal(std::pow(t, e));
  return ExtendedReal::infinity();
}

struct ClosedForms {
  ExtendedReal M, M0, Minf;
};

std::optional<ClosedForms> closed_forms(const YoungFunction& f, double t) {
  switch (f.kind()) {
    case YoungKind::power: {
      const ExtendedReal v(std::pow(t, param(f, "p")));
      return ClosedForms{v, v, v};
    }
    case YoungKind::p_q: {
      const double p = param(f, "p"), q = param(f, "q");
      return ClosedForms{ExtendedReal(std::max(std::pow(t, p), std::pow(t, q))), ExtendedReal(std::pow(t, p)),
                         ExtendedReal(std::pow(t, q))};
    }
    case YoungKind::p_log: {
      const double p = param(f, "p"), top = p + param(f, "q") * param(f, "r");
      return ClosedForms{ExtendedReal(std::max(std::pow(t, p), std::pow(t, top))), ExtendedReal(std::pow(t, top)),
                         ExtendedReal(std::pow(t, p))};
    }
    case YoungKind::exp_taylor: {
      const double k = param(f, "k");
      return ClosedForms{capped(t, k), ExtendedReal(std::pow(t, k)), jump(t)};
    }
    case YoungKind::double_exp: return ClosedForms{capped(t, 1.0), ExtendedReal(t), jump(t)};
    // Linear beyond the inflection point, so the ∞ end behaves like t.
    case YoungKind::exp_neg_power: return ClosedForms{capped(t, 1.0), jump(t), ExtendedReal(t)};
    default: return std::nullopt;
  }
}

struct ClosedIndices {
  ExtendedReal i, i0, iinf;
};

std::optional<ClosedIndices> closed_indices(const YoungFunction& f) {
  const ExtendedReal inf = ExtendedReal::infinity();
  switch (f.kind()) {
    case YoungKind::power: {
      const ExtendedReal p(param(f, "p"));
      return ClosedIndices{p, p, p};
    }
    case YoungKind::p_q:
      return ClosedIndices{ExtendedReal(param(f, "q")), ExtendedReal(param(f, "p")), ExtendedReal(param(f, "q"))};
    case YoungKind::p_log: {
      const double p = param(f, "p"), top = p + param(f, "q") * param(f, "r");
      return ClosedIndices{ExtendedReal(top), ExtendedReal(top), ExtendedReal(p)};
    }
    case YoungKind::exp_taylor: return ClosedIndices{inf, ExtendedReal(param(f, "k")), inf};
    case YoungKind::double_exp: return ClosedIndices{inf, ExtendedReal(1.0), inf};
    case YoungKind::exp_neg_power: return ClosedIndices{inf, inf, ExtendedReal(1.0)};
    default: return std::nullopt;
  }
}

// log A(αt) − log A(α); NaN when both sides are unresolvable.
double log_ratio(const YoungFunction& f, double alpha, double t) {
  const double num = f.log_A(alpha * t);
  const double den = f.log_A(alpha);
  if (std::isinf(num) && std::isinf(den)) return std::numeric_limits<double>::quiet_NaN();
  return num - den;
}

void require_positive(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorCode::invalid_argument, std::string(what) + ": t must be > 0");
}

ExtendedReal numeric_sup(const YoungFunction& f, double t) {
  const int n = 2 * kOctaves * kStepsPerOctave + 1;
  std::vector<double> L(n, std::numeric_limits<double>::quiet_NaN());
  double best = -kInf;
  int best_index = -1;
  for (int j = 0; j < n; ++j) {
    const double alpha = std::exp2(static_cast<double>(j - kOctaves * kStepsPerOctave) / kStepsPerOctave);
    L[j] = log_ratio(f, alpha, t);
    if (!std::isnan(L[j]) && L[j] > best) {
      best = L[j];
      best_index = j;
    }
  }
  if (best_index < 0) {
    std::ostringstream os;
    os << "indeterminate at t=" << t;
    throw Error(ErrorCode::indeterminate, os.str());
  }
  if (best >= kLogHuge) return ExtendedReal::infinity();
  if (best > kLogInfiniteSup) {
    // Still growing by a factor of two over the last two decades at the end
    // where the sup sits: treat as unbounded.
    const int two_decades = static_cast<int>(std::lround(2.0 * std::log2(10.0) * kStepsPerOctave));
    const bool at_low = best_index < two_decades;
    const bool at_high = best_index >= n - two_decades;
    if (at_low || at_high) {
      const int end = at_low ? 0 : n - 1;
      const int inner = at_low ? two_decades : n - 1 - two_decades;
      if (!std::isnan(L[end]) && !std::isnan(L[inner]) && L[end] - L[inner] > std::log(2.0))
        return ExtendedReal::infinity();
    }
  }
  return ExtendedReal(std::exp(best));
}

LimitValue numeric_limit(const YoungFunction& f, double t, LimitEnd end) {
  std::vector<double> tail;
  for (int k = kOctaves; k >= 1 && static_cast<int>(tail.size()) < kLimitTerms; --k) {
    const double alpha = std::exp2(end == LimitEnd::zero ? -k : k);
    const double L = log_ratio(f, alpha, t);
    if (!std::isnan(L)) tail.push_back(L);
  }
  if (tail.empty()) {
    std::ostringstream os;
    os << "limit indeterminate at t=" << t;
    throw Error(ErrorCode::indeterminate, os.str());
  }
  const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
  LimitValue out;
  out.value = from_log(*lo);
  const bool pinned = (*lo >= kLogHuge) || (*hi <= kLogTiny);
  out.converged = pinned || (*hi - *lo) < 1e-3;
  return out;
}

ExtendedReal numeric_index(const YoungFunction& f, IndexKind which) {
  std::vector<double> x, y;
  for (int j = 0; j <= 16; ++j) {
    const double t = std::pow(10.0, 2.0 + 0.25 * j);
    ExtendedReal m;
    switch (which) {
      case IndexKind::global: m = numeric_sup(f, t); break;
      case IndexKind::zero: m = numeric_limit(f, t, LimitEnd::zero).value; break;
      case IndexKind::infinity: m = numeric_limit(f, t, LimitEnd::infinity).value; break;
    }
    if (m.is_infinite()) return ExtendedReal::infinity();
    // Fit over the top three decades.
    if (t >= 1e3 * (1.0 - 1e-12) && m.value() > 0.0) {
      x.push_back(std::log(t));
      y.push_back(std::log(m.value()));
    }
  }
  if (x.size() < 4) throw Error(ErrorCode::not_estimable, "index not estimable: fewer than 4 finite samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  if (slope > 50.0) return ExtendedReal::infinity();
  return ExtendedReal(slope);
}

}  // namespace

ExtendedReal matuszewska_sup(const YoungFunction& f, double t, Method method) {
  require_positive(t, "matuszewska_sup");
  if (method == Method::automatic)
    if (auto closed = closed_forms(f, t)) return closed->M;
  return numeric_sup(f, t);
}

LimitValue matuszewska_limit(const YoungFunction& f, double t, LimitEnd end, Method method) {
  require_positive(t, "matuszewska_limit");
  if (method == Method::automatic)
    if (auto closed = closed_forms(f, t)) return {end == LimitEnd::zero ? closed->M0 : closed->Minf, true};
  return numeric_limit(f, t, end);
}

ExtendedReal matuszewska_index(const YoungFunction& f, IndexKind which, Method method) {
  if (method == Method::automatic) {
    if (auto closed = closed_indices(f)) {
      switch (which) {
        case IndexKind::global: return closed->i;
        case IndexKind::zero: return closed->i0;
        case IndexKind::infinity: return closed->iinf;
      }
    }
  }
  return numeric_index(f, which);
}

std::vector<double> default_profile_grid() {
  std::vector<double> grid;
  for (int e = -4; e <= 4; ++e) grid.push_back(std::exp2(e));
  return grid;
}

MatuszewskaProfile matuszewska_profile(const YoungFunction& f, const std::vector<double>& t_grid, Method method) {
  MatuszewskaProfile out;
  out.t_grid = t_grid;
  for (double t : t_grid) {
    out.M.push_back(matuszewska_sup(f, t, method));
    const LimitValue zero = matuszewska_limit(f, t, LimitEnd::zero, method);
    const LimitValue inf = matuszewska_limit(f, t, LimitEnd::infinity, method);
    out.M0.push_back(zero.value);
    out.Minf.push_back(inf.value);
    out.converged_zero = out.converged_zero && zero.converged;
    out.converged_inf = out.converged_inf && inf.converged;
  }
  out.i = matuszewska_index(f, IndexKind::global, method);
  out.i0 = matuszewska_index(f, IndexKind::zero, method);
  out.iinf = matuszewska_index(f, IndexKind::infinity, method);
  return out;
}

InvariantCheck check_profile_invariants(const MatuszewskaProfile& p, double tol) {
  InvariantCheck out;
  auto fail = [&](const std::string& what, double t) {
    std::ostringstream os;
    os << what << " at t=" << t;
    out.violations.push_back(os.str());
  };
  const std::size_t n = p.t_grid.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double t = p.t_grid[k];
    if (t == 1.0) {
      for (const ExtendedReal* v : {&p.M[k], &p.M0[k], &p.Minf[k]})
        if (v->is_infinite() || std::abs(v->value() - 1.0) > tol) fail("M(1) != 1", t);
    }
    if (p.M[k].is_finite()) {
      const double bound = p.M[k].value() * (1.0 + tol);
      if (p.M0[k].value() > bound) fail("M0 > M", t);
      if (p.Minf[k].value() > bound) fail("Minf > M", t);
    }
    if (k > 0 && p.M[k - 1].value() > p.M[k].value() * (1.0 + tol)) fail("M decreasing", t);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const double prod = p.t_grid[a] * p.t_grid[b];
      for (std::size_t c = 0; c < n; ++c) {
        if (std::abs(p.t_grid[c] - prod) > 1e-12 * prod) continue;
        if (p.M[a].is_infinite() || p.M[b].is_infinite()) continue;
        if (p.M[c].value() > p.M[a].value() * p.M[b].value() * (1.0 + tol)) fail("M not submultiplicative", prod);
      }
    }
  }
  if (p.i.is_finite() && std::max(p.i0.value(), p.iinf.value()) > p.i.value() + 0.05) fail("max(i0, iinf) > i", 0.0);
  return out;
}

std::string profile_csv(const MatuszewskaProfile& p) {
  std::ostringstream os;
  os << "t,M,M0,Minf\n";
  for (std::size_t k = 0; k < p.t_grid.size(); ++k)
    os << to_string(ExtendedReal(p.t_grid[k])) << ',' << to_string(p.M[k]) << ',' << to_string(p.M0[k]) << ','
       << to_string(p.Minf[k]) << '\n';
  return os.str();
}

}  // namespace orlicz
