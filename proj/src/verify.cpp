#include "orlicz/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>

#include "orlicz/bounds.hpp"
#include "orlicz/domain.hpp"
#include "orlicz/matuszewska.hpp"
#include "orlicz/report.hpp"
#include "orlicz/spectral.hpp"

namespace orlicz {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<double> log_probes(double lo, double hi, int count) {
  std::vector<double> t(static_cast<std::size_t>(count));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  return t;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Records one named check; exceptions inside `body` become failures with the message as detail.
class Checker {
 public:
  Checker(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{suite_, name, false, ""};
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const Error& e) {
      r.detail = std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

bool conjugate_is_finite(const YoungFunction& f) {
  switch (f.kind()) {
    case YoungKind::power:
    case YoungKind::p_q:
    case YoungKind::p_log:
    case YoungKind::exp_taylor:
    case YoungKind::double_exp:
      return true;
    default:
      return false;
  }
}

// A(t) in the range where relative comparisons are meaningful.
bool normal_range(double v) { return v > 1e-280 && v < 1e280; }

std::shared_ptr<const DomainGeometry> geometry(const DomainSpec& spec) {
  return std::make_shared<const DomainGeometry>(build_domain(spec));
}

double quadratic_oracle(const Discretization& disc, const Weight& w) {
  const auto N = static_cast<Eigen::Index>(disc.size());
  const auto k = disc.quadratic_kernel();
  Eigen::MatrixXd K = Eigen::Map<const Eigen::MatrixXd>(k.data(), N, N);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  const double hn = disc.domain().cell_volume();
  for (Eigen::Index i = 0; i < N; ++i) M(i, i) = w.values[static_cast<std::size_t>(i)] * hn;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::vector<YoungFunction> verify_catalog() {
  return {YoungFunction::power(1.5),
          YoungFunction::power(2.0),
          YoungFunction::power(3.0),
          YoungFunction::p_q(2.0, 3.0),
          YoungFunction::p_log(2.0, 1.0, 1.0),
          YoungFunction::exp_taylor(2),
          YoungFunction::double_exp(),
          YoungFunction::exp_neg_power(1.0),
          YoungFunction::tabulated_derivative({0.0, 0.5, 1.0, 2.0, 4.0}, {0.0, 0.5, 1.5, 3.0, 8.0})};
}

void verify_young(const YoungFunction& f, std::vector<CheckResult>& out) {
  Checker c("young_fn:" + f.name(), out);
  const auto probes = log_probes(1e-6, 1e6, 60);

  c.check("convexity_and_scaling", [&](bool& ok) {
    const auto inv = check_young_invariants(f);
    ok = inv.ok();
    return ok ? std::string() : inv.violations.front();
  });

  c.check("inverse_of_A", [&](bool& ok) {
    double worst = 0.0;
    for (double t : probes) {
      const double y = f.A_raw(t);
      if (!normal_range(y)) continue;
      worst = std::max(worst, std::abs(inverse(f, y) - t) / t);
    }
    ok = worst <= 1e-8;
    return "max rel err " + fmt(worst);
  });

  if (conjugate_is_finite(f)) {
    const YoungFunction g = conjugate(f);
    c.check("duality_sandwich", [&](bool& ok) {
      double lo = 1e300, hi = 0.0;
      for (double t : probes) {
        const double x = inverse(f, t) * inverse(g, t);
        ok = ok && x >= t * (1.0 - 1e-6) && x <= 2.0 * t * (1.0 + 1e-6);
        lo = std::min(lo, x / t);
        hi = std::max(hi, x / t);
      }
      return "ratio range [" + fmt(lo) + ", " + fmt(hi) + "]";
    });
    c.check("biconjugation", [&](bool& ok) {
      const YoungFunction gg = conjugate(g);
      double worst = 0.0;
      for (double t : probes) {
        const double y = f.A_raw(t);
        if (!normal_range(y)) continue;
        worst = std::max(worst, rel_diff(gg.A_raw(t), y));
      }
      ok = worst <= 1e-6;
      return "max rel err " + fmt(worst);
    });
  }

  const DoublingClass d = classify_doubling(f);
  c.check("doubling_consistency", [&](bool& ok) {
    ok = d.pA_minus >= 1.0 - 1e-9 && d.pA_plus >= d.pA_minus - 1e-12 &&
         d.delta2_global == (d.delta2_zero && d.delta2_inf);
    return "pA in [" + fmt(d.pA_minus) + ", " + fmt(d.pA_plus) + "]";
  });
  if (d.delta2_global && std::isfinite(d.pA_plus)) {
    c.check("doubling_power_bounds", [&](bool& ok) {
      const double p = d.pA_plus;
      for (double t : log_probes(1e-3, 1e3, 13))
        for (double tau : {0.1, 0.5, 2.0, 10.0}) {
          const double base = f.A_raw(t), scaled = f.A_raw(t * tau);
          const double lo = std::min(tau, std::pow(tau, p)) * base, hi = std::max(tau, std::pow(tau, p)) * base;
          if (scaled < lo * (1.0 - 1e-9) || scaled > hi * (1.0 + 1e-9)) {
            ok = false;
            return "violated at t=" + fmt(t) + " tau=" + fmt(tau);
          }
        }
      return std::string("p=") + fmt(p);
    });
  }
}

void verify_matuszewska(const YoungFunction& f, std::vector<CheckResult>& out) {
  Checker c("matuszewska:" + f.name(), out);
  const MatuszewskaProfile prof = matuszewska_profile(f, default_profile_grid());

  c.check("profile_invariants", [&](bool& ok) {
    const auto inv = check_profile_invariants(prof);
    ok = inv.ok();
    return ok ? std::string() : inv.violations.front();
  });

  if (f.is_catalog()) {
    c.check("numeric_matches_closed_form", [&](bool& ok) {
      double worst = 0.0;
      for (double t : {0.25, 0.5, 2.0, 4.0}) {
        const auto a = matuszewska_sup(f, t, Method::automatic), b = matuszewska_sup(f, t, Method::numeric);
        if (a.is_infinite() != b.is_infinite()) {
          ok = false;
          return "finiteness differs at t=" + fmt(t);
        }
        if (a.is_finite()) worst = std::max(worst, rel_diff(a.value(), b.value()));
      }
      ok = worst <= 0.05;
      return "max rel diff " + fmt(worst);
    });
  }

  const DoublingClass d = classify_doubling(f);
  if (!d.delta2_zero || !d.delta2_inf) {
    c.check("non_doubling_profile", [&](bool& ok) {
      for (std::size_t k = 0; k < prof.t_grid.size(); ++k) {
        const double t = prof.t_grid[k];
        if (t > 1.0 && prof.M[k].is_finite()) ok = false;
        if (t < 1.0 && prof.M[k].value() > t * (1.0 + 1e-9)) ok = false;
      }
      return std::string(ok ? "" : "M finite above 1 or above t below 1");
    });
  } else if (d.delta2_global && conjugate_is_finite(f)) {
    const DoublingClass dc = classify_doubling(conjugate(f));
    if (dc.delta2_global) {
      c.check("power_envelope", [&](bool& ok) {
        for (std::size_t k = 0; k < prof.t_grid.size(); ++k) {
          const double t = prof.t_grid[k], m = prof.M[k].value();
          const double a = std::pow(t, d.pA_minus), b = std::pow(t, d.pA_plus);
          if (m < std::min(a, b) * (1.0 - 1e-6) || m > std::max(a, b) * (1.0 + 1e-6)) {
            ok = false;
            return "violated at t=" + fmt(t);
          }
        }
        return std::string();
      });
    }
  }
  if (prof.iinf.is_finite() && prof.i.is_finite()) {
    c.check("power_like_growth", [&](bool& ok) {
      double lo = 1e300, hi = -1e300;
      for (double t : {1e1, 1e2, 1e3}) {
        const double q = std::log(matuszewska_sup(f, t).value()) / std::log(t);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
      ok = hi - lo <= 0.05;
      return "log M/log t in [" + fmt(lo) + ", " + fmt(hi) + "]";
    });
  }
}

void verify_bounds(std::vector<CheckResult>& out) {
  Checker c("bounds", out);
  const auto t2 = YoungFunction::power(2.0), t4 = YoungFunction::power(4.0);
  const Order o1{1, 0.75}, o2{2, 0.4};

  c.check("cond1_classification", [&](bool& ok) {
    const auto a = check_conditions(t4, Order{1, 0.5});
    const auto b = check_conditions(t2, Order{2, 0.5});
    ok = a.cond1 == Verdict::holds && b.cond1 == Verdict::fails && b.cond2 == Verdict::holds;
    return std::string("t^4: ") + to_string(a.cond1) + ", t^2 n=2: " + to_string(b.cond1) + "/" + to_string(b.cond2);
  });

  c.check("linear_in_C", [&](bool& ok) {
    const auto r = [&](double C) {
      return std::array<double, 3>{bound_thm1(t4, o1, 1.0, 1.0, AlphaRegime::below_alpha0, C).value,
                                   bound_diameter(t2, o2, 2.0, 1.0, C).value,
                                   bound_inradius_delta2(t2, o2, 1.0, 1.0, C).value};
    };
    const auto a = r(1.0), b = r(2.5);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_diff(b[i], 2.5 * a[i]));
    ok = worst <= 1e-12;
    return "max rel err " + fmt(worst);
  });

  c.check("thm2_inverse_decreasing_in_C", [&](bool& ok) {
    const auto f = YoungFunction::p_q(4.0, 5.0);
    double prev = 1e300;
    for (double C : {0.5, 1.0, 2.0, 4.0}) {
      const double v = bound_thm2_inverse(f, o1, 1.0, 1.0, 1.0, AlphaRegime::below_alpha0, C).value;
      ok = ok && v < prev;
      prev = v;
    }
    return std::string();
  });

  c.check("thm1_monotone", [&](bool& ok) {
    const auto v = [&](double r, double w) { return bound_thm1(t4, o1, r, w, AlphaRegime::below_alpha0).value; };
    ok = v(1.0, 2.0) <= v(1.0, 1.0) && v(2.0, 1.0) <= v(1.0, 1.0) && v(1.0, 1.0) <= v(0.5, 1.0);
    return std::string();
  });

  c.check("power_law_exponents", [&](bool& ok) {
    const auto slope = [](double v1, double v2) { return std::log(v2 / v1) / std::log(2.0); };
    const double s1 = slope(bound_thm1(t4, o1, 1.0, 1.0, AlphaRegime::below_alpha0).value,
                            bound_thm1(t4, o1, 2.0, 1.0, AlphaRegime::below_alpha0).value);
    const double s4 = slope(bound_inradius_delta2(t2, o2, 1.0, 1.0).value,
                            bound_inradius_delta2(t2, o2, 2.0, 1.0).value);
    ok = std::abs(s1 - (1 - 0.75 * 4)) <= 1e-9 && std::abs(s4 + 0.8) <= 1e-9;
    return "thm1 " + fmt(s1) + ", thm4 " + fmt(s4);
  });

  c.check("thm2_inverse_matches_thm1_for_powers", [&](bool& ok) {
    const double a = bound_thm1(t4, o1, 1.0, 1.0, AlphaRegime::below_alpha0).value;
    const double b = bound_thm2_inverse(t4, o1, 1.0, 1.0, 0.7, AlphaRegime::below_alpha0).value;
    ok = rel_diff(a, b) <= 1e-8;
    return fmt(a) + " vs " + fmt(b);
  });

  c.check("E_closed_form_vs_quadrature", [&](bool& ok) {
    double worst = 0.0;
    for (double t : {0.1, 1.0, 10.0})
      worst = std::max(worst, rel_diff(E_function(t4, o1, t), E_function(t4, o1, t, Method::numeric)));
    ok = worst <= 1e-6;
    return "max rel diff " + fmt(worst);
  });

  c.check("psi_s_nondecreasing", [&](bool& ok) {
    double prev = 0.0;
    for (double r : log_probes(1e-3, 1e3, 25)) {
      const double v = psi_s(t4, o1, r);
      ok = ok && v >= prev * (1.0 - 1e-12);
      prev = v;
    }
    return std::string();
  });
}

void verify_domain(std::vector<CheckResult>& out) {
  Checker c("domain", out);
  const std::vector<std::pair<std::string, DomainSpec>> shapes = {
      {"interval", DomainSpec::interval(0.0, 1.0, 1.0 / 64)},
      {"intervals", DomainSpec::intervals({{0.0, 0.5}, {1.0, 1.5}}, 1.0 / 32)},
      {"rectangle", DomainSpec::rectangle(0.0, 2.0, 0.0, 1.0, 1.0 / 16)},
      {"disc", DomainSpec::disc(0.0, 0.0, 1.0, 1.0 / 12)},
      {"l_shape", DomainSpec::mask({{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}, {1, 1, 1, 1}}, 0.25)},
  };
  for (const auto& [name, spec] : shapes) {
    c.check(name + "_invariants", [&](bool& ok) {
      const auto g = build_domain(spec);
      const auto inv = check_domain_invariants(g);
      ok = inv.ok();
      return ok ? "r=" + fmt(g.r_omega) + " d=" + fmt(g.d_omega) : inv.violations.front();
    });
    c.check(name + "_distance_methods_agree", [&](bool& ok) {
      const auto g = build_domain(spec);
      const auto a = distance_brute_force(g), b = distance_transform(g);
      double worst = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
      ok = worst <= 1e-12;
      return "max diff " + fmt(worst);
    });
  }

  c.check("refinement_consistency", [&](bool& ok) {
    std::string detail;
    for (double h : {1.0 / 12, 1.0 / 16}) {
      const auto a = build_domain(DomainSpec::disc(0.0, 0.0, 1.0, h));
      const auto b = build_domain(DomainSpec::disc(0.0, 0.0, 1.0, h / 2));
      ok = ok && std::abs(a.r_omega - b.r_omega) <= 2 * h && std::abs(a.d_omega - b.d_omega) <= 2 * h;
      detail += "h=" + fmt(h) + ": dr=" + fmt(a.r_omega - b.r_omega) + " dd=" + fmt(a.d_omega - b.d_omega) + "; ";
    }
    return detail;
  });

  c.check("subdomain_monotone", [&](bool& ok) {
    const auto big = build_domain(DomainSpec::disc(0.0, 0.0, 1.0, 1.0 / 12));
    const auto small = build_domain(DomainSpec::disc(0.2, 0.0, 0.5, 1.0 / 12));
    const auto l = build_domain(shapes[4].second);
    const auto sq = build_domain(DomainSpec::mask({{1, 1}, {1, 1}}, 0.25));
    ok = small.r_omega <= big.r_omega && small.d_omega <= big.d_omega && sq.r_omega <= l.r_omega &&
         sq.d_omega <= l.d_omega;
    return std::string();
  });

  c.check("translation_invariance", [&](bool& ok) {
    const auto a = build_domain(DomainSpec::disc(0.0, 0.0, 1.0, 0.125));
    const auto b = build_domain(DomainSpec::disc(0.75, -1.5, 1.0, 0.125));
    ok = a.size() == b.size() && std::abs(a.r_omega - b.r_omega) <= 1e-12 && std::abs(a.d_omega - b.d_omega) <= 1e-12;
    return std::string();
  });
}

void verify_spectral(std::uint64_t seed, std::vector<CheckResult>& out) {
  Checker c("spectral", out);
  const auto t2 = YoungFunction::power(2.0), t3 = YoungFunction::power(3.0);
  const auto pq = YoungFunction::p_q(2.0, 3.0), plog = YoungFunction::p_log(2.0, 1.0, 1.0);
  const auto line = geometry(DomainSpec::interval(0.0, 1.0, 1.0 / 32));
  const Discretization d1(line, 0.5);
  const Weight w1 = constant_weight(*line, 1.0);
  SolverOptions opts;
  opts.seed = seed;

  c.check("kernel_matches_seminorm", [&](bool& ok) {
    const auto k = d1.quadratic_kernel();
    const std::size_t N = d1.size();
    std::vector<double> u(N);
    for (std::size_t i = 0; i < N; ++i) u[i] = std::sin(0.3 * static_cast<double>(i) + 0.1);
    double q = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) q += u[i] * k[i * N + j] * u[j];
    const double err = rel_diff(q, d1.seminorm(u, t2));
    ok = err <= 1e-10;
    return "rel err " + fmt(err);
  });

  c.check("quadratic_oracle_1d", [&](bool& ok) {
    const double oracle = quadratic_oracle(d1, w1);
    const auto r = minimize_critical_value(d1, t2, w1, 1.0, opts);
    ok = rel_diff(r.lambda, oracle) <= 0.01 && rel_diff(r.Lambda, r.lambda) <= 1e-8;
    return "lambda " + fmt(r.lambda) + " oracle " + fmt(oracle);
  });

  c.check("quadratic_oracle_2d", [&](bool& ok) {
    const auto sq = geometry(DomainSpec::rectangle(0.0, 1.0, 0.0, 1.0, 1.0 / 8));
    const Discretization d2(sq, 0.4);
    const Weight w = constant_weight(*sq, 1.0);
    const double oracle = quadratic_oracle(d2, w);
    const auto r = minimize_critical_value(d2, t2, w, 1.0, opts);
    ok = rel_diff(r.lambda, oracle) <= 0.01;
    return "lambda " + fmt(r.lambda) + " oracle " + fmt(oracle);
  });

  c.check("homogeneity_t3", [&](bool& ok) {
    double lo = 1e300, hi = 0.0;
    for (double a : {0.1, 1.0, 10.0}) {
      const double l = minimize_critical_value(d1, t3, w1, a, opts).lambda;
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    ok = hi <= lo * 1.02;
    return "lambda in [" + fmt(lo) + ", " + fmt(hi) + "]";
  });

  c.check("monotone_energy", [&](bool& ok) {
    const auto curve = alpha_energy(d1, pq, w1, {0.25, 1.0, 4.0}, opts);
    ok = curve.monotone;
    std::string detail;
    for (const auto& s : curve.samples) detail += fmt(s.energy) + " ";
    return detail;
  });

  for (const auto& f : {t2, pq, plog}) {
    c.check("sandwich_" + f.name(), [&](bool& ok) {
      const double pA = classify_doubling(f).pA_plus;
      const auto r = minimize_critical_value(d1, f, w1, 1.0, opts);
      const Interval iv = eigenvalue_interval(r.lambda, ExtendedReal(pA));
      ok = r.Lambda >= iv.lo * 0.99 && r.Lambda <= iv.hi * 1.01;
      return "Lambda " + fmt(r.Lambda) + " lambda " + fmt(r.lambda) + " pA " + fmt(pA);
    });
  }

  c.check("domain_inclusion", [&](bool& ok) {
    const auto sub = geometry(DomainSpec::interval(0.25, 0.75, 1.0 / 32));
    const Discretization ds(sub, 0.5);
    const double big = minimize_critical_value(d1, pq, w1, 1.0, opts).lambda;
    const double small = minimize_critical_value(ds, pq, constant_weight(*sub, 1.0), 1.0, opts).lambda;
    ok = big <= small * 1.02;
    return fmt(big) + " <= " + fmt(small);
  });

  c.check("equimeasurable_interval", [&](bool& ok) {
    const auto split = geometry(DomainSpec::intervals({{0.0, 0.5}, {1.0, 1.5}}, 1.0 / 32));
    const Discretization ds(split, 0.5);
    const double ball = minimize_critical_value(d1, t2, w1, 1.0, opts).lambda;
    const double other = minimize_critical_value(ds, t2, constant_weight(*split, 1.0), 1.0, opts).lambda;
    ok = ball <= other * 1.02;
    return fmt(ball) + " <= " + fmt(other);
  });

  c.check("descent_monotone", [&](bool& ok) {
    SolverOptions o = opts;
    o.keep_history = true;
    o.eigen_start = false;
    const auto r = minimize_critical_value(d1, pq, w1, 1.0, o);
    std::size_t steps = 0;
    for (const auto& s : r.starts)
      for (std::size_t i = 1; i < s.history.size(); ++i, ++steps)
        if (s.history[i] > s.history[i - 1] * (1.0 + 1e-12)) ok = false;
    return std::to_string(steps) + " accepted steps";
  });

  c.check("seeded_random_starts", [&](bool& ok) {
    SolverOptions o = opts;
    o.random_starts = 2;
    const auto a = minimize_critical_value(d1, pq, w1, 1.0, o);
    const auto b = minimize_critical_value(d1, pq, w1, 1.0, o);
    ok = a.lambda == b.lambda && a.starts.size() == b.starts.size();
    for (const auto& s : a.starts) ok = ok && a.lambda <= s.lambda;
    return "lambda " + fmt(a.lambda) + " over " + std::to_string(a.starts.size()) + " starts";
  });

  const auto probes = probe_suite(line);
  c.check("normalize_residual", [&](bool& ok) {
    double worst = 0.0;
    for (const auto& p : probes) {
      const auto nz = normalize_to_alpha(p.u, pq, w1, 0.3);
      worst = std::max(worst, std::abs(weighted_modular(nz.u, pq, w1) - 0.3) / 0.3);
    }
    ok = worst <= 1e-10;
    return "max rel residual " + fmt(worst);
  });

  c.check("luxemburg_identities", [&](bool& ok) {
    const GridFunction& u = probes.front().u;
    const double h = line->h;
    double p3 = 0.0;
    for (double v : u.values) p3 += std::pow(std::abs(v), 3) * h;
    const double n3 = luxemburg_norm(u, t3);
    GridFunction u3 = u;
    for (double& v : u3.values) v *= 3.0;
    const double unit = luxemburg_norm(normalize_to_alpha(u, pq, constant_weight(*line, 1.0), 1.0).u, pq);
    ok = rel_diff(n3, std::cbrt(p3)) <= 1e-9 && rel_diff(luxemburg_norm(u3, pq), 3.0 * luxemburg_norm(u, pq)) <= 1e-9 &&
         std::abs(unit - 1.0) <= 1e-9 && luxemburg_norm(GridFunction::zeros(line), pq) == 0.0;
    return "p-norm " + fmt(n3) + ", unit-modular norm " + fmt(unit);
  });

  c.check("morrey_witness", [&](bool& ok) {
    const auto t4 = YoungFunction::power(4.0);
    const Discretization d(line, 0.75);
    const auto& u = probes.front().u;
    GridFunction neg = u;
    for (double& v : neg.values) v = -v;
    const double a = morrey_ratio(d, u, t4), b = morrey_ratio(d, neg, t4);
    ok = std::isfinite(a) && a > 0.0 && rel_diff(a, b) <= 1e-12 && morrey_ratio(d, GridFunction::zeros(line), t4) == 0.0;
    return "ratio " + fmt(a);
  });

  c.check("hardy_witnesses", [&](bool& ok) {
    const auto sym = geometry(DomainSpec::interval(-0.5, 0.5, 1.0 / 32));
    const auto moved = geometry(DomainSpec::interval(2.5, 3.5, 1.0 / 32));
    const Discretization ds(sym, 0.4), dm(moved, 0.4);
    double worst = 0.0;
    const auto ps = probe_suite(sym), pm = probe_suite(moved);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const double a = hardy_ratio(ds, ps[k].u, t2, HardyVariant::boundary);
      const double b = hardy_ratio(dm, pm[k].u, t2, HardyVariant::boundary);
      const double o = hardy_ratio(ds, ps[k].u, t2, HardyVariant::origin);
      ok = ok && std::isfinite(a) && std::isfinite(o);
      worst = std::max(worst, rel_diff(a, b));
    }
    ok = ok && worst <= 1e-9 && hardy_ratio(ds, GridFunction::zeros(sym), t2, HardyVariant::boundary) == 0.0;
    bool threw = false;
    try {
      hardy_ratio(dm, pm.front().u, t2, HardyVariant::origin);
    } catch (const Error&) {
      threw = true;
    }
    ok = ok && threw;
    return "translation drift " + fmt(worst);
  });
}

VerifyReport run_verify_suites(std::uint64_t seed, const std::optional<YoungFunction>& extra) {
  VerifyReport r;
  r.seed = seed;
  auto catalog = verify_catalog();
  if (extra) catalog.push_back(*extra);
  for (const auto& f : catalog) verify_young(f, r.checks);
  for (const auto& f : catalog) verify_matuszewska(f, r.checks);
  verify_bounds(r.checks);
  verify_domain(r.checks);
  verify_spectral(seed, r.checks);
  return r;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"seed", r.seed},
          {"checks", checks},
          {"total", r.checks.size()},
          {"failures", r.failures()},
          {"passed", r.all_passed()}};
}

}  // namespace orlicz
