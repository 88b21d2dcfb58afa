// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unistd.h>

#include "orlicz/bounds.hpp"
#include "orlicz/domain.hpp"
#include "orlicz/matuszewska.hpp"
#include "orlicz/spectral.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::shared_ptr<const DomainGeometry> make(const DomainSpec& s) {
  return std::make_shared<const DomainGeometry>(build_domain(s));
}

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double generalized_min_eigenvalue(const Discretization& d, const Weight& w) {
  const auto k = d.quadratic_kernel();
  const auto N = static_cast<Eigen::Index>(d.size());
  const Eigen::MatrixXd K = Eigen::Map<const Eigen::MatrixXd>(k.data(), N, N);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) M(i, i) = w.values[static_cast<std::size_t>(i)] * d.domain().cell_volume();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

const DomainSpec kUnitInterval = DomainSpec::interval(0.0, 1.0, 1.0 / 64);

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> ts = {0.25, 0.5, 2.0, 4.0};
  struct Case {
    const char* name;
    YoungFunction f;
    std::function<double(double)> M, M0, Minf;  // +inf encoded as HUGE_VAL
    double i, i0, iinf;
  };
  const double inf = HUGE_VAL;
  const std::vector<Case> cases = {
      {"p_q(2,3)", YoungFunction::p_q(2.0, 3.0), [](double t) { return std::max(t * t, t * t * t); },
       [](double t) { return t * t; }, [](double t) { return t * t * t; }, 3.0, 2.0, 3.0},
      {"p_log(2,1,1)", YoungFunction::p_log(2.0, 1.0, 1.0), [](double t) { return std::max(t * t, t * t * t); },
       [](double t) { return t * t * t; }, [](double t) { return t * t; }, 3.0, 3.0, 2.0},
      {"exp_taylor(2)", YoungFunction::exp_taylor(2), [&](double t) { return t <= 1.0 ? t * t : inf; },
       [](double t) { return t * t; }, [&](double t) { return t < 1.0 ? 0.0 : inf; }, inf, 2.0, inf},
  };
  auto match = [&](const std::string& what, const ExtendedReal& got, double want) {
    if (std::isinf(want)) {
      o.require(got.is_infinite(), what + " expected inf, got " + to_string(got));
    } else if (want == 0.0) {
      o.require(!got.is_infinite() && got.value() <= 1e-12, what + " expected 0, got " + to_string(got));
    } else {
      o.require(!got.is_infinite() && rel(got.value(), want) <= 0.05,
                what + " = " + to_string(got) + " vs " + num(want));
    }
  };
  for (const auto& c : cases) {
    for (double t : ts) {
      const std::string at = std::string(c.name) + " t=" + num(t);
      match(at + " M", matuszewska_sup(c.f, t, Method::numeric), c.M(t));
      match(at + " M0", matuszewska_limit(c.f, t, LimitEnd::zero, Method::numeric).value, c.M0(t));
      match(at + " Minf", matuszewska_limit(c.f, t, LimitEnd::infinity, Method::numeric).value, c.Minf(t));
    }
    auto index = [&](const char* label, IndexKind k, double want) {
      const ExtendedReal got = matuszewska_index(c.f, k, Method::numeric);
      const std::string what = std::string(c.name) + " " + label;
      if (std::isinf(want))
        o.require(got.is_infinite(), what + " expected inf, got " + to_string(got));
      else
        o.require(!got.is_infinite() && std::abs(got.value() - want) <= 0.05,
                  what + " = " + to_string(got) + " vs " + num(want));
    };
    index("i", IndexKind::global, c.i);
    index("i0", IndexKind::zero, c.i0);
    index("iinf", IndexKind::infinity, c.iinf);
  }
  // Double exponential: i and i_inf infinite.
  const auto de = YoungFunction::double_exp();
  o.require(matuszewska_index(de, IndexKind::global, Method::numeric).is_infinite(), "double_exp i not infinite");
  o.require(matuszewska_index(de, IndexKind::infinity, Method::numeric).is_infinite(), "double_exp iinf not infinite");
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "runtime " + num(secs) + " s");
  if (o.pass) o.detail << "36 function values and 11 indices match; " << num(secs) << " s";
}

void criterion2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<const char*, YoungFunction>> kinds = {
      {"t^1.5", YoungFunction::power(1.5)},
      {"t^2", YoungFunction::power(2.0)},
      {"t^3", YoungFunction::power(3.0)},
      {"p_q(2,3)", YoungFunction::p_q(2.0, 3.0)},
      {"p_log(2,1,1)", YoungFunction::p_log(2.0, 1.0, 1.0)}};
  double worst_bi = 0.0;
  int probes = 0;
  for (const auto& [name, f] : kinds) {
    const auto g = conjugate(f);
    const auto gg = conjugate(g);
    for (int k = 0; k < 60; ++k) {
      const double t = 1e-6 * std::pow(1e12, k / 59.0);
      const double x = inverse(f, t) * inverse(g, t);
      o.require(x >= t - 1e-6 * t && x <= 2.0 * t + 1e-6 * t,
                std::string(name) + " sandwich at t=" + num(t) + ": " + num(x / t) + "t");
      const double b = rel(gg.A(t), f.A(t));
      worst_bi = std::max(worst_bi, b);
      o.require(b <= 1e-6, std::string(name) + " biconjugate at t=" + num(t) + " rel " + num(b));
      ++probes;
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "runtime " + num(secs) + " s");
  if (o.pass) o.detail << probes << " probes; worst biconjugation error " << num(worst_bi) << "; " << num(secs) << " s";
}

void criterion3(Outcome& o) {
  const auto g = make(kUnitInterval);
  const auto w = constant_weight(*g, 1.0);
  const auto t2 = YoungFunction::power(2.0);
  o.require(g->size() == 64, "node count " + std::to_string(g->size()));
  for (double s : {0.4, 0.7}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Discretization d(g, s);
    const double mu = generalized_min_eigenvalue(d, w);
    const auto r = minimize_critical_value(d, t2, w, 1.0);
    const double secs = seconds_since(t0);
    const double e1 = rel(r.lambda, mu), e2 = rel(r.Lambda, r.lambda);
    o.require(e1 <= 0.01, "s=" + num(s) + " lambda " + num(r.lambda) + " vs eigenvalue " + num(mu));
    o.require(e2 <= 1e-8, "s=" + num(s) + " Lambda/lambda rel " + num(e2));
    o.require(secs < 60.0, "s=" + num(s) + " runtime " + num(secs) + " s");
    if (o.pass)
      o.detail << "s=" << num(s) << ": lambda " << num(r.lambda) << " rel " << num(e1) << ", Lambda rel " << num(e2)
               << ", " << num(secs) << " s; ";
  }
}

void criterion4(Outcome& o) {
  const auto g = make(kUnitInterval);
  const auto w = constant_weight(*g, 1.0);
  const Discretization d(g, 0.5);
  for (double p : {2.0, 3.0}) {
    const auto f = YoungFunction::power(p);
    std::vector<double> lams;
    for (double a : {0.1, 1.0, 10.0}) lams.push_back(minimize_critical_value(d, f, w, a).lambda);
    const auto [lo, hi] = std::minmax_element(lams.begin(), lams.end());
    const double spread = (*hi - *lo) / *lo;
    o.require(spread <= 0.02, "p=" + num(p) + " spread " + num(spread));
    if (o.pass) o.detail << "p=" << num(p) << " spread " << num(spread) << "; ";
  }
}

void criterion5(Outcome& o) {
  const auto g = make(kUnitInterval);
  const auto w = constant_weight(*g, 1.0);
  const Discretization d(g, 0.5);
  const auto f = YoungFunction::p_q(2.0, 3.0);
  const auto curve = alpha_energy(d, f, w, {0.25, 0.5, 1.0, 2.0, 4.0, 8.0});
  for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i)
    o.require(curve.samples[i + 1].energy > curve.samples[i].energy,
              "E not increasing at alpha=" + num(curve.samples[i + 1].alpha));
  const auto a0 = solve_alpha0(d, f, w);
  // Re-solve at alpha0 independently of the root finder's bookkeeping.
  const double target = std::pow(g->r_omega, d.n());
  const double E = a0.alpha0 * minimize_critical_value(d, f, w, a0.alpha0).lambda;
  const double res = std::abs(E - target);
  o.require(res <= 1e-3 * target, "|E(alpha0) - r^n| = " + num(res) + " vs target " + num(target));
  if (o.pass) {
    o.detail << "E:";
    for (const auto& s : curve.samples) o.detail << " " << num(s.energy);
    o.detail << "; alpha0 " << num(a0.alpha0) << ", relative residual " << num(res / target);
  }
}

void criterion6(Outcome& o) {
  const auto g = make(kUnitInterval);
  const auto w = constant_weight(*g, 1.0);
  const Discretization d(g, 0.5);
  for (const auto& [name, f] : std::vector<std::pair<const char*, YoungFunction>>{
           {"t^2", YoungFunction::power(2.0)},
           {"p_q(2,3)", YoungFunction::p_q(2.0, 3.0)},
           {"p_log(2,1,1)", YoungFunction::p_log(2.0, 1.0, 1.0)}}) {
    const double pA = classify_doubling(f).pA_plus;
    const auto r = minimize_critical_value(d, f, w, 1.0);
    const double lo = r.lambda / pA * 0.99, hi = pA * r.lambda * 1.01;
    o.require(std::isfinite(pA) && r.Lambda >= lo && r.Lambda <= hi,
              std::string(name) + " Lambda " + num(r.Lambda) + " outside [" + num(lo) + ", " + num(hi) + "]");
    if (o.pass) o.detail << name << ": Lambda/lambda " << num(r.Lambda / r.lambda) << " (pA " << num(pA) << "); ";
  }
}

void criterion7(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto f = YoungFunction::power(2.0);
  const Order order{2, 0.4};
  std::vector<double> radii, lams;
  std::vector<std::shared_ptr<const DomainGeometry>> geos;
  for (double R : {0.5, 1.0, 2.0}) {
    const auto g = make(DomainSpec::disc(0.0, 0.0, R, 2.0 * R / 24));
    const Discretization d(g, order.s);
    const auto r = minimize_critical_value(d, f, constant_weight(*g, 1.0), 1.0);
    o.require(r.converged, "solver nonconvergent at R=" + num(R));
    radii.push_back(g->r_omega);
    lams.push_back(r.lambda);
    geos.push_back(g);
  }
  const double slope = loglog_slope(radii, lams);
  const double want = -order.s * 2.0;
  o.require(std::abs(slope - want) <= 0.1 * std::abs(want), "slope " + num(slope) + " vs " + num(want));

  const auto unit = bound_inradius_delta2(f, order, radii[1], 1.0);
  const double C = calibrate_linear(unit, lams[1]);
  bool applicable = unit.applicable;
  for (std::size_t k : {0u, 2u}) {
    const auto b = bound_inradius_delta2(f, order, radii[k], 1.0, C);
    applicable = applicable || b.applicable;
    // Both sides are exactly covariant under scaling, so equality holds up to rounding.
    o.require(b.value <= lams[k] * (1.0 + 1e-12),
              "calibrated bound " + num(b.value) + " exceeds lambda " + num(lams[k]) + " at r=" + num(radii[k]));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 600.0, "runtime " + num(secs) + " s");
  if (o.pass)
    o.detail << "slope " << num(slope) << "; C " << num(C) << "; bound/lambda - 1 at r=" << num(radii[0]) << ": "
             << num(bound_inradius_delta2(f, order, radii[0], 1.0, C).value / lams[0] - 1.0) << ", r=" << num(radii[2])
             << ": " << num(bound_inradius_delta2(f, order, radii[2], 1.0, C).value / lams[2] - 1.0)
             << "; inradius bound applicable=" << (applicable ? "true" : "false") << "; " << num(secs) << " s";
}

void criterion8(Outcome& o) {
  const auto f = YoungFunction::power(4.0);
  const Order order{1, 0.75};
  o.require(check_conditions(f, order).cond1 == Verdict::holds, "cond1 does not hold");
  std::vector<double> radii, lams, l1s;
  std::vector<AlphaRegime> regimes;
  for (double L : {0.5, 1.0, 2.0}) {
    const auto g = make(DomainSpec::interval(0.0, L, L / 64));
    const Discretization d(g, order.s);
    const auto w = unit_mass_weight(*g);
    const auto r = minimize_critical_value(d, f, w, 1.0);
    o.require(r.converged, "solver nonconvergent at L=" + num(L));
    radii.push_back(g->r_omega);
    lams.push_back(r.lambda);
    l1s.push_back(w.l1);
    const double a0 = solve_alpha0(d, f, w).alpha0;
    regimes.push_back(1.0 < a0 ? AlphaRegime::below_alpha0 : AlphaRegime::above_alpha0);
  }
  const double slope = loglog_slope(radii, lams);
  const double want = order.n - order.s * 4.0;
  o.require(std::abs(slope - want) <= 0.1 * std::abs(want), "slope " + num(slope) + " vs " + num(want));

  const auto unit = bound_thm1(f, order, radii[1], l1s[1], regimes[1]);
  const double C = calibrate_linear(unit, lams[1]);
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto b = bound_thm1(f, order, radii[k], l1s[k], regimes[k], C);
    worst = std::max(worst, b.value / lams[k]);
    o.require(b.value <= lams[k] * (1.0 + 1e-12),
              "calibrated thm1 " + num(b.value) + " exceeds lambda " + num(lams[k]) + " at r=" + num(radii[k]));
    const double t1 = bound_thm1(f, order, radii[k], l1s[k], regimes[k]).value;
    const double t2 = bound_thm2_inverse(f, order, radii[k], l1s[k], 1.0, regimes[k]).value;
    o.require(rel(t1, t2) <= 1e-8, "thm1 " + num(t1) + " vs thm2_inverse " + num(t2));
  }
  if (o.pass) o.detail << "slope " << num(slope) << "; C " << num(C) << "; max bound/lambda - 1 " << num(worst - 1.0);
}

void criterion9(Outcome& o) {
  const auto f = YoungFunction::p_q(2.0, 3.0);
  const double h = 1.0 / 64;
  auto lambda_on = [&](const DomainSpec& s) {
    const auto g = make(s);
    const Discretization d(g, 0.5);
    return minimize_critical_value(d, f, constant_weight(*g, 1.0), 1.0).lambda;
  };
  const double full = lambda_on(DomainSpec::interval(0.0, 1.0, h));
  const double half = lambda_on(DomainSpec::interval(0.25, 0.75, h));
  o.require(half >= 1.05 * full, "sub-interval " + num(half) + " vs full " + num(full));
  if (o.pass) o.detail << "ratio " << num(half / full);
}

// All 15 witness ratios on the unit disc at spacing 1/k: Morrey (t⁴, s=3/4),
// Hardy at the origin (t², s=0.4) and at the boundary (t², s=0.6).
std::vector<std::pair<std::string, double>> witness_ratios(int k) {
  const auto g = make(DomainSpec::disc(0.0, 0.0, 1.0, 1.0 / k));
  const auto probes = probe_suite(g);
  const auto t2 = YoungFunction::power(2.0), t4 = YoungFunction::power(4.0);
  const Discretization morrey(g, 0.75), origin(g, 0.4), boundary(g, 0.6);
  std::vector<std::pair<std::string, double>> out;
  for (const auto& p : probes) {
    out.emplace_back("morrey " + p.name, morrey_ratio(morrey, p.u, t4));
    out.emplace_back("hardy_origin " + p.name, hardy_ratio(origin, p.u, t2, HardyVariant::origin));
    out.emplace_back("hardy_boundary " + p.name, hardy_ratio(boundary, p.u, t2, HardyVariant::boundary));
  }
  return out;
}

void criterion10(Outcome& o) {
  const auto r12 = witness_ratios(12), r24 = witness_ratios(24), r48 = witness_ratios(48);
  double worst = 0.0, coarse = 0.0;
  std::string coarse_at;
  for (std::size_t k = 0; k < r24.size(); ++k) {
    const double a = r24[k].second, b = r48[k].second;
    const double drift = rel(a, b);
    worst = std::max(worst, drift);
    o.require(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0 && drift <= 0.1,
              r24[k].first + " " + num(a) + " -> " + num(b));
    const double c = rel(r12[k].second, a);
    if (c > coarse) {
      coarse = c;
      coarse_at = r12[k].first;
    }
  }
  if (o.pass)
    o.detail << r24.size() << " witness ratios finite; worst drift h=1/24 -> 1/48 " << num(worst)
             << "; for reference h=1/12 -> 1/24 " << num(coarse) << " (" << coarse_at << ")";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion11(Outcome& o) {
  const auto base = std::filesystem::temp_directory_path() / ("orlicz_acceptance_" + std::to_string(::getpid()));
  std::vector<std::string> reports;
  for (const char* run : {"a", "b"}) {
    const auto dir = base / run;
    const std::string cmd = std::string("'") + ORLICZ_CLI_PATH + "' verify --seed 11 --no-timestamp --out '" +
                            dir.string() + "' > /dev/null";
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, std::string("verify run ") + run + " exited with status " + std::to_string(rc));
    reports.push_back(slurp(dir / "verify.json"));
  }
  std::filesystem::remove_all(base);
  o.require(!reports[0].empty(), "empty report");
  o.require(reports[0] == reports[1], "reports differ");
  if (o.pass) o.detail << "verify.json identical (" << reports[0].size() << " bytes)";
}

}  // namespace

int main() {
  const std::vector<void (*)(Outcome&)> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::string detail = o.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::printf("criterion %zu: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
