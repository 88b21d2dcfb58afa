#include "orlicz/runner.hpp"

#include <cmath>
#include <functional>
#include <locale>
#include <memory>
#include <sstream>

#include "orlicz/matuszewska.hpp"
#include "orlicz/report.hpp"
#include "orlicz/spectral.hpp"
#include "orlicz/verify.hpp"

namespace orlicz {

namespace {

using nlohmann::json;

[[noreturn]] void missing(const std::string& field, Subcommand cmd) {
  throw Error(ErrorCode::config, field + ": required for " + to_string(cmd));
}

template <class T>
const T& need(const std::optional<T>& v, const char* field, Subcommand cmd) {
  if (!v) missing(field, cmd);
  return *v;
}

Order order_of(const RunConfig& c, Subcommand cmd) {
  Order o{need(c.n, "n", cmd), need(c.s, "s", cmd)};
  o.validate();
  return o;
}

std::shared_ptr<const DomainGeometry> geometry_of(const RunConfig& c, Subcommand cmd) {
  const DomainSpec& spec = need(c.domain, "domain", cmd);
  try {
    return std::make_shared<const DomainGeometry>(build_domain(spec));
  } catch (const Error& e) {
    throw Error(ErrorCode::config, std::string("domain: ") + e.what());
  }
}

Weight weight_of(const RunConfig& c, const DomainGeometry& g) {
  switch (c.omega.kind) {
    case OmegaSpec::Kind::unit_mass:
      return unit_mass_weight(g);
    case OmegaSpec::Kind::file:
      try {
        return load_weight_file(g, c.omega.path);
      } catch (const Error& e) {
        throw Error(ErrorCode::config, std::string("omega.file: ") + e.what());
      }
    case OmegaSpec::Kind::constant:
    default:
      return constant_weight(g, c.omega.c);
  }
}

SolverOptions solver_options(const RunConfig& c, const RunOptions& opts) {
  SolverOptions s;
  s.max_iterations = c.solver.max_iterations;
  s.rel_tol = c.solver.rel_tol;
  s.random_starts = c.solver.random_starts;
  s.seed = opts.seed.value_or(c.seed);
  return s;
}

std::string csv_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  return os.str();
}

json order_json(const Order& o) { return {{"n", o.n}, {"s", json_number(o.s)}}; }

RunResult run_analyze(const RunConfig& c, const RunOptions& opts) {
  const Subcommand cmd = Subcommand::analyze;
  const YoungFunction& f = need(c.young, "young", cmd);
  const Order order = order_of(c, cmd);
  const auto profile = matuszewska_profile(f, default_profile_grid());
  const auto doubling = classify_doubling(f);
  const auto conditions = check_conditions(f, order);

  json body = {{"subcommand", "analyze"},
               {"young", to_json(f)},
               {"order", order_json(order)},
               {"doubling", to_json(doubling)},
               {"matuszewska", to_json(profile)},
               {"conditions", to_json(conditions)}};
  RunResult r;
  r.files.push_back({"analyze.json", finalize_report(std::move(body), opts.timestamp)});
  r.files.push_back({"matuszewska.csv", profile_csv(profile)});
  r.summary = f.name() + ": i0=" + to_string(profile.i0) + " iinf=" + to_string(profile.iinf) +
              " cond1=" + to_string(conditions.cond1) + " cond2=" + to_string(conditions.cond2) +
              " cond3=" + to_string(conditions.cond3);
  return r;
}

json bound_entry(const std::function<BoundReport()>& make) {
  try {
    return to_json(make());
  } catch (const Error& e) {
    return {{"applicable", false}, {"error", std::string(to_string(e.code())) + ": " + e.what()}};
  }
}

RunResult run_bound(const RunConfig& c, const RunOptions& opts) {
  const Subcommand cmd = Subcommand::bound;
  const YoungFunction& f = need(c.young, "young", cmd);
  const auto g = geometry_of(c, cmd);
  const Order order = order_of(c, cmd);
  const Weight w = weight_of(c, *g);
  const double alpha = c.alpha.empty() ? 1.0 : c.alpha.front();
  const double C = c.calibration_C;

  json body = {{"subcommand", "bound"}, {"young", to_json(f)}, {"order", order_json(order)}, {"domain", to_json(*g)},
               {"omega_l1", json_number(w.l1)}, {"omega_linf", json_number(w.linf)}, {"alpha", json_number(alpha)},
               {"calibration_C", json_number(C)}};

  AlphaRegime regime = AlphaRegime::below_alpha0;
  if (c.regime) {
    regime = *c.regime;
  } else {
    const Discretization disc(g, order.s);
    const auto a0 = solve_alpha0(disc, f, w, solver_options(c, opts));
    body["alpha0"] = to_json(a0);
    regime = alpha < a0.alpha0 ? AlphaRegime::below_alpha0 : AlphaRegime::above_alpha0;
  }
  body["regime"] = to_string(regime);

  const auto reports = [&](double scale) {
    const double r = g->r_omega * scale, d = g->d_omega * scale;
    return std::vector<std::function<BoundReport()>>{
        [&, r] { return bound_thm1(f, order, r, w.l1, regime, C); },
        [&, r] { return bound_thm2_inverse(f, order, r, w.l1, alpha, regime, C); },
        [&, d] { return bound_diameter(f, order, d, w.linf, C); },
        [&, r] { return bound_inradius_delta2(f, order, r, w.linf, C); }};
  };

  json bounds = json::array();
  for (const auto& make : reports(1.0)) bounds.push_back(bound_entry(make));
  body["bounds"] = bounds;

  const DoublingClass dc = classify_doubling(f);
  if (dc.delta2_global && std::isfinite(dc.pA_plus)) {
    json eig = json::array();
    for (const auto& make : reports(1.0))
      eig.push_back(bound_entry([&] { return rescale_for_eigenvalue(make(), ExtendedReal(dc.pA_plus)); }));
    body["eigenvalue_bounds"] = eig;
  }

  std::string csv = "scale,r_omega,d_omega,thm1,thm2_inverse,thm2_diameter,thm4_inradius\n";
  for (double scale : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    csv += csv_number(scale) + "," + csv_number(g->r_omega * scale) + "," + csv_number(g->d_omega * scale);
    for (const auto& make : reports(scale)) {
      double v = std::nan("");
      try {
        v = make().value;
      } catch (const Error&) {
      }
      csv += "," + csv_number(v);
    }
    csv += "\n";
  }

  std::size_t applicable = 0;
  for (const auto& b : bounds) applicable += b.value("applicable", false) ? 1 : 0;
  RunResult out;
  out.files.push_back({"bound.json", finalize_report(std::move(body), opts.timestamp)});
  out.files.push_back({"bound_sweep.csv", std::move(csv)});
  out.summary = std::to_string(applicable) + " of 4 bounds applicable";
  return out;
}

RunResult run_solve(const RunConfig& c, const RunOptions& opts) {
  const Subcommand cmd = Subcommand::solve;
  const YoungFunction& f = need(c.young, "young", cmd);
  const auto g = geometry_of(c, cmd);
  const Order order = order_of(c, cmd);
  const Weight w = weight_of(c, *g);
  const Discretization disc(g, order.s);
  const SolverOptions so = solver_options(c, opts);
  const std::vector<double> alphas = c.alpha.empty() ? std::vector<double>{1.0} : c.alpha;

  json body = {{"subcommand", "solve"},        {"young", to_json(f)},  {"order", order_json(order)},
               {"domain", to_json(*g)},        {"seed", so.seed},      {"omega_l1", json_number(w.l1)},
               {"omega_linf", json_number(w.linf)}};
  RunResult out;
  bool converged = true;
  json results = json::array();
  EnergyCurve curve;
  std::string energy_csv = "alpha,lambda,Lambda,energy,converged\n";
  const DoublingClass dc = classify_doubling(f);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const auto r = minimize_critical_value(disc, f, w, alphas[k], so);
    converged = converged && r.converged;
    json jr = to_json(r);
    const std::string file = alphas.size() == 1 ? "minimizer.csv" : "minimizer_" + std::to_string(k) + ".csv";
    jr["minimizer_file"] = file;
    if (dc.delta2_global && std::isfinite(dc.pA_plus)) {
      const Interval iv = eigenvalue_interval(r.lambda, ExtendedReal(dc.pA_plus));
      jr["eigenvalue_interval"] = {json_number(iv.lo), json_number(iv.hi)};
    }
    results.push_back(std::move(jr));
    out.files.push_back({file, grid_function_csv(r.minimizer)});
    curve.samples.push_back({r.alpha, r.alpha * r.lambda, r.lambda, r.converged});
    energy_csv += csv_number(r.alpha) + "," + csv_number(r.lambda) + "," + csv_number(r.Lambda) + "," +
                  csv_number(r.alpha * r.lambda) + "," + (r.converged ? "1" : "0") + "\n";
  }
  for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i)
    if (!(curve.samples[i + 1].energy > curve.samples[i].energy)) {
      curve.monotone = false;
      curve.violations.push_back(i);
    }
  body["results"] = results;
  body["energy"] = to_json(curve);

  if (c.alpha0) {
    try {
      body["alpha0"] = to_json(solve_alpha0(disc, f, w, so));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::nonconvergent && e.code() != ErrorCode::out_of_bracket) throw;
      body["alpha0"] = {{"error", std::string(to_string(e.code())) + ": " + e.what()}};
      converged = false;
    }
  }
  body["converged"] = converged;

  std::ostringstream summary;
  summary.precision(10);
  const char* sep = "";
  for (const auto& s : curve.samples) {
    summary << sep << "alpha=" << s.alpha << " lambda=" << s.lambda;
    sep = "; ";
  }
  if (body.contains("alpha0") && body["alpha0"].contains("alpha0")) summary << sep << "alpha0=" << body["alpha0"]["alpha0"];
  if (!converged) summary << " (nonconvergent)";
  out.summary = summary.str();
  out.exit_code = converged ? kExitOk : kExitNonconvergent;
  out.files.insert(out.files.begin(), {"solve.json", finalize_report(std::move(body), opts.timestamp)});
  out.files.push_back({"energy.csv", std::move(energy_csv)});
  return out;
}

RunResult run_verify(const RunConfig& c, const RunOptions& opts) {
  const std::uint64_t seed = opts.seed.value_or(c.seed);
  const VerifyReport report = run_verify_suites(seed, c.young);
  json body = to_json(report);
  body["subcommand"] = "verify";
  RunResult out;
  out.files.push_back({"verify.json", finalize_report(std::move(body), opts.timestamp)});
  std::ostringstream summary;
  summary << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed";
  for (const auto& ch : report.checks)
    if (!ch.passed) summary << "\nFAILED " << ch.suite << "/" << ch.name << ": " << ch.detail;
  out.summary = summary.str();
  out.exit_code = report.all_passed() ? kExitOk : kExitFailure;
  return out;
}

}  // namespace

const char* to_string(Subcommand c) noexcept {
  switch (c) {
    case Subcommand::analyze:
      return "analyze";
    case Subcommand::bound:
      return "bound";
    case Subcommand::solve:
      return "solve";
    case Subcommand::verify:
      return "verify";
  }
  return "?";
}

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (auto c : {Subcommand::analyze, Subcommand::bound, Subcommand::solve, Subcommand::verify})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

RunResult run(Subcommand command, const RunConfig& config, const RunOptions& options) {
  switch (command) {
    case Subcommand::analyze:
      return run_analyze(config, options);
    case Subcommand::bound:
      return run_bound(config, options);
    case Subcommand::solve:
      return run_solve(config, options);
    case Subcommand::verify:
    default:
      return run_verify(config, options);
  }
}

}  // namespace orlicz
