#include "orlicz/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

namespace orlicz {

using nlohmann::json;

json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json to_json(const ExtendedReal& x) { return x.is_infinite() ? json("inf") : json_number(x.value()); }

namespace {

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(json_number(x));
  return out;
}

json extended(const std::vector<ExtendedReal>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

json to_json(const YoungFunction& f) {
  json params = json::object();
  for (const auto& [k, v] : f.params()) params[k] = json_number(v);
  return {{"kind", to_string(f.kind())}, {"name", f.name()}, {"params", params}};
}

json to_json(const DoublingClass& d) {
  return {{"delta2_zero", d.delta2_zero},     {"C0", json_number(d.C0)},
          {"delta2_inf", d.delta2_inf},       {"Cinf", json_number(d.Cinf)},
          {"delta2_global", d.delta2_global}, {"pA_plus", json_number(d.pA_plus)},
          {"pA_minus", json_number(d.pA_minus)}, {"analytic", d.analytic}};
}

json to_json(const MatuszewskaProfile& p) {
  return {{"t", numbers(p.t_grid)},
          {"M", extended(p.M)},
          {"M0", extended(p.M0)},
          {"Minf", extended(p.Minf)},
          {"i", to_json(p.i)},
          {"i0", to_json(p.i0)},
          {"iinf", to_json(p.iinf)},
          {"converged_zero", p.converged_zero},
          {"converged_inf", p.converged_inf}};
}

json to_json(const GrowthConditions& g) {
  return {{"cond1", to_string(g.cond1)},
          {"cond2", to_string(g.cond2)},
          {"cond3", to_string(g.cond3)},
          {"slopes_inf", numbers(g.slopes_inf)},
          {"slopes_zero", numbers(g.slopes_zero)},
          {"cond3_slopes_inf", numbers(g.cond3_slopes_inf)},
          {"cond3_slopes_zero", numbers(g.cond3_slopes_zero)},
          {"partial_sums_inf", numbers(g.partial_sums_inf)},
          {"partial_sums_zero", numbers(g.partial_sums_zero)}};
}

json to_json(const BoundReport& b) {
  json inputs = {{"n", b.inputs.order.n},
                 {"s", json_number(b.inputs.order.s)},
                 {"length", json_number(b.inputs.length)},
                 {"weight_norm", json_number(b.inputs.weight_norm)}};
  if (b.inputs.alpha) inputs["alpha"] = json_number(*b.inputs.alpha);
  if (b.inputs.regime) inputs["regime"] = to_string(*b.inputs.regime);
  return {{"theorem", to_string(b.theorem)},
          {"value", json_number(b.value)},
          {"calibration_C", json_number(b.calibration_C)},
          {"applicable", b.applicable},
          {"reasons", b.reasons},
          {"inputs", inputs}};
}

json to_json(const DomainGeometry& g) {
  return {{"dim", g.dim},
          {"h", json_number(g.h)},
          {"nodes", g.size()},
          {"r_omega", json_number(g.r_omega)},
          {"d_omega", json_number(g.d_omega)},
          {"measure", json_number(g.measure)},
          {"bbox", g.dim == 1 ? numbers({g.bbox[0], g.bbox[1]}) : numbers({g.bbox[0], g.bbox[1], g.bbox[2], g.bbox[3]})}};
}

json to_json(const CriticalValueResult& r) {
  json starts = json::array();
  for (const auto& s : r.starts)
    starts.push_back({{"name", s.name},
                      {"lambda", json_number(s.lambda)},
                      {"iterations", s.iterations},
                      {"converged", s.converged}});
  return {{"alpha", json_number(r.alpha)},
          {"lambda", json_number(r.lambda)},
          {"Lambda", json_number(r.Lambda)},
          {"iterations", r.iterations},
          {"restarts", r.restarts},
          {"converged", r.converged},
          {"constraint_residual", json_number(r.constraint_residual)},
          {"best_start", r.best_start},
          {"starts", starts}};
}

json to_json(const EnergyCurve& e) {
  json samples = json::array();
  for (const auto& s : e.samples)
    samples.push_back({{"alpha", json_number(s.alpha)},
                       {"energy", json_number(s.energy)},
                       {"lambda", json_number(s.lambda)},
                       {"converged", s.converged}});
  return {{"samples", samples}, {"monotone", e.monotone}, {"violations", e.violations}};
}

json to_json(const Alpha0Result& a) {
  return {{"alpha0", json_number(a.alpha0)},
          {"energy", json_number(a.energy)},
          {"target", json_number(a.target)},
          {"residual", json_number(a.residual)},
          {"evaluations", a.evaluations}};
}

std::string finalize_report(json body, bool timestamp) {
  body["schema_version"] = kSchemaVersion;
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    body["generated_at"] = buf;
  }
  return body.dump(2) + "\n";
}

}  // namespace orlicz
