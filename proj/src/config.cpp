#include "orlicz/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace orlicz {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::config, path + ": " + reason);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) fail(join(path, it.key()), "unknown field");
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

double field(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(join(path, key), "missing");
  return number(j.at(key), join(path, key));
}

double field_or(const json& j, const std::string& path, const char* key, double fallback) {
  return j.contains(key) ? number(j.at(key), join(path, key)) : fallback;
}

double positive(double v, const std::string& path) {
  if (!(v > 0.0)) fail(path, "must be > 0");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string resolve(const std::string& base_dir, const std::string& file) {
  const std::filesystem::path p(file);
  if (p.is_absolute()) return file;
  return (std::filesystem::path(base_dir) / p).string();
}

std::vector<double> number_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Prefixes library and loader errors with the field path.
template <class F>
auto guarded(const std::string& path, F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

}  // namespace

YoungFunction load_tabulated_csv(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::io, "cannot open " + file);
  std::vector<double> t, a;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x = 0.0, y = 0.0;
    if (!(ls >> x >> y)) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw Error(ErrorCode::config, "tabulated csv: cannot parse '" + line + "'");
    }
    first = false;
    t.push_back(x);
    a.push_back(y);
  }
  return YoungFunction::tabulated_derivative(std::move(t), std::move(a));
}

YoungFunction parse_young(const json& j, const std::string& path, const std::string& base_dir) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) fail(join(path, "kind"), "expected a string");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") {
    only_keys(j, path, {"kind", "p", "c"});
    const double p = field(j, path, "p"), c = field_or(j, path, "c", 1.0);
    return guarded(path, [&] { return YoungFunction::power(p, c); });
  }
  if (kind == "p_q") {
    only_keys(j, path, {"kind", "p", "q"});
    const double p = field(j, path, "p"), q = field(j, path, "q");
    return guarded(path, [&] { return YoungFunction::p_q(p, q); });
  }
  if (kind == "p_log") {
    only_keys(j, path, {"kind", "p", "q", "r"});
    const double p = field(j, path, "p"), q = field(j, path, "q"), r = field(j, path, "r");
    return guarded(path, [&] { return YoungFunction::p_log(p, q, r); });
  }
  if (kind == "exp_taylor") {
    only_keys(j, path, {"kind", "k"});
    if (!j.contains("k")) fail(join(path, "k"), "missing");
    const int k = integer(j.at("k"), join(path, "k"));
    return guarded(path, [&] { return YoungFunction::exp_taylor(k); });
  }
  if (kind == "double_exp") {
    only_keys(j, path, {"kind"});
    return YoungFunction::double_exp();
  }
  if (kind == "exp_neg_power") {
    only_keys(j, path, {"kind", "r"});
    const double r = field(j, path, "r");
    return guarded(path, [&] { return YoungFunction::exp_neg_power(r); });
  }
  if (kind == "tabulated") {
    only_keys(j, path, {"kind", "csv", "t", "a"});
    if (j.contains("csv")) {
      if (!j.at("csv").is_string()) fail(join(path, "csv"), "expected a path");
      const std::string file = resolve(base_dir, j.at("csv").get<std::string>());
      return guarded(join(path, "csv"), [&] { return load_tabulated_csv(file); });
    }
    if (!j.contains("t")) fail(join(path, "t"), "missing (or give csv)");
    if (!j.contains("a")) fail(join(path, "a"), "missing (or give csv)");
    auto t = number_array(j.at("t"), join(path, "t"));
    auto a = number_array(j.at("a"), join(path, "a"));
    return guarded(path, [&] { return YoungFunction::tabulated_derivative(std::move(t), std::move(a)); });
  }
  fail(join(path, "kind"), "unknown kind '" + kind + "'");
}

DomainSpec parse_domain(const json& j, const std::string& path, const std::string& base_dir) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) fail(join(path, "kind"), "expected a string");
  const std::string kind = j.at("kind").get<std::string>();
  auto spacing = [&] { return positive(field(j, path, "h"), join(path, "h")); };
  DomainSpec spec;
  if (kind == "interval") {
    only_keys(j, path, {"kind", "a", "b", "h"});
    const double a = field(j, path, "a"), b = field(j, path, "b");
    if (!(a < b)) fail(join(path, "b"), "must exceed a");
    spec = DomainSpec::interval(a, b, spacing());
  } else if (kind == "intervals") {
    only_keys(j, path, {"kind", "parts", "h"});
    if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").empty())
      fail(join(path, "parts"), "expected a non-empty array of [a, b] pairs");
    std::vector<std::array<double, 2>> parts;
    for (std::size_t i = 0; i < j.at("parts").size(); ++i) {
      const std::string p = join(path, "parts") + "[" + std::to_string(i) + "]";
      const auto v = number_array(j.at("parts")[i], p);
      if (v.size() != 2 || !(v[0] < v[1])) fail(p, "expected [a, b] with a < b");
      parts.push_back({v[0], v[1]});
    }
    spec = DomainSpec::intervals(std::move(parts), spacing());
  } else if (kind == "rectangle") {
    only_keys(j, path, {"kind", "x0", "x1", "y0", "y1", "h"});
    const double x0 = field(j, path, "x0"), x1 = field(j, path, "x1");
    const double y0 = field(j, path, "y0"), y1 = field(j, path, "y1");
    if (!(x0 < x1)) fail(join(path, "x1"), "must exceed x0");
    if (!(y0 < y1)) fail(join(path, "y1"), "must exceed y0");
    spec = DomainSpec::rectangle(x0, x1, y0, y1, spacing());
  } else if (kind == "disc") {
    only_keys(j, path, {"kind", "center", "radius", "h"});
    std::array<double, 2> c{0.0, 0.0};
    if (j.contains("center")) {
      const auto v = number_array(j.at("center"), join(path, "center"));
      if (v.size() != 2) fail(join(path, "center"), "expected [x, y]");
      c = {v[0], v[1]};
    }
    const double r = positive(field(j, path, "radius"), join(path, "radius"));
    spec = DomainSpec::disc(c[0], c[1], r, spacing());
  } else if (kind == "mask") {
    only_keys(j, path, {"kind", "path", "origin"});
    if (!j.contains("path") || !j.at("path").is_string()) fail(join(path, "path"), "expected a file path");
    const std::string file = resolve(base_dir, j.at("path").get<std::string>());
    spec = guarded(join(path, "path"), [&] { return load_mask_file(file); });
    if (j.contains("origin")) {
      const auto v = number_array(j.at("origin"), join(path, "origin"));
      if (v.size() != 2) fail(join(path, "origin"), "expected [x, y]");
      spec.origin = {v[0], v[1]};
    }
    if (!(spec.h > 0.0)) fail(join(path, "path"), "mask spacing must be > 0");
  } else {
    fail(join(path, "kind"), "unknown kind '" + kind + "'");
  }
  return spec;
}

RunConfig parse_config(const json& j, const std::string& base_dir) {
  only_keys(j, "", {"young", "domain", "s", "n", "omega", "alpha", "calibration_C", "seed", "solver", "alpha0",
                    "regime"});
  RunConfig c;
  c.base_dir = base_dir;
  if (j.contains("young")) {
    c.young = parse_young(j.at("young"), "young", base_dir);
    c.young_echo = j.at("young");
  }
  if (j.contains("domain")) c.domain = parse_domain(j.at("domain"), "domain", base_dir);
  if (j.contains("s")) {
    const double s = number(j.at("s"), "s");
    if (!(s > 0.0 && s < 1.0)) fail("s", "must lie in (0, 1)");
    c.s = s;
  }
  if (j.contains("n")) {
    const int n = integer(j.at("n"), "n");
    if (n < 1) fail("n", "must be >= 1");
    if (c.domain && c.domain->dim() != n)
      fail("n", "does not match the domain dimension " + std::to_string(c.domain->dim()));
    c.n = n;
  } else if (c.domain) {
    c.n = c.domain->dim();
  }
  if (j.contains("omega")) {
    const json& o = j.at("omega");
    only_keys(o, "omega", {"constant", "unit_mass", "file"});
    if (o.size() != 1) fail("omega", "give exactly one of constant, unit_mass, file");
    if (o.contains("constant")) {
      c.omega.kind = OmegaSpec::Kind::constant;
      c.omega.c = positive(number(o.at("constant"), "omega.constant"), "omega.constant");
    } else if (o.contains("unit_mass")) {
      if (!o.at("unit_mass").is_boolean() || !o.at("unit_mass").get<bool>()) fail("omega.unit_mass", "expected true");
      c.omega.kind = OmegaSpec::Kind::unit_mass;
    } else {
      if (!o.at("file").is_string()) fail("omega.file", "expected a file path");
      c.omega.kind = OmegaSpec::Kind::file;
      c.omega.path = resolve(base_dir, o.at("file").get<std::string>());
    }
  }
  if (j.contains("alpha")) {
    const json& a = j.at("alpha");
    c.alpha = a.is_array() ? number_array(a, "alpha") : std::vector<double>{number(a, "alpha")};
    if (c.alpha.empty()) fail("alpha", "empty list");
    for (std::size_t i = 0; i < c.alpha.size(); ++i) {
      const std::string p = a.is_array() ? "alpha[" + std::to_string(i) + "]" : "alpha";
      positive(c.alpha[i], p);
      if (i > 0 && !(c.alpha[i] > c.alpha[i - 1])) fail(p, "alpha list must increase");
    }
  }
  if (j.contains("calibration_C"))
    c.calibration_C = positive(number(j.at("calibration_C"), "calibration_C"), "calibration_C");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !(j.at("seed").is_number_integer() && j.at("seed").get<long long>() >= 0))
      fail("seed", "expected a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("solver")) {
    const json& s = j.at("solver");
    only_keys(s, "solver", {"max_iterations", "rel_tol", "random_starts"});
    if (s.contains("max_iterations")) {
      c.solver.max_iterations = integer(s.at("max_iterations"), "solver.max_iterations");
      if (c.solver.max_iterations < 1) fail("solver.max_iterations", "must be >= 1");
    }
    if (s.contains("rel_tol")) c.solver.rel_tol = positive(number(s.at("rel_tol"), "solver.rel_tol"), "solver.rel_tol");
    if (s.contains("random_starts")) {
      c.solver.random_starts = integer(s.at("random_starts"), "solver.random_starts");
      if (c.solver.random_starts < 0) fail("solver.random_starts", "must be >= 0");
    }
  }
  if (j.contains("alpha0")) {
    if (!j.at("alpha0").is_boolean()) fail("alpha0", "expected a boolean");
    c.alpha0 = j.at("alpha0").get<bool>();
  }
  if (j.contains("regime")) {
    if (!j.at("regime").is_string()) fail("regime", "expected a string");
    const std::string r = j.at("regime").get<std::string>();
    if (r == "below_alpha0")
      c.regime = AlphaRegime::below_alpha0;
    else if (r == "above_alpha0")
      c.regime = AlphaRegime::above_alpha0;
    else if (r == "auto")
      c.regime = std::nullopt;
    else
      fail("regime", "expected below_alpha0, above_alpha0 or auto");
  }
  return c;
}

RunConfig parse_config_text(const std::string& text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::config, std::string("<root>: invalid JSON: ") + e.what());
  }
  return parse_config(j, base_dir);
}

}  // namespace orlicz
