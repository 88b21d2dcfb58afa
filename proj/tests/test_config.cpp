#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <unistd.h>

#include "orlicz/config.hpp"
#include "orlicz/report.hpp"

using namespace orlicz;
using doctest::Approx;
using nlohmann::json;

namespace {

// The config error message, or "" when parsing succeeds.
std::string config_error(const std::string& text, const std::string& base = ".") {
  try {
    parse_config_text(text, base);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::config);
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / ("orlicz_test_config_" + std::to_string(::getpid()));
  std::filesystem::create_directories(d);
  return d;
}

void write_file(const std::filesystem::path& p, const std::string& body) { std::ofstream(p) << body; }

}  // namespace

TEST_CASE("full config") {
  const auto c = parse_config_text(R"({
    "young": {"kind": "p_q", "p": 2, "q": 3},
    "domain": {"kind": "disc", "center": [1, 2], "radius": 0.5, "h": 0.1},
    "s": 0.4,
    "omega": {"constant": 2.5},
    "alpha": [0.5, 1, 2],
    "calibration_C": 3,
    "seed": 99,
    "solver": {"max_iterations": 100, "rel_tol": 1e-6, "random_starts": 3},
    "alpha0": true,
    "regime": "above_alpha0"
  })");
  REQUIRE(c.young.has_value());
  CHECK(c.young->kind() == YoungKind::p_q);
  CHECK(c.young_echo.at("q") == 3);
  REQUIRE(c.domain.has_value());
  CHECK(c.domain->kind == ShapeKind::disc);
  CHECK(c.domain->center[1] == 2.0);
  CHECK(*c.s == 0.4);
  CHECK(*c.n == 2);
  CHECK(c.omega.kind == OmegaSpec::Kind::constant);
  CHECK(c.omega.c == 2.5);
  CHECK(c.alpha == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(c.calibration_C == 3.0);
  CHECK(c.seed == 99);
  CHECK(c.solver.max_iterations == 100);
  CHECK(c.solver.rel_tol == 1e-6);
  CHECK(c.solver.random_starts == 3);
  CHECK(c.alpha0);
  CHECK(*c.regime == AlphaRegime::above_alpha0);
}

TEST_CASE("defaults") {
  const auto c = parse_config_text("{}");
  CHECK_FALSE(c.young.has_value());
  CHECK_FALSE(c.domain.has_value());
  CHECK_FALSE(c.n.has_value());
  CHECK(c.omega.kind == OmegaSpec::Kind::constant);
  CHECK(c.omega.c == 1.0);
  CHECK(c.calibration_C == 1.0);
  CHECK(c.seed == 0);
  CHECK(c.solver.max_iterations == 5000);
  CHECK(*c.regime == AlphaRegime::below_alpha0);
  CHECK_FALSE(parse_config_text(R"({"regime": "auto"})").regime.has_value());
  CHECK(parse_config_text(R"({"alpha": 2})").alpha == std::vector<double>{2.0});
  CHECK(parse_config_text(R"({"omega": {"unit_mass": true}})").omega.kind == OmegaSpec::Kind::unit_mass);
}

TEST_CASE("young kinds") {
  CHECK(parse_young(json::parse(R"({"kind":"power","p":3,"c":2})")).A(1.0) == Approx(2.0));
  CHECK(parse_young(json::parse(R"({"kind":"p_log","p":2,"q":1,"r":1})")).kind() == YoungKind::p_log);
  CHECK(parse_young(json::parse(R"({"kind":"exp_taylor","k":2})")).kind() == YoungKind::exp_taylor);
  CHECK(parse_young(json::parse(R"({"kind":"double_exp"})")).kind() == YoungKind::double_exp);
  CHECK(parse_young(json::parse(R"({"kind":"exp_neg_power","r":1})")).kind() == YoungKind::exp_neg_power);
  const auto tab = parse_young(json::parse(R"({"kind":"tabulated","t":[0,1,2],"a":[0,1,3]})"));
  CHECK(tab.a(1.5) == Approx(2.0));
}

TEST_CASE("field paths in errors") {
  CHECK(starts_with(config_error(R"({"young": {"kind": "p_q", "p": 2}})"), "young.q: missing"));
  CHECK(starts_with(config_error(R"({"young": {"kind": "p_q", "p": 3, "q": 2}})"), "young: "));
  CHECK(starts_with(config_error(R"({"young": {"kind": "nope"}})"), "young.kind: unknown kind"));
  CHECK(starts_with(config_error(R"({"young": {"kind": "power", "p": 2, "x": 1}})"), "young.x: unknown field"));
  CHECK(starts_with(config_error(R"({"young": {"kind": "exp_taylor", "k": 1.5}})"), "young.k: expected an integer"));
  CHECK(starts_with(config_error(R"({"s": 1.0})"), "s: must lie in (0, 1)"));
  CHECK(starts_with(config_error(R"({"s": "half"})"), "s: expected a number"));
  CHECK(starts_with(config_error(R"({"n": 0})"), "n: must be >= 1"));
  CHECK(starts_with(config_error(R"({"domain": {"kind": "interval", "a": 0, "b": 1, "h": 0.1}, "n": 2})"),
                    "n: does not match"));
  CHECK(starts_with(config_error(R"({"domain": {"kind": "interval", "a": 1, "b": 0, "h": 0.1}})"),
                    "domain.b: must exceed a"));
  CHECK(starts_with(config_error(R"({"domain": {"kind": "disc", "radius": 1}})"), "domain.h: missing"));
  CHECK(starts_with(config_error(R"({"domain": {"kind": "rectangle", "x0": 0, "x1": 1, "y0": 0, "y1": 1, "h": -1}})"),
                    "domain.h: must be > 0"));
  CHECK(starts_with(config_error(R"({"domain": {"kind": "intervals", "parts": [[0, 1], [3, 2]], "h": 0.1}})"),
                    "domain.parts[1]: "));
  CHECK(starts_with(config_error(R"({"alpha": [1, 0.5]})"), "alpha[1]: alpha list must increase"));
  CHECK(starts_with(config_error(R"({"alpha": [1, -2]})"), "alpha[1]: must be > 0"));
  CHECK(starts_with(config_error(R"({"alpha": []})"), "alpha: empty list"));
  CHECK(starts_with(config_error(R"({"omega": {"constant": 1, "unit_mass": true}})"), "omega: give exactly one"));
  CHECK(starts_with(config_error(R"({"omega": {"constant": 0}})"), "omega.constant: must be > 0"));
  CHECK(starts_with(config_error(R"({"seed": -1})"), "seed: expected a non-negative integer"));
  CHECK(starts_with(config_error(R"({"solver": {"max_iterations": 0}})"), "solver.max_iterations: must be >= 1"));
  CHECK(starts_with(config_error(R"({"solver": {"tol": 1}})"), "solver.tol: unknown field"));
  CHECK(starts_with(config_error(R"({"regime": "sideways"})"), "regime: expected"));
  CHECK(starts_with(config_error(R"({"alpha0": 1})"), "alpha0: expected a boolean"));
  CHECK(starts_with(config_error(R"({"colour": 1})"), "colour: unknown field"));
  CHECK(starts_with(config_error("{not json"), "<root>: invalid JSON"));
  CHECK(starts_with(config_error("[1, 2]"), ": expected an object"));
}

TEST_CASE("files resolve against the base directory") {
  const auto dir = scratch_dir();
  write_file(dir / "shape.mask", "h=0.25\n11\n11\n");
  write_file(dir / "a.csv", "t,a\n0,0\n1,1\n2,4\n");
  write_file(dir / "bad.csv", "t,a\n0,0\n1,x\n");
  const auto c = parse_config_text(R"({
    "young": {"kind": "tabulated", "csv": "a.csv"},
    "domain": {"kind": "mask", "path": "shape.mask", "origin": [1, 1]},
    "omega": {"file": "w.txt"}
  })",
                                   dir.string());
  CHECK(c.young->a(1.0) == Approx(1.0));
  CHECK(c.domain->h == 0.25);
  CHECK(c.domain->origin[0] == 1.0);
  CHECK(*c.n == 2);
  CHECK(c.omega.path == (dir / "w.txt").string());

  CHECK(starts_with(config_error(R"({"domain": {"kind": "mask", "path": "missing.mask"}})", dir.string()),
                    "domain.path: "));
  CHECK(starts_with(config_error(R"({"young": {"kind": "tabulated", "csv": "bad.csv"}})", dir.string()),
                    "young.csv: tabulated csv: cannot parse"));
  CHECK(starts_with(config_error(R"({"young": {"kind": "tabulated", "csv": "none.csv"}})", dir.string()),
                    "young.csv: cannot open"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("json numbers and report envelope") {
  CHECK(json_number(1.5) == 1.5);
  CHECK(json_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(json_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(json_number(std::nan("")) == "nan");
  CHECK(to_json(ExtendedReal::infinity()) == "inf");
  CHECK(to_json(ExtendedReal(2.0)) == 2.0);

  const std::string plain = finalize_report(json{{"zeta", 1}, {"alpha", 2}}, false);
  const auto parsed = json::parse(plain);
  CHECK(parsed.at("schema_version") == kSchemaVersion);
  CHECK_FALSE(parsed.contains("generated_at"));
  CHECK(plain.back() == '\n');
  CHECK(plain.find("\"alpha\"") < plain.find("\"zeta\""));
  CHECK(plain == finalize_report(json{{"alpha", 2}, {"zeta", 1}}, false));

  const auto stamped = json::parse(finalize_report(json::object(), true));
  REQUIRE(stamped.contains("generated_at"));
  const std::string ts = stamped.at("generated_at");
  CHECK(ts.size() == 20);
  CHECK(ts.back() == 'Z');
}

TEST_CASE("report serializers") {
  const auto f = YoungFunction::p_q(2.0, 3.0);
  const auto jf = to_json(f);
  CHECK(jf.at("kind") == "p_q");
  const auto prof = to_json(matuszewska_profile(YoungFunction::exp_taylor(2), {0.5, 2.0}));
  CHECK(prof.at("i") == "inf");
  const auto g = to_json(build_domain(DomainSpec::interval(0.0, 1.0, 0.25)));
  CHECK(g.at("nodes") == 4);
  CHECK(g.at("r_omega").get<double>() == Approx(0.5));
}
