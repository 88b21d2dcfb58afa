#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "orlicz/orlicz.h"

using doctest::Approx;

namespace {

orlicz_young* make(const char* spec) {
  orlicz_young* f = nullptr;
  REQUIRE(orlicz_young_create(spec, &f) == ORLICZ_OK);
  return f;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::strlen(orlicz_version()) > 0);
  CHECK(std::string(orlicz_status_string(ORLICZ_OK)) == "ok");
  CHECK(std::string(orlicz_status_string(ORLICZ_CONFIG)) == "invalid configuration");
  CHECK(std::string(orlicz_status_string(ORLICZ_NONCONVERGENT)) != orlicz_status_string(ORLICZ_CONFIG));
  CHECK(std::string(orlicz_status_string(ORLICZ_INTERNAL)) == "internal");
  CHECK(std::string(orlicz_status_string(static_cast<orlicz_status>(77))) == "unknown");
}

TEST_CASE("young handles") {
  orlicz_young* f = make(R"({"kind":"p_q","p":2,"q":3})");
  const char* name = nullptr;
  CHECK(orlicz_young_name(f, &name) == ORLICZ_OK);
  CHECK(std::string(name).find("p_q") != std::string::npos);

  double v = 0.0;
  CHECK(orlicz_young_eval(f, 1.0, 0, &v) == ORLICZ_OK);
  CHECK(v == Approx(5.0 / 6.0));
  CHECK(orlicz_young_eval(f, 2.0, 1, &v) == ORLICZ_OK);
  CHECK(v == Approx(6.0));
  CHECK(orlicz_young_inverse(f, 5.0 / 6.0, &v) == ORLICZ_OK);
  CHECK(v == Approx(1.0).epsilon(1e-9));
  CHECK(orlicz_young_eval(f, 1.0, 2, &v) == ORLICZ_INVALID_ARGUMENT);

  orlicz_young* g = nullptr;
  CHECK(orlicz_young_conjugate(f, &g) == ORLICZ_OK);
  REQUIRE(g != nullptr);
  double gv = 0.0;
  CHECK(orlicz_young_eval(g, 1.0, 0, &gv) == ORLICZ_OK);
  CHECK(gv > 0.0);

  CHECK(orlicz_matuszewska_sup(f, 4.0, &v) == ORLICZ_OK);
  CHECK(v == Approx(64.0));
  CHECK(orlicz_matuszewska_index(f, 1, &v) == ORLICZ_OK);
  CHECK(v == Approx(2.0));
  CHECK(orlicz_matuszewska_index(f, 2, &v) == ORLICZ_OK);
  CHECK(v == Approx(3.0));
  CHECK(orlicz_matuszewska_index(f, 5, &v) == ORLICZ_INVALID_ARGUMENT);
  orlicz_young_destroy(g);
  orlicz_young_destroy(f);

  orlicz_young* e = make(R"({"kind":"exp_taylor","k":2})");
  CHECK(orlicz_matuszewska_index(e, 0, &v) == ORLICZ_OK);
  CHECK(std::isinf(v));
  orlicz_young_destroy(e);
}

TEST_CASE("errors carry status and message") {
  orlicz_young* f = nullptr;
  CHECK(orlicz_young_create(R"({"kind":"p_q","p":2})", &f) == ORLICZ_CONFIG);
  CHECK(f == nullptr);
  CHECK(std::string(orlicz_last_error()).find("young.q") != std::string::npos);
  CHECK(orlicz_young_create("{oops", &f) == ORLICZ_CONFIG);
  CHECK(orlicz_young_create(nullptr, &f) == ORLICZ_INVALID_ARGUMENT);
  CHECK(orlicz_young_name(nullptr, nullptr) == ORLICZ_INVALID_ARGUMENT);

  orlicz_young* e = make(R"({"kind":"exp_taylor","k":1})");
  double v = 0.0;
  CHECK(orlicz_young_eval(e, 1000.0, 0, &v) == ORLICZ_OVERFLOW);
  orlicz_young_destroy(e);
  orlicz_young_destroy(nullptr);
}

TEST_CASE("runs and reports") {
  orlicz_run_options opts{0, 0, 0};
  orlicz_report* rep = nullptr;
  const char* cfg = R"({"young":{"kind":"power","p":2},"domain":{"kind":"interval","a":0,"b":1,"h":0.0625},"s":0.5})";
  REQUIRE(orlicz_run("solve", cfg, nullptr, &opts, &rep) == ORLICZ_OK);
  CHECK(orlicz_report_exit_code(rep) == 0);
  CHECK(std::string(orlicz_report_summary(rep)).find("lambda=") != std::string::npos);
  const size_t count = orlicz_report_file_count(rep);
  REQUIRE(count == 3);
  CHECK(std::string(orlicz_report_file_name(rep, 0)) == "solve.json");
  size_t len = 0;
  const char* body = orlicz_report_file_content(rep, 0, &len);
  REQUIRE(body != nullptr);
  CHECK(len == std::strlen(body));
  CHECK(std::string(body, len).find("\"schema_version\": 1") != std::string::npos);
  CHECK(std::string(body, len).find("generated_at") == std::string::npos);
  CHECK(orlicz_report_file_name(rep, count) == nullptr);
  CHECK(orlicz_report_file_content(rep, count, &len) == nullptr);
  orlicz_report_destroy(rep);

  rep = nullptr;
  CHECK(orlicz_run("solve", R"({"young":{"kind":"power","p":2},"s":0.5})", ".", &opts, &rep) == ORLICZ_CONFIG);
  CHECK(rep == nullptr);
  CHECK(std::string(orlicz_last_error()) == "domain: required for solve");
  CHECK(orlicz_run("dance", "{}", nullptr, &opts, &rep) == ORLICZ_INVALID_ARGUMENT);

  orlicz_run_options seeded{1, 5, 0};
  REQUIRE(orlicz_run("analyze", R"({"young":{"kind":"p_log","p":2,"q":1,"r":1},"n":1,"s":0.5})", nullptr, &seeded,
                     &rep) == ORLICZ_OK);
  CHECK(std::string(orlicz_report_file_name(rep, 1)) == "matuszewska.csv");
  orlicz_report_destroy(rep);
  CHECK(orlicz_report_exit_code(nullptr) == -1);
  CHECK(orlicz_report_file_count(nullptr) == 0);
}
