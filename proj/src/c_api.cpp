#include "orlicz/orlicz.h"

#include <cmath>
#include <string>

#include "orlicz/config.hpp"
#include "orlicz/matuszewska.hpp"
#include "orlicz/runner.hpp"

struct orlicz_young {
  orlicz::YoungFunction f;
  std::string name;
};

struct orlicz_report {
  orlicz::RunResult result;
};

namespace {

thread_local std::string g_last_error;

orlicz_status fail(orlicz_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
orlicz_status guarded(F&& body) {
  try {
    body();
    return ORLICZ_OK;
  } catch (const orlicz::Error& e) {
    return fail(static_cast<orlicz_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::exception& e) {
    return fail(ORLICZ_INTERNAL, e.what());
  } catch (...) {
    return fail(ORLICZ_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* orlicz_version(void) { return "1.0.0"; }

const char* orlicz_status_string(orlicz_status status) {
  if (status == ORLICZ_OK) return "ok";
  if (status == ORLICZ_INTERNAL) return "internal";
  if (status >= ORLICZ_INVALID_ARGUMENT && status <= ORLICZ_IO)
    return orlicz::to_string(static_cast<orlicz::ErrorCode>(static_cast<int>(status)));
  return "unknown";
}

const char* orlicz_last_error(void) { return g_last_error.c_str(); }

orlicz_status orlicz_young_create(const char* spec_json, orlicz_young** out) {
  if (!spec_json || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw orlicz::Error(orlicz::ErrorCode::config, std::string("young: invalid JSON: ") + e.what());
    }
    auto f = orlicz::parse_young(j);
    *out = new orlicz_young{f, f.name()};
  });
}

void orlicz_young_destroy(orlicz_young* f) { delete f; }

orlicz_status orlicz_young_name(const orlicz_young* f, const char** out) {
  if (!f || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  *out = f->name.c_str();
  return ORLICZ_OK;
}

orlicz_status orlicz_young_eval(const orlicz_young* f, double t, int which, double* out) {
  if (!f || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  if (which != 0 && which != 1) return fail(ORLICZ_INVALID_ARGUMENT, "which must be 0 (A) or 1 (a)");
  return guarded([&] { *out = orlicz::eval(f->f, t, which == 0 ? orlicz::Which::A : orlicz::Which::a); });
}

orlicz_status orlicz_young_inverse(const orlicz_young* f, double y, double* out) {
  if (!f || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = orlicz::inverse(f->f, y); });
}

orlicz_status orlicz_young_conjugate(const orlicz_young* f, orlicz_young** out) {
  if (!f || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto g = orlicz::conjugate(f->f);
    *out = new orlicz_young{g, g.name()};
  });
}

orlicz_status orlicz_matuszewska_sup(const orlicz_young* f, double t, double* out) {
  if (!f || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = orlicz::matuszewska_sup(f->f, t).value(); });
}

orlicz_status orlicz_matuszewska_index(const orlicz_young* f, int which, double* out) {
  if (!f || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  if (which < 0 || which > 2) return fail(ORLICZ_INVALID_ARGUMENT, "which must be 0 (i), 1 (i0) or 2 (iinf)");
  const auto kind = which == 0 ? orlicz::IndexKind::global
                               : (which == 1 ? orlicz::IndexKind::zero : orlicz::IndexKind::infinity);
  return guarded([&] { *out = orlicz::matuszewska_index(f->f, kind).value(); });
}

orlicz_status orlicz_run(const char* subcommand, const char* config_json, const char* base_dir,
                         const orlicz_run_options* options, orlicz_report** out) {
  if (!subcommand || !config_json || !out) return fail(ORLICZ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const auto cmd = orlicz::parse_subcommand(subcommand);
  if (!cmd) return fail(ORLICZ_INVALID_ARGUMENT, std::string("unknown subcommand '") + subcommand + "'");
  return guarded([&] {
    const auto config = orlicz::parse_config_text(config_json, base_dir ? base_dir : ".");
    orlicz::RunOptions opts;
    if (options) {
      if (options->has_seed) opts.seed = options->seed;
      opts.timestamp = options->timestamp != 0;
    }
    auto result = orlicz::run(*cmd, config, opts);
    *out = new orlicz_report{std::move(result)};
  });
}

void orlicz_report_destroy(orlicz_report* report) { delete report; }

int orlicz_report_exit_code(const orlicz_report* report) { return report ? report->result.exit_code : -1; }

const char* orlicz_report_summary(const orlicz_report* report) {
  return report ? report->result.summary.c_str() : "";
}

size_t orlicz_report_file_count(const orlicz_report* report) { return report ? report->result.files.size() : 0; }

const char* orlicz_report_file_name(const orlicz_report* report, size_t index) {
  if (!report || index >= report->result.files.size()) return nullptr;
  return report->result.files[index].name.c_str();
}

const char* orlicz_report_file_content(const orlicz_report* report, size_t index, size_t* length) {
  if (!report || index >= report->result.files.size()) return nullptr;
  const auto& c = report->result.files[index].content;
  if (length) *length = c.size();
  return c.c_str();
}

}  // extern "C"
