#include "skewverify.h"

#include <cstring>
#include <new>
#include <string>

#include "checks.hpp"

using namespace skv;

struct skv_session {
  CheckContext ctx;
};

struct skv_report {
  Report report;
};

namespace {

thread_local std::string g_last_error;

skv_status status_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return SKV_ERR_DIVISION_BY_ZERO;
    case ErrorKind::SingularElement: return SKV_ERR_SINGULAR;
    case ErrorKind::Inconsistency: return SKV_ERR_INCONSISTENT;
    case ErrorKind::Precondition: return SKV_ERR_PRECONDITION;
    case ErrorKind::Parse: return SKV_ERR_PARSE;
    case ErrorKind::Shape: return SKV_ERR_SHAPE;
    case ErrorKind::NonRational: return SKV_ERR_NON_RATIONAL;
    case ErrorKind::InsufficientPrecision: return SKV_ERR_INSUFFICIENT_PRECISION;
    case ErrorKind::UnknownCheck: return SKV_ERR_UNKNOWN_CHECK;
    case ErrorKind::NoWitness: return SKV_ERR_NO_WITNESS;
    case ErrorKind::Io: return SKV_ERR_IO;
  }
  return SKV_ERR_INTERNAL;
}

skv_status fail_with(skv_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes and last-error text.
template <typename Fn>
skv_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SKV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SKV_ERR_INTERNAL;
  }
}

const CheckResult* result_at(const skv_report* report, size_t index) {
  if (report == nullptr || index >= report->report.results.size()) return nullptr;
  return &report->report.results[index];
}

}  // namespace

extern "C" {

const char* skv_last_error(void) { return g_last_error.c_str(); }

size_t skv_check_count(void) { return check_registry().size(); }

const char* skv_check_name(size_t index) {
  const auto& defs = check_registry();
  if (index >= defs.size()) return nullptr;
  return defs[index].name.c_str();
}

const char* skv_check_anchor(size_t index) {
  const auto& defs = check_registry();
  if (index >= defs.size()) return nullptr;
  return defs[index].anchor.c_str();
}

skv_session* skv_session_new(void) {
  try {
    return new skv_session{};
  } catch (...) {
    g_last_error = "out of memory";
    return nullptr;
  }
}

void skv_session_free(skv_session* session) { delete session; }

skv_status skv_session_set_seed(skv_session* session, uint64_t seed) {
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  session->ctx.seed = seed;
  return SKV_OK;
}

skv_status skv_session_set_trials(skv_session* session, int trials) {
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  if (trials < 1) return fail_with(SKV_ERR_ARGUMENT, "trials must be >= 1");
  session->ctx.trials = trials;
  return SKV_OK;
}

skv_status skv_session_set_precision(skv_session* session, int precision) {
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  if (precision < 1) return fail_with(SKV_ERR_ARGUMENT, "precision must be >= 1");
  session->ctx.precision = precision;
  return SKV_OK;
}

skv_status skv_session_set_constants(skv_session* session, const char* json_text) {
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  if (json_text == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null document");
  return guarded([&] {
    session->ctx.constants = parse_constants_override(json_text);
    return SKV_OK;
  });
}

skv_status skv_session_load_constants(skv_session* session, const char* path) {
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  if (path == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null path");
  return guarded([&] {
    session->ctx.constants = load_constants_override(path);
    return SKV_OK;
  });
}

skv_status skv_run_check(skv_session* session, const char* name, skv_report** out) {
  if (out != nullptr) *out = nullptr;
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  if (name == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null check name");
  if (out == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null output location");
  return guarded([&] {
    Report report;
    report.results.push_back(run_check(name, session->ctx));
    report.all_pass = report.results.front().status == CheckStatus::Pass;
    *out = new skv_report{std::move(report)};
    return SKV_OK;
  });
}

skv_status skv_run_all(skv_session* session, skv_report** out) {
  if (out != nullptr) *out = nullptr;
  if (session == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null session");
  if (out == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null output location");
  return guarded([&] {
    *out = new skv_report{run_all(session->ctx)};
    return SKV_OK;
  });
}

void skv_report_free(skv_report* report) { delete report; }

size_t skv_report_size(const skv_report* report) {
  return report == nullptr ? 0 : report->report.results.size();
}

int skv_report_all_pass(const skv_report* report) {
  return (report != nullptr && report->report.all_pass) ? 1 : 0;
}

const char* skv_report_check_name(const skv_report* report, size_t index) {
  const CheckResult* r = result_at(report, index);
  return r == nullptr ? nullptr : r->name.c_str();
}

const char* skv_report_check_detail(const skv_report* report, size_t index) {
  const CheckResult* r = result_at(report, index);
  return r == nullptr ? nullptr : r->detail.c_str();
}

const char* skv_report_check_anchor(const skv_report* report, size_t index) {
  const CheckResult* r = result_at(report, index);
  return r == nullptr ? nullptr : r->anchor.c_str();
}

skv_check_status skv_report_check_status(const skv_report* report, size_t index) {
  const CheckResult* r = result_at(report, index);
  if (r == nullptr) return SKV_CHECK_ERROR;
  switch (r->status) {
    case CheckStatus::Pass: return SKV_CHECK_PASS;
    case CheckStatus::Fail: return SKV_CHECK_FAIL;
    case CheckStatus::Error: return SKV_CHECK_ERROR;
  }
  return SKV_CHECK_ERROR;
}

int64_t skv_report_check_elapsed_ms(const skv_report* report, size_t index) {
  const CheckResult* r = result_at(report, index);
  return r == nullptr ? -1 : r->elapsed_ms;
}

skv_status skv_report_render(const skv_report* report, const char* format, char** out) {
  if (out != nullptr) *out = nullptr;
  if (report == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null report");
  if (format == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null format");
  if (out == nullptr) return fail_with(SKV_ERR_ARGUMENT, "null output location");
  return guarded([&] {
    std::string text;
    if (std::strcmp(format, "text") == 0) {
      text = report_to_text(report->report);
    } else if (std::strcmp(format, "json") == 0) {
      text = report_to_json(report->report);
    } else {
      return fail_with(SKV_ERR_ARGUMENT, "format must be \"text\" or \"json\"");
    }
    char* copy = new char[text.size() + 1];
    std::memcpy(copy, text.c_str(), text.size() + 1);
    *out = copy;
    return SKV_OK;
  });
}

void skv_string_free(char* text) { delete[] text; }

}  // extern "C"
