// Exercises the shared library exactly as an external consumer would:
// only skewverify.h, no internal headers.
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "skewverify.h"

namespace {

struct Session {
  skv_session* s = skv_session_new();
  ~Session() { skv_session_free(s); }
};

struct ReportHolder {
  skv_report* r = nullptr;
  ~ReportHolder() { skv_report_free(r); }
};

}  // namespace

TEST_CASE("registry listing") {
  REQUIRE(skv_check_count() >= 21);
  bool saw_rel_u_cubed = false;
  for (size_t i = 0; i < skv_check_count(); ++i) {
    REQUIRE(skv_check_name(i) != nullptr);
    REQUIRE(skv_check_anchor(i) != nullptr);
    if (std::strcmp(skv_check_name(i), "rel_u_cubed") == 0) saw_rel_u_cubed = true;
  }
  CHECK(saw_rel_u_cubed);
  CHECK(skv_check_name(skv_check_count()) == nullptr);
  CHECK(skv_check_anchor(static_cast<size_t>(-1)) == nullptr);
}

TEST_CASE("session lifecycle and argument validation") {
  Session session;
  REQUIRE(session.s != nullptr);
  CHECK(skv_session_set_seed(session.s, 123) == SKV_OK);
  CHECK(skv_session_set_trials(session.s, 10) == SKV_OK);
  CHECK(skv_session_set_precision(session.s, 8) == SKV_OK);
  CHECK(skv_session_set_trials(session.s, 0) == SKV_ERR_ARGUMENT);
  CHECK(skv_session_set_precision(session.s, -1) == SKV_ERR_ARGUMENT);
  CHECK(skv_session_set_seed(nullptr, 1) == SKV_ERR_ARGUMENT);
  CHECK(skv_run_all(nullptr, nullptr) == SKV_ERR_ARGUMENT);
  CHECK(std::string(skv_last_error()) != "");
}

TEST_CASE("single check runs and renders") {
  Session session;
  skv_session_set_trials(session.s, 4);
  ReportHolder report;
  REQUIRE(skv_run_check(session.s, "norm_pi_is_7", &report.r) == SKV_OK);
  REQUIRE(report.r != nullptr);
  CHECK(skv_report_size(report.r) == 1);
  CHECK(skv_report_all_pass(report.r) == 1);
  CHECK(std::string(skv_report_check_name(report.r, 0)) == "norm_pi_is_7");
  CHECK(skv_report_check_status(report.r, 0) == SKV_CHECK_PASS);
  CHECK(skv_report_check_elapsed_ms(report.r, 0) >= 0);
  CHECK(skv_report_check_detail(report.r, 0) != nullptr);
  CHECK(skv_report_check_name(report.r, 5) == nullptr);

  char* text = nullptr;
  REQUIRE(skv_report_render(report.r, "text", &text) == SKV_OK);
  CHECK(std::string(text).find("PASS") != std::string::npos);
  skv_string_free(text);

  char* json_text = nullptr;
  REQUIRE(skv_report_render(report.r, "json", &json_text) == SKV_OK);
  const auto doc = nlohmann::json::parse(json_text);
  CHECK(doc.at("all_pass") == true);
  CHECK(doc.at("checks").at(0).at("name") == "norm_pi_is_7");
  skv_string_free(json_text);

  char* out = nullptr;
  CHECK(skv_report_render(report.r, "yaml", &out) == SKV_ERR_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("unknown checks are reported, not crashed") {
  Session session;
  ReportHolder report;
  CHECK(skv_run_check(session.s, "nope", &report.r) == SKV_ERR_UNKNOWN_CHECK);
  CHECK(report.r == nullptr);
  CHECK(std::string(skv_last_error()).find("nope") != std::string::npos);
}

TEST_CASE("constants overrides through the C API") {
  Session session;
  CHECK(skv_session_set_constants(session.s, "{oops") == SKV_ERR_PARSE);
  CHECK(skv_session_set_constants(session.s, "[]") == SKV_ERR_SHAPE);
  CHECK(skv_session_set_constants(
            session.s, R"({"lambda": [[0.5,0,0],[0,0,0],[0,0,0]]})") ==
        SKV_ERR_NON_RATIONAL);
  CHECK(skv_session_load_constants(session.s, "/no/such/file.json") == SKV_ERR_IO);

  // a successful override flips the lambda-sensitive relations to FAIL
  REQUIRE(skv_session_set_constants(
              session.s, R"({"lambda": [[1,0,0],[0,0,0],[0,0,0]]})") == SKV_OK);
  ReportHolder report;
  REQUIRE(skv_run_check(session.s, "rel_norm_lambda", &report.r) == SKV_OK);
  CHECK(skv_report_check_status(report.r, 0) == SKV_CHECK_FAIL);
  CHECK(skv_report_all_pass(report.r) == 0);
  CHECK(std::string(skv_report_check_detail(report.r, 0)) != "");
}

TEST_CASE("run_all covers the whole registry") {
  Session session;
  skv_session_set_trials(session.s, 2);
  skv_session_set_precision(session.s, 5);
  ReportHolder report;
  REQUIRE(skv_run_all(session.s, &report.r) == SKV_OK);
  CHECK(skv_report_size(report.r) == skv_check_count());
  CHECK(skv_report_all_pass(report.r) == 1);
}
