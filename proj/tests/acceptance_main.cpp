// Acceptance harness: six gates, one verdict line each, exit 0 only when all
// six hold.  Uses the public C API plus the CLI binary named by the
// SKEWVERIFY_CLI environment variable (set by the test registration).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "skewverify.h"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs one named check on a fresh default session (seed 0, 100 trials,
// precision 12) with an optional constants override document.
skv_check_status run_one(const char* name, const char* constants_json,
                         std::string* detail) {
  skv_session* session = skv_session_new();
  if (session == nullptr) return SKV_CHECK_ERROR;
  skv_check_status status = SKV_CHECK_ERROR;
  skv_report* report = nullptr;
  const bool configured =
      constants_json == nullptr ||
      skv_session_set_constants(session, constants_json) == SKV_OK;
  if (configured && skv_run_check(session, name, &report) == SKV_OK) {
    status = skv_report_check_status(report, 0);
    if (detail != nullptr) *detail = skv_report_check_detail(report, 0);
  } else if (detail != nullptr) {
    *detail = skv_last_error();
  }
  skv_report_free(report);
  skv_session_free(session);
  return status;
}

bool all_pass(std::initializer_list<const char*> names, std::string* why) {
  for (const char* name : names) {
    std::string detail;
    const skv_check_status status = run_one(name, nullptr, &detail);
    if (status != SKV_CHECK_PASS) {
      *why = std::string(name) + " did not pass: " + detail;
      return false;
    }
  }
  return true;
}

// Exit code of `cli args > /dev/null 2>&1`, or -1 when it did not exit
// normally (missing binary, signal, ...).
int cli_exit_code(const std::string& cli, const std::string& args) {
  const std::string command = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int raw = std::system(command.c_str());
  if (raw == -1 || !WIFEXITED(raw)) return -1;
  return WEXITSTATUS(raw);
}

std::string write_temp_json(const std::string& stem, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / stem;
  std::ofstream out(path);
  out << body;
  return path.string();
}

constexpr const char* kLambdaOne = R"({"lambda": [[1,0,0],[0,0,0],[0,0,0]]})";
constexpr const char* kDOne =
    R"({"d": [[[1,0,0],[0,0,0],[0,0,0]],
              [[0,0,0],[0,0,0],[0,0,0]],
              [[0,0,0],[0,0,0],[0,0,0]]]})";

int criteria_failed = 0;

void verdict(int number, bool ok, const std::string& description,
             const std::string& why) {
  if (ok) {
    std::printf("PASS criterion %d: %s\n", number, description.c_str());
  } else {
    std::printf("FAIL criterion %d: %s (%s)\n", number, description.c_str(),
                why.c_str());
    ++criteria_failed;
  }
}

}  // namespace

int main() {
  // 1. Exact identity suite, combined runtime under 5 seconds.
  {
    std::string why;
    const auto start = Clock::now();
    bool ok = all_pass({"rel_u_cubed", "rel_commutation", "rel_f_sigma",
                        "rel_inner_theta", "rel_inner_u", "rel_d_fixed",
                        "rel_norm_lambda", "norm_pi_is_7", "t_central"},
                       &why);
    const double elapsed = seconds_since(start);
    if (ok && elapsed >= 5.0) {
      ok = false;
      why = "took " + std::to_string(elapsed) + " s";
    }
    verdict(1, ok, "exact identity suite passes in under 5 s", why);
  }

  // 2. Residue suite: exact and exhaustive.
  {
    std::string why;
    const bool ok = all_pass({"minpoly_irred_mod2", "minpoly_cube_mod7",
                              "f_rootless_mod2", "f_rootless_modpi"},
                             &why);
    verdict(2, ok, "residue reductions are exact and exhaustive", why);
  }

  // 3. Root-of-unity predicates.
  {
    std::string why;
    const bool ok = all_pass({"mu_3_in_F7", "mu_9_not_in_F7", "mu_3_not_in_F2"}, &why);
    verdict(3, ok, "root-of-unity membership matches on all three cases", why);
  }

  // 4. Property suites at seed 0 with the default trial counts.
  {
    std::string why;
    const bool ok = all_pass(
        {"d_algebra_axioms", "homomorphism_sigma_tilde", "sigma_tilde_inner_cube",
         "automorphism_orders", "norm_multiplicativity", "valuation_axioms",
         "ts_inv_roundtrip", "tame_delta_residue"},
        &why);
    verdict(4, ok, "randomized property suites pass at seed 0", why);
  }

  // 5. Negative controls: corrupted constants must be caught.
  {
    std::string why;
    bool ok = true;
    std::string detail;
    if (run_one("rel_u_cubed", kLambdaOne, &detail) != SKV_CHECK_FAIL) {
      ok = false;
      why = "rel_u_cubed not FAIL under lambda := 1: " + detail;
    } else if (run_one("rel_norm_lambda", kLambdaOne, &detail) != SKV_CHECK_FAIL) {
      ok = false;
      why = "rel_norm_lambda not FAIL under lambda := 1: " + detail;
    } else if (run_one("t_central", kDOne, &detail) != SKV_CHECK_FAIL) {
      ok = false;
      why = "t_central not FAIL under d := 1: " + detail;
    } else {
      const char* cli = std::getenv("SKEWVERIFY_CLI");
      if (cli == nullptr) {
        ok = false;
        why = "SKEWVERIFY_CLI is not set";
      } else {
        const std::string lambda_path =
            write_temp_json("skv_accept_lambda_one.json", kLambdaOne);
        const std::string d_path = write_temp_json("skv_accept_d_one.json", kDOne);
        const int code_lambda =
            cli_exit_code(cli, "--constants \"" + lambda_path + "\" all");
        const int code_d = cli_exit_code(cli, "--constants \"" + d_path + "\" all");
        std::filesystem::remove(lambda_path);
        std::filesystem::remove(d_path);
        if (code_lambda <= 0 || code_d <= 0) {
          ok = false;
          why = "harness exit codes: lambda := 1 -> " + std::to_string(code_lambda) +
                ", d := 1 -> " + std::to_string(code_d);
        }
      }
    }
    verdict(5, ok, "negative controls fail loudly and the harness exits nonzero", why);
  }

  // 6. Full run through the CLI: exit 0 in under 60 seconds.
  {
    std::string why;
    bool ok = true;
    const char* cli = std::getenv("SKEWVERIFY_CLI");
    if (cli == nullptr) {
      ok = false;
      why = "SKEWVERIFY_CLI is not set";
    } else {
      const auto start = Clock::now();
      const int code = cli_exit_code(cli, "all");
      const double elapsed = seconds_since(start);
      if (code != 0) {
        ok = false;
        why = "exit code " + std::to_string(code);
      } else if (elapsed >= 60.0) {
        ok = false;
        why = "took " + std::to_string(elapsed) + " s";
      }
    }
    verdict(6, ok, "full `all` run exits 0 in under 60 s", why);
  }

  return criteria_failed == 0 ? 0 : 1;
}
