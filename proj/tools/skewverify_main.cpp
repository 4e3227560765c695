// Command-line front end.  Deliberately speaks only the public C API, so it
// doubles as a living example of embedding the shared library.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "skewverify.h"

namespace {

constexpr int kExitUsage = 2;

struct SessionDeleter {
  void operator()(skv_session* s) const { skv_session_free(s); }
};
struct ReportDeleter {
  void operator()(skv_report* r) const { skv_report_free(r); }
};

int render_and_flag(const skv_report* report, const std::string& format) {
  char* text = nullptr;
  if (skv_report_render(report, format.c_str(), &text) != SKV_OK) {
    std::fprintf(stderr, "error: %s\n", skv_last_error());
    return kExitUsage;
  }
  std::fputs(text, stdout);
  skv_string_free(text);
  return skv_report_all_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact checker for a cyclic division algebra, its outer ring map with "
      "inner cube witness, and the induced twisted Laurent series"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::uint64_t seed = 0;
  int trials = 100;
  int precision = 12;
  std::string format = "text";
  std::string constants_path;
  app.add_option("--seed", seed, "Seed for the per-check random streams")
      ->capture_default_str();
  app.add_option("--trials", trials, "Trial count for randomized checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--precision", precision, "Series window width for series checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--constants", constants_path,
                 "JSON file overriding selected built-in constants");

  CLI::App* cmd_list = app.add_subcommand("list", "List every check with its anchor");
  CLI::App* cmd_check = app.add_subcommand("check", "Run a single named check");
  std::string check_name;
  cmd_check->add_option("name", check_name, "Check name, as shown by `list`")
      ->required();
  CLI::App* cmd_all = app.add_subcommand("all", "Run every check in order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_list->parsed()) {
    for (size_t i = 0; i < skv_check_count(); ++i) {
      std::printf("%-26s %s\n", skv_check_name(i), skv_check_anchor(i));
    }
    return 0;
  }

  std::unique_ptr<skv_session, SessionDeleter> session(skv_session_new());
  if (!session) {
    std::fprintf(stderr, "error: %s\n", skv_last_error());
    return kExitUsage;
  }
  skv_session_set_seed(session.get(), seed);
  if (skv_session_set_trials(session.get(), trials) != SKV_OK ||
      skv_session_set_precision(session.get(), precision) != SKV_OK) {
    std::fprintf(stderr, "error: %s\n", skv_last_error());
    return kExitUsage;
  }
  if (!constants_path.empty() &&
      skv_session_load_constants(session.get(), constants_path.c_str()) != SKV_OK) {
    std::fprintf(stderr, "error: %s: %s\n", constants_path.c_str(), skv_last_error());
    return kExitUsage;
  }

  skv_report* raw = nullptr;
  skv_status status;
  if (cmd_check->parsed()) {
    status = skv_run_check(session.get(), check_name.c_str(), &raw);
  } else {
    status = skv_run_all(session.get(), &raw);
  }
  std::unique_ptr<skv_report, ReportDeleter> report(raw);
  if (status != SKV_OK) {
    std::fprintf(stderr, "error: %s\n", skv_last_error());
    return kExitUsage;
  }
  (void)cmd_all;
  return render_and_flag(report.get(), format);
}
