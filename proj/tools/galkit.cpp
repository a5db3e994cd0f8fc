// galkit command-line front end. Talks to the library only through galkit.h.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galkit/galkit.h"
#include "json.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code_for(galkit_status s) {
  switch (s) {
    case GALKIT_OK: return 0;
    case GALKIT_INVALID_ARGUMENT:
    case GALKIT_PARSE_ERROR:
    case GALKIT_DEGREE_MISMATCH:
    case GALKIT_PRECONDITION: return kExitUsage;
    default: return kExitFail;
  }
}

int report_error(galkit_status s) {
  std::cerr << "galkit: " << galkit_last_error() << "\n";
  return exit_code_for(s);
}

/// Turns "--key value" pairs left over by the parser into a JSON object.
/// Values that read as JSON keep their type, anything else is a string.
nlohmann::json collect_params(const std::vector<std::string> &extras) {
  nlohmann::json params = nlohmann::json::object();
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    std::string value;
    bool has_value = false;
    if (key.rfind("--", 0) != 0 || key.size() < 3)
      throw CLI::ValidationError("unexpected argument '" + key + "'");
    key = key.substr(2);
    if (auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
      has_value = true;
    } else if (i + 1 < extras.size()) {
      value = extras[++i];
      has_value = true;
    }
    if (!has_value) throw CLI::ValidationError("--" + key + " needs a value");
    if (params.contains(key)) throw CLI::ValidationError("--" + key + " given twice");
    auto parsed = nlohmann::json::parse(value, nullptr, false);
    params[key] = parsed.is_discarded() ? nlohmann::json(value) : parsed;
  }
  return params;
}

void merge_params(nlohmann::json &params, const std::string &text) {
  if (text.empty()) return;
  auto extra = nlohmann::json::parse(text, nullptr, false);
  if (extra.is_discarded() || !extra.is_object())
    throw CLI::ValidationError("--params must be a JSON object");
  for (const auto &[k, v] : extra.items()) {
    if (params.contains(k)) throw CLI::ValidationError("--" + k + " given twice");
    params[k] = v;
  }
}

bool write_out(char *text) {
  std::fputs(text, stdout);
  galkit_string_free(text);
  return std::fflush(stdout) == 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Permutation group and polynomial checks"};
  app.require_subcommand(1);

  std::string family, check, format = "text", params_text;
  std::uint64_t seed = 0, subgroup_bound = 512, degree_budget = 300;
  bool timings = false, list = false;

  auto *construct = app.add_subcommand("construct", "Build a group or polynomial");
  construct->add_option("family", family, "cyclic, dihedral, symmetric, alternating, heisenberg, "
                                          "dpcp, hberger, extraspecial, transitive or fp")
      ->required();
  construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--params", params_text, "Parameters as a JSON object");
  construct->allow_extras();

  auto *verify = app.add_subcommand("verify", "Run checks");
  verify->add_option("check", check, "Check name or 'all'");
  verify->add_flag("--list", list, "List check names");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed);
  verify->add_option("--subgroup-bound", subgroup_bound)->check(CLI::PositiveNumber);
  verify->add_option("--degree-budget", degree_budget)->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "Record wall-clock time per check");
  verify->add_option("--params", params_text, "Parameters as a JSON object");
  verify->allow_extras();

  nlohmann::json params;
  try {
    app.parse(argc, argv);
    auto *active = construct->parsed() ? construct : verify;
    params = collect_params(active->remaining());
    merge_params(params, params_text);
    if (verify->parsed() && !list && check.empty()) throw CLI::RequiredError("check");
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  const galkit_format fmt = format == "json" ? GALKIT_FORMAT_JSON : GALKIT_FORMAT_TEXT;

  if (construct->parsed()) {
    char *out = nullptr;
    const std::string p = params.dump();
    if (auto s = galkit_construct(family.c_str(), p.c_str(), fmt, &out); s != GALKIT_OK)
      return report_error(s);
    return write_out(out) ? 0 : kExitFail;
  }

  if (list) {
    char *out = nullptr;
    if (auto s = galkit_check_names(&out); s != GALKIT_OK) return report_error(s);
    return write_out(out) ? 0 : kExitFail;
  }

  nlohmann::json config = {{"subgroup_bound", subgroup_bound},
                           {"degree_budget", degree_budget},
                           {"seed", seed}};
  if (check == "all") {
    if (!params.empty()) {
      std::cerr << "galkit: 'verify all' takes no check parameters\n";
      return kExitUsage;
    }
    config["checks"] = "all";
  } else {
    config["checks"] = nlohmann::json::array({{{"name", check}, {"params", params}}});
  }

  galkit_reports *reports = nullptr;
  const std::string text = config.dump();
  if (auto s = galkit_suite_run(text.c_str(), &reports); s != GALKIT_OK) return report_error(s);
  char *out = nullptr;
  if (auto s = galkit_reports_emit(reports, fmt, timings ? 1 : 0, &out); s != GALKIT_OK) {
    galkit_reports_free(reports);
    return report_error(s);
  }
  const int rc = galkit_reports_exit_code(reports);
  galkit_reports_free(reports);
  return write_out(out) ? rc : kExitFail;
}
