#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace galkit {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);
CheckStatus parse_status(const std::string &text);

struct Witness {
  std::string label;
  nlohmann::json value;

  friend bool operator==(const Witness &, const Witness &) = default;
};

struct CheckReport {
  std::string check_name;
  /// Keys sort lexicographically, which fixes the serialized order.
  std::map<std::string, nlohmann::json> params;
  CheckStatus status = CheckStatus::pass;
  std::vector<Witness> witnesses;
  std::chrono::duration<double, std::milli> elapsed{0};

  void witness(std::string label, nlohmann::json value) {
    witnesses.push_back({std::move(label), std::move(value)});
  }

  friend bool operator==(const CheckReport &a, const CheckReport &b) {
    return a.check_name == b.check_name && a.params == b.params && a.status == b.status &&
           a.witnesses == b.witnesses && a.elapsed.count() == b.elapsed.count();
  }
};

/// {check, params, status, witnesses, elapsed_ms}. With `timings` false the
/// elapsed time is written as 0 so that output is reproducible.
nlohmann::json report_to_json(const CheckReport &report, bool timings = false);
CheckReport report_from_json(const nlohmann::json &j);

nlohmann::json reports_to_json(const std::vector<CheckReport> &reports, bool timings = false);
std::vector<CheckReport> reports_from_json(const nlohmann::json &j);

std::string render_text(const std::vector<CheckReport> &reports, bool timings = false);

}  // namespace galkit
