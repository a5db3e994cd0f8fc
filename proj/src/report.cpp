#include "galkit/report.hpp"

#include <sstream>

#include "galkit/error.hpp"

namespace galkit {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

CheckStatus parse_status(const std::string &text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "skipped") return CheckStatus::skipped;
  fail(ErrorCode::parse_error, "unknown status '" + text + "'");
}

nlohmann::json report_to_json(const CheckReport &report, bool timings) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto &[k, v] : report.params) params[k] = v;
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto &w : report.witnesses)
    witnesses.push_back({{"label", w.label}, {"value", w.value}});
  nlohmann::json j;
  j["check"] = report.check_name;
  j["params"] = std::move(params);
  j["status"] = to_string(report.status);
  j["witnesses"] = std::move(witnesses);
  j["elapsed_ms"] = timings ? report.elapsed.count() : 0.0;
  return j;
}

CheckReport report_from_json(const nlohmann::json &j) {
  try {
    CheckReport r;
    r.check_name = j.at("check").get<std::string>();
    for (const auto &[k, v] : j.at("params").items()) r.params[k] = v;
    r.status = parse_status(j.at("status").get<std::string>());
    for (const auto &w : j.at("witnesses"))
      r.witnesses.push_back({w.at("label").get<std::string>(), w.at("value")});
    r.elapsed = std::chrono::duration<double, std::milli>(j.at("elapsed_ms").get<double>());
    return r;
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::parse_error, std::string("malformed report: ") + e.what());
  }
}

nlohmann::json reports_to_json(const std::vector<CheckReport> &reports, bool timings) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &r : reports) out.push_back(report_to_json(r, timings));
  return out;
}

std::vector<CheckReport> reports_from_json(const nlohmann::json &j) {
  if (!j.is_array()) fail(ErrorCode::parse_error, "report list must be a JSON array");
  std::vector<CheckReport> out;
  for (const auto &item : j) out.push_back(report_from_json(item));
  return out;
}

namespace {

std::string compact(const nlohmann::json &value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

std::string render_text(const std::vector<CheckReport> &reports, bool timings) {
  std::ostringstream out;
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto &r : reports) {
    switch (r.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::fail: ++failed; break;
      case CheckStatus::skipped: ++skipped; break;
    }
    std::string label = to_string(r.status);
    for (auto &c : label) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << label << "  " << r.check_name;
    for (const auto &[k, v] : r.params) out << ' ' << k << '=' << compact(v);
    if (timings) out << "  (" << r.elapsed.count() << " ms)";
    out << '\n';
    for (const auto &w : r.witnesses) out << "    " << w.label << ": " << compact(w.value) << '\n';
  }
  out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

}  // namespace galkit
