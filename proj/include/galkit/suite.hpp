#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galkit/report.hpp"
#include "json.hpp"

namespace galkit {

/// Check names in registry order.
const std::vector<std::string> &check_names();

struct CheckRequest {
  std::string name;
  /// Empty for the default instances of the check.
  nlohmann::json params = nlohmann::json::object();
};

struct SuiteConfig {
  std::vector<CheckRequest> checks;
  std::uint64_t subgroup_bound = 512;
  std::uint64_t degree_budget = 300;
  std::uint64_t seed = 0;
};

/// {"checks": [{"name": ..., "params": {...}}] or "all", "subgroup_bound",
/// "degree_budget", "seed"}. Rejects unknown checks, unknown parameters and
/// non-positive bounds with invalid_argument.
SuiteConfig parse_suite_config(const nlohmann::json &j);

/// Runs every request. Budget overruns become skipped reports; argument and
/// precondition errors propagate. Reports come back in registry order, then
/// by parameters.
std::vector<CheckReport> run_suite(const SuiteConfig &config);

/// Families: cyclic, dihedral, symmetric, alternating (d); heisenberg (p);
/// dpcp (p, n); hberger (p, q); extraspecial (p, n, degree_budget);
/// transitive (d); fp (ell, p).
nlohmann::json construct(const std::string &family, const nlohmann::json &params);
std::string render_construction(const nlohmann::json &construction);

}  // namespace galkit
