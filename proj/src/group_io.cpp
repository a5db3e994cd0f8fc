#include "galkit/group_io.hpp"

#include <algorithm>

namespace galkit {

nlohmann::json group_to_json(const PermutationGroup &g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &x : g.generators()) gens.push_back(x.to_string());
  return {{"degree", g.degree()}, {"generators", std::move(gens)}};
}

PermutationGroup group_from_json(const nlohmann::json &j) {
  std::size_t degree = 0;
  std::vector<std::string> texts;
  try {
    degree = j.at("degree").get<std::size_t>();
    texts = j.at("generators").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::parse_error, std::string("malformed group: ") + e.what());
  }
  if (degree == 0) fail(ErrorCode::parse_error, "group degree must be positive");
  std::vector<Permutation> gens;
  for (const auto &t : texts) gens.push_back(parse_permutation(t, degree));
  if (gens.empty()) return PermutationGroup::trivial(degree);
  return PermutationGroup(std::move(gens));
}

PermutationGroup parse_group(const std::string &text, std::size_t degree) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      fail(ErrorCode::parse_error, std::string("malformed group JSON: ") + e.what());
    }
    return group_from_json(j);
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(';', start);
    parts.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (degree == 0)
    for (const auto &p : parts) degree = std::max(degree, max_point_in(p));
  if (degree == 0) fail(ErrorCode::parse_error, "cannot infer a degree from '" + text + "'");
  std::vector<Permutation> gens;
  for (const auto &p : parts) gens.push_back(parse_permutation(p, degree));
  return PermutationGroup(std::move(gens));
}

nlohmann::json bigint_to_json(const BigInt &n) {
  if (n >= 0 && n <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return static_cast<std::uint64_t>(n);
  if (n < 0 && n >= BigInt(std::numeric_limits<std::int64_t>::min()))
    return static_cast<std::int64_t>(n);
  return n.str();
}

}  // namespace galkit
