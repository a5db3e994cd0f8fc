#pragma once

#include <string>

#include "galkit/perm_group.hpp"
#include "json.hpp"

namespace galkit {

/// {"degree": n, "generators": ["(1,2,3)", ...]}
nlohmann::json group_to_json(const PermutationGroup &g);
PermutationGroup group_from_json(const nlohmann::json &j);

/// Accepts the JSON form, or cycle text with generators separated by ';'
/// (e.g. "(1,2,3);(1,2)"). Cycle text infers the degree unless `degree` is
/// given.
PermutationGroup parse_group(const std::string &text, std::size_t degree = 0);

/// BigInt as a JSON number when it fits a 64-bit integer, else as a decimal string.
nlohmann::json bigint_to_json(const BigInt &n);

}  // namespace galkit
