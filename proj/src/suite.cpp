#include "galkit/suite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "galkit/group_io.hpp"
#include "galkit/polynomial.hpp"
#include "galkit/theorems.hpp"

namespace galkit {

namespace {

using Params = nlohmann::json;

struct Entry {
  std::string name;
  /// Keys that make up one instance; any of them given means all are needed.
  std::vector<std::string> keys;
  std::vector<std::string> optional;
  std::vector<Params> defaults;
  std::function<CheckReport(const Params &, const SuiteConfig &)> run;
};

std::uint64_t get_u64(const Params &p, const std::string &key) {
  const auto &v = p.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  fail(ErrorCode::invalid_argument, "--" + key + " must be a non-negative integer");
}

std::int64_t get_i64(const Params &p, const std::string &key) {
  const auto &v = p.at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  fail(ErrorCode::invalid_argument, "--" + key + " must be an integer");
}

PermutationGroup get_group(const Params &p, const std::string &key) {
  const auto &v = p.at(key);
  if (v.is_object()) return group_from_json(v);
  if (v.is_string()) return parse_group(v.get<std::string>());
  fail(ErrorCode::invalid_argument, "--" + key + " must be a group");
}

AnalysisOptions options_of(const SuiteConfig &c) {
  AnalysisOptions o;
  o.subgroup_bound = c.subgroup_bound;
  return o;
}

Params group_param(const PermutationGroup &g) { return group_to_json(g); }

PermutationGroup std_group(StandardFamily f, std::size_t d) { return standard_group(f, d); }

std::vector<Params> family_grid() {
  std::vector<Params> out;
  for (std::uint64_t ell : {3, 5, 7})
    for (std::int64_t p : {-1, 1, 2, 3, 5, 7, 11}) out.push_back({{"ell", ell}, {"p", p}});
  return out;
}

const std::vector<Entry> &registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back({"catalog", {"d"}, {},
                 {{{"d", 2}}, {{"d", 3}}, {{"d", 4}}, {{"d", 5}}, {{"d", 6}}, {{"d", 7}}},
                 [](const Params &p, const SuiteConfig &) { return check_catalog(get_u64(p, "d")); }});
    e.push_back({"pcycle", {"d", "p"}, {},
                 {{{"d", 5}, {"p", 3}}, {{"d", 6}, {"p", 5}}, {{"d", 7}, {"p", 5}}},
                 [](const Params &p, const SuiteConfig &) {
                   return check_pcycle_lemma(get_u64(p, "d"), get_u64(p, "p"));
                 }});
    e.push_back({"theorem1c", {"d"}, {},
                 {{{"d", 5}}, {{"d", 6}}, {{"d", 7}}},
                 [](const Params &p, const SuiteConfig &) {
                   return find_noquot_prime(get_u64(p, "d")).report;
                 }});
    e.push_back({"noquot-pairs", {"d", "p"}, {},
                 {{{"d", 5}, {"p", 3}}},
                 [](const Params &p, const SuiteConfig &) {
                   return brute_check_noquot_pairs(get_u64(p, "d"), get_u64(p, "p"));
                 }});
    e.push_back({"goursat", {"g1", "g2"}, {},
                 {{{"g1", group_param(std_group(StandardFamily::symmetric, 3))},
                   {"g2", group_param(std_group(StandardFamily::symmetric, 3))}},
                  {{"g1", group_param(std_group(StandardFamily::cyclic, 5))},
                   {"g2", group_param(std_group(StandardFamily::cyclic, 5))}},
                  {{"g1", group_param(std_group(StandardFamily::cyclic, 2))},
                   {"g2", group_param(std_group(StandardFamily::cyclic, 3))}}},
                 [](const Params &p, const SuiteConfig &c) {
                   return check_goursat(get_group(p, "g1"), get_group(p, "g2"), options_of(c));
                 }});
    e.push_back({"dpcp", {"p", "n"}, {},
                 {{{"p", 3}, {"n", 2}}, {{"p", 3}, {"n", 3}}, {{"p", 5}, {"n", 2}}},
                 [](const Params &p, const SuiteConfig &c) {
                   return check_dpcp(get_u64(p, "p"), get_u64(p, "n"), options_of(c));
                 }});
    e.push_back({"extraspecial", {"p", "n"}, {},
                 {{{"p", 3}, {"n", 1}}, {{"p", 3}, {"n", 2}}, {{"p", 5}, {"n", 2}}},
                 [](const Params &p, const SuiteConfig &c) {
                   return check_extraspecial(get_u64(p, "p"), get_u64(p, "n"), c.degree_budget,
                                             options_of(c));
                 }});
    e.push_back({"hberger", {"p", "q"}, {},
                 {{{"p", 3}, {"q", 7}}, {{"p", 3}, {"q", 13}}, {{"p", 5}, {"q", 11}}},
                 [](const Params &p, const SuiteConfig &c) {
                   return check_hberger(get_u64(p, "p"), get_u64(p, "q"), c.degree_budget);
                 }});
    e.push_back({"bigboy", {}, {"p", "samples", "components", "subdirect", "normal"},
                 {{{"p", 3}}, {{"p", 5}, {"samples", 50}}},
                 [](const Params &p, const SuiteConfig &c) {
                   if (p.contains("components") || p.contains("subdirect") || p.contains("normal")) {
                     if (!p.contains("components") || !p.contains("subdirect") || !p.contains("normal"))
                       fail(ErrorCode::invalid_argument,
                            "bigboy instances need --components, --subdirect and --normal");
                     std::vector<PermutationGroup> comps;
                     const auto &list = p.at("components");
                     if (!list.is_array())
                       fail(ErrorCode::invalid_argument, "--components must be a list of groups");
                     for (const auto &g : list)
                       comps.push_back(g.is_object() ? group_from_json(g)
                                                     : parse_group(g.get<std::string>()));
                     auto r = check_bigboy(comps, get_group(p, "subdirect"), get_group(p, "normal"),
                                           options_of(c));
                     return r;
                   }
                   if (!p.contains("p"))
                     fail(ErrorCode::invalid_argument, "bigboy needs --p or an explicit instance");
                   const std::uint64_t samples = p.contains("samples") ? get_u64(p, "samples") : 0;
                   return check_bigboy_family(get_u64(p, "p"), samples, c.seed, options_of(c));
                 }});
    e.push_back({"rirw", {"group", "d"}, {},
                 {{{"group", group_param(std_group(StandardFamily::symmetric, 4))}, {"d", 4}},
                  {{"group", group_param(std_group(StandardFamily::symmetric, 4))}, {"d", 3}},
                  {{"group", group_param(dpcp_group(3, 2).group)}, {"d", 3}}},
                 [](const Params &p, const SuiteConfig &c) {
                   return check_rirw(get_group(p, "group"), get_u64(p, "d"), options_of(c));
                 }});
    e.push_back({"gtb", {"p"}, {},
                 {{{"p", 3}}, {{"p", 5}}, {{"p", 7}}},
                 [](const Params &p, const SuiteConfig &) { return check_gtb(get_u64(p, "p")); }});
    e.push_back({"fp-irreducible", {"ell", "p"}, {}, family_grid(),
                 [](const Params &p, const SuiteConfig &) {
                   return check_fp_irreducible(get_u64(p, "ell"), get_i64(p, "p"));
                 }});
    e.push_back({"discriminant", {"ell", "p"}, {}, family_grid(),
                 [](const Params &p, const SuiteConfig &) {
                   return check_discriminant(get_u64(p, "ell"), get_i64(p, "p"));
                 }});
    e.push_back({"sqrt-witness", {"ell", "p"}, {}, family_grid(),
                 [](const Params &p, const SuiteConfig &) {
                   return check_sqrt_witness(get_u64(p, "ell"), get_i64(p, "p"));
                 }});
    return e;
  }();
  return entries;
}

const Entry &entry(const std::string &name) {
  for (const auto &e : registry())
    if (e.name == name) return e;
  fail(ErrorCode::invalid_argument, "unknown check '" + name + "'");
}

std::size_t registry_index(const std::string &name) {
  const auto &r = registry();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].name == name) return i;
  return r.size();
}

void validate_params(const Entry &e, const Params &params) {
  if (!params.is_object()) fail(ErrorCode::invalid_argument, "check parameters must be an object");
  std::set<std::string> allowed(e.keys.begin(), e.keys.end());
  allowed.insert(e.optional.begin(), e.optional.end());
  for (const auto &[k, v] : params.items())
    if (!allowed.count(k))
      fail(ErrorCode::invalid_argument, "check '" + e.name + "' has no parameter --" + k);
  if (params.empty()) return;
  for (const auto &k : e.keys)
    if (!params.contains(k))
      fail(ErrorCode::invalid_argument, "check '" + e.name + "' needs --" + k);
}

CheckReport run_one(const Entry &e, const Params &params, const SuiteConfig &config) {
  try {
    return e.run(params, config);
  } catch (const Error &err) {
    if (err.code() != ErrorCode::budget_exceeded) throw;
    CheckReport r;
    r.check_name = e.name;
    for (const auto &[k, v] : params.items()) r.params[k] = v;
    r.status = CheckStatus::skipped;
    r.witness("reason", std::string("budget: ") + err.what());
    return r;
  }
}

}  // namespace

const std::vector<std::string> &check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto &e : registry()) n.push_back(e.name);
    return n;
  }();
  return names;
}

SuiteConfig parse_suite_config(const nlohmann::json &j) {
  if (!j.is_object()) fail(ErrorCode::invalid_argument, "suite configuration must be an object");
  static const std::set<std::string> keys = {"checks", "subgroup_bound", "degree_budget", "seed"};
  for (const auto &[k, v] : j.items())
    if (!keys.count(k)) fail(ErrorCode::invalid_argument, "unknown configuration key '" + k + "'");
  SuiteConfig c;
  auto positive = [&](const char *key, std::uint64_t &out) {
    if (!j.contains(key)) return;
    const auto &v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
      fail(ErrorCode::invalid_argument, std::string(key) + " must be a positive integer");
    out = v.get<std::uint64_t>();
  };
  positive("subgroup_bound", c.subgroup_bound);
  positive("degree_budget", c.degree_budget);
  if (j.contains("seed")) {
    const auto &v = j.at("seed");
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      fail(ErrorCode::invalid_argument, "seed must be a non-negative integer");
    c.seed = v.get<std::uint64_t>();
  }
  const auto checks = j.value("checks", nlohmann::json("all"));
  if (checks.is_string() && checks.get<std::string>() == "all") {
    for (const auto &name : check_names()) c.checks.push_back({name});
  } else if (checks.is_array()) {
    for (const auto &item : checks) {
      CheckRequest req;
      if (item.is_string()) {
        req.name = item.get<std::string>();
      } else if (item.is_object() && item.contains("name") && item.at("name").is_string()) {
        req.name = item.at("name").get<std::string>();
        req.params = item.value("params", nlohmann::json::object());
      } else {
        fail(ErrorCode::invalid_argument, "malformed check request " + item.dump());
      }
      validate_params(entry(req.name), req.params);
      c.checks.push_back(std::move(req));
    }
  } else {
    fail(ErrorCode::invalid_argument, "checks must be \"all\" or a list");
  }
  return c;
}

std::vector<CheckReport> run_suite(const SuiteConfig &config) {
  std::vector<CheckReport> out;
  for (const auto &req : config.checks) {
    const auto &e = entry(req.name);
    validate_params(e, req.params);
    if (req.params.empty()) {
      for (const auto &d : e.defaults) out.push_back(run_one(e, d, config));
    } else {
      out.push_back(run_one(e, req.params, config));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport &a, const CheckReport &b) {
    auto ia = registry_index(a.check_name), ib = registry_index(b.check_name);
    if (ia != ib) return ia < ib;
    return a.params < b.params;
  });
  return out;
}

namespace {

nlohmann::json named(const std::string &name, const Permutation &x) {
  return {{"name", name}, {"cycles", x.to_string()}};
}

nlohmann::json group_construction(const std::string &family, const nlohmann::json &params,
                                  const PermutationGroup &g, std::vector<std::string> names = {}) {
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    gens.push_back(named(i < names.size() ? names[i] : "g" + std::to_string(i + 1),
                         g.generators()[i]));
  return {{"family", family},
          {"params", params},
          {"degree", g.degree()},
          {"order", bigint_to_json(g.order())},
          {"generators", gens},
          {"extra", nlohmann::json::object()}};
}

}  // namespace

nlohmann::json construct(const std::string &family, const nlohmann::json &params) {
  auto need = [&](std::initializer_list<const char *> keys, std::initializer_list<const char *> opt = {}) {
    std::set<std::string> allowed;
    for (auto k : keys) {
      allowed.insert(k);
      if (!params.contains(k))
        fail(ErrorCode::invalid_argument, "construct " + family + " needs --" + k);
    }
    for (auto k : opt) allowed.insert(k);
    for (const auto &[k, v] : params.items())
      if (!allowed.count(k))
        fail(ErrorCode::invalid_argument, "construct " + family + " has no parameter --" + k);
  };
  if (family == "cyclic" || family == "dihedral" || family == "symmetric" || family == "alternating") {
    need({"d"});
    return group_construction(family, params,
                              standard_group(parse_standard_family(family), get_u64(params, "d")));
  }
  if (family == "heisenberg") {
    need({"p"});
    return group_construction(family, params, heisenberg(get_u64(params, "p")),
                              {"central", "shear", "lift"});
  }
  if (family == "dpcp") {
    need({"p", "n"});
    auto w = dpcp_group(get_u64(params, "p"), get_u64(params, "n"));
    std::vector<std::string> names;
    for (std::uint64_t i = 1; i < w.n; ++i) {
      names.push_back("r_" + std::to_string(i));
      names.push_back("s_" + std::to_string(i));
    }
    names.push_back("r_" + std::to_string(w.n));
    auto j = group_construction(family, params, w.group, names);
    j["extra"]["H"] = group_to_json(w.h);
    return j;
  }
  if (family == "hberger") {
    need({"p", "q"});
    auto w = hberger_group(get_u64(params, "p"), get_u64(params, "q"));
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < w.p; ++i) names.push_back("sigma_" + std::to_string(i));
    names.insert(names.end(), {"alpha", "beta", "gamma"});
    auto j = group_construction(family, params, w.group, names);
    std::vector<Point> eta_order{1};
    for (Point y = w.eta[1]; y != 1; y = w.eta[y]) eta_order.push_back(y);
    j["extra"]["primitive_root"] = w.primitive_root;
    j["extra"]["m"] = w.m;
    j["extra"]["eta"] = w.eta.to_string_following(eta_order);
    j["extra"]["tau"] = w.tau.to_string_following(eta_order);
    return j;
  }
  if (family == "extraspecial") {
    need({"p", "n"}, {"degree_budget"});
    const std::uint64_t budget =
        params.contains("degree_budget") ? get_u64(params, "degree_budget") : kDefaultDegreeBudget;
    auto w = extraspecial(get_u64(params, "p"), get_u64(params, "n"), budget);
    auto j = group_construction(family, params, w.group);
    nlohmann::json z = nlohmann::json::array();
    for (const auto &x : w.z_images) z.push_back(x.to_string());
    j["extra"]["z"] = z;
    return j;
  }
  if (family == "transitive") {
    need({"d"});
    const auto &cat = transitive_groups(get_u64(params, "d"));
    nlohmann::json classes = nlohmann::json::array();
    for (const auto &g : cat.classes) {
      auto c = group_to_json(g);
      c["order"] = bigint_to_json(g.order());
      classes.push_back(c);
    }
    return {{"family", family}, {"params", params}, {"degree", cat.degree}, {"classes", classes}};
  }
  if (family == "fp") {
    need({"ell", "p"});
    auto f = fp_family(get_u64(params, "ell"), get_i64(params, "p"));
    return {{"family", family},
            {"params", params},
            {"polynomial", f.to_string()},
            {"coefficients", polynomial_to_json(f)},
            {"discriminant", discriminant(f).str()}};
  }
  fail(ErrorCode::invalid_argument, "unknown family '" + family + "'");
}

std::string render_construction(const nlohmann::json &c) {
  std::ostringstream out;
  auto plain = [](const nlohmann::json &v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  out << c.at("family").get<std::string>();
  for (const auto &[k, v] : c.at("params").items()) out << ' ' << k << '=' << plain(v);
  out << '\n';
  if (c.contains("polynomial")) {
    out << "polynomial: " << plain(c.at("polynomial")) << '\n';
    out << "discriminant: " << plain(c.at("discriminant")) << '\n';
    return out.str();
  }
  out << "degree: " << plain(c.at("degree")) << '\n';
  if (c.contains("classes")) {
    out << "classes: " << c.at("classes").size() << '\n';
    for (const auto &g : c.at("classes")) {
      out << "  order " << plain(g.at("order")) << ':';
      for (const auto &x : g.at("generators")) out << ' ' << x.get<std::string>();
      out << '\n';
    }
    return out.str();
  }
  out << "order: " << plain(c.at("order")) << '\n';
  out << "generators:\n";
  for (const auto &g : c.at("generators"))
    out << "  " << g.at("name").get<std::string>() << " = " << g.at("cycles").get<std::string>() << '\n';
  for (const auto &[k, v] : c.at("extra").items()) out << k << " = " << plain(v) << '\n';
  return out.str();
}

}  // namespace galkit
