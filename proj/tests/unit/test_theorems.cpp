#include <map>

#include "doctest.h"
#include "galkit/group_io.hpp"
#include "galkit/theorems.hpp"
#include "support/catalog_oracle.hpp"
#include "support/oracles.hpp"

using namespace galkit;

namespace {

const nlohmann::json &witness(const CheckReport &r, const std::string &label) {
  for (const auto &w : r.witnesses)
    if (w.label == label) return w.value;
  FAIL("missing witness " << label);
  static nlohmann::json none;
  return none;
}

bool has_witness(const CheckReport &r, const std::string &label) {
  for (const auto &w : r.witnesses)
    if (w.label == label) return true;
  return false;
}

PermutationGroup sym(std::size_t d) { return standard_group(StandardFamily::symmetric, d); }

PermutationGroup subdirect_of_order(const PermutationGroup &a, const PermutationGroup &b,
                                    std::uint64_t order) {
  for (const auto &s : enumerate_subdirect_products(a, b))
    if (s.order() == order) return s;
  FAIL("no subdirect product of order " << order);
  return {};
}

}  // namespace

TEST_CASE("transitive catalogs") {
  const std::map<std::size_t, std::size_t> expected = {{2, 1}, {3, 2}, {4, 5},
                                                        {5, 5}, {6, 16}, {7, 7}};
  for (auto [d, count] : expected) {
    const auto &cat = transitive_groups(d);
    CHECK(cat.degree == d);
    CHECK(cat.classes.size() == count);
    for (const auto &g : cat.classes) {
      CHECK(g.degree() == d);
      CHECK(is_transitive(g));
    }
  }
  std::vector<std::uint64_t> orders;
  for (const auto &g : transitive_groups(5).classes) orders.push_back(g.order_u64());
  CHECK(orders == std::vector<std::uint64_t>{5, 10, 20, 60, 120});
  CHECK_THROWS_AS(transitive_groups(1), Error);
  CHECK_THROWS_AS(transitive_groups(8), Error);
}

TEST_CASE("transitive catalogs match an independent recount") {
  for (std::size_t d = 2; d <= 7; ++d) {
    CAPTURE(d);
    oracle::SymmetricTable table(d);
    auto brute = oracle::transitive_classes(table);
    const auto &cat = transitive_groups(d).classes;
    REQUIRE(brute.classes.size() == cat.size());
    std::vector<std::size_t> brute_orders, cat_orders;
    for (const auto &h : brute.classes) brute_orders.push_back(h.size());
    // Each library class lies in a distinct oracle class.
    std::set<std::size_t> hit;
    for (const auto &g : cat) {
      cat_orders.push_back(g.order_u64());
      std::vector<std::uint16_t> elements;
      for (const auto &x : enumerate_elements(g, 5040))
        elements.push_back(static_cast<std::uint16_t>(table.index_of(x)));
      std::sort(elements.begin(), elements.end());
      auto it = brute.class_of.find(elements);
      REQUIRE(it != brute.class_of.end());
      hit.insert(it->second);
    }
    CHECK(brute_orders == cat_orders);
    CHECK(hit.size() == cat.size());
  }
}

TEST_CASE("p-cycle lemma") {
  auto r5 = check_pcycle_lemma(5, 3);
  CHECK(r5.status == CheckStatus::pass);
  CHECK(witness(r5, "classes_with_p_cycle").size() == 2);
  auto r7 = check_pcycle_lemma(7, 5);
  CHECK(r7.status == CheckStatus::pass);
  auto survivors = witness(r7, "classes_with_p_cycle");
  REQUIRE(survivors.size() == 2);
  CHECK(survivors[0]["order"] == 2520);
  CHECK(survivors[1]["order"] == 5040);
  // PSL(2,5) and PGL(2,5) act transitively on the projective line.
  auto r6 = check_pcycle_lemma(6, 5);
  CHECK(r6.status == CheckStatus::fail);
  std::vector<int> bad;
  for (const auto &w : r6.witnesses)
    if (w.label == "counterexample") bad.push_back(w.value["order"].get<int>());
  CHECK(bad == std::vector<int>{60, 120});
  CHECK_THROWS_AS(check_pcycle_lemma(7, 3), Error);
  CHECK_THROWS_AS(check_pcycle_lemma(7, 7), Error);
  CHECK_THROWS_AS(check_pcycle_lemma(6, 4), Error);
}

TEST_CASE("noquot prime") {
  auto r5 = find_noquot_prime(5);
  CHECK(r5.prime == 3u);
  CHECK(r5.report.status == CheckStatus::pass);
  CHECK(witness(r5.report, "prime") == 3);
  auto r7 = find_noquot_prime(7);
  CHECK(r7.prime == 5u);
  auto r4 = find_noquot_prime(4);
  CHECK_FALSE(r4.prime);
  CHECK(r4.report.status == CheckStatus::fail);
  CHECK(witness(r4.report, "p=3 rejected: C_p quotient")["order"] == 12);
  auto r6 = find_noquot_prime(6);
  CHECK_FALSE(r6.prime);
  CHECK(has_witness(r6.report, "p=5 rejected: p-cycle lemma"));
}

TEST_CASE("noquot pairs") {
  auto r = brute_check_noquot_pairs(5, 3);
  CHECK(r.status == CheckStatus::pass);
  CHECK(witness(r, "pairs") == 25);
  auto bad = brute_check_noquot_pairs(3, 2);
  CHECK(bad.status == CheckStatus::fail);
  CHECK(has_witness(bad, "counterexample"));
  CHECK(brute_check_noquot_pairs(5, 7).status == CheckStatus::pass);
  CHECK_THROWS_AS(brute_check_noquot_pairs(6, 5), Error);
}

TEST_CASE("pair check detects every single-factor cyclic quotient") {
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::uint64_t p : {2, 3, 5}) {
      bool single = false;
      for (const auto &g : transitive_groups(d).classes)
        if (abelian_quotient_order(g) % p == 0) single = true;
      auto pairs = brute_check_noquot_pairs(d, p);
      CAPTURE(d);
      CAPTURE(p);
      if (single) CHECK(pairs.status == CheckStatus::fail);
      if (pairs.status == CheckStatus::pass) CHECK_FALSE(single);
    }
}

TEST_CASE("goursat check") {
  auto r = check_goursat(sym(3), sym(3));
  CHECK(r.status == CheckStatus::pass);
  CHECK(witness(r, "goursat_count") == 8);
  CHECK(witness(r, "brute_force_count") == 8);
  CHECK(witness(r, "fibered_order_identity_holds") == 8);
  auto c5 = standard_group(StandardFamily::cyclic, 5);
  CHECK(check_goursat(c5, c5).status == CheckStatus::pass);
}

TEST_CASE("dpcp check") {
  auto r = check_dpcp(3, 2);
  CHECK(r.status == CheckStatus::pass);
  CHECK(witness(r, "intersection_order") == 9);
  for (auto [p, n] : {std::pair{3, 3}, std::pair{5, 2}, std::pair{5, 3}})
    CHECK(check_dpcp(p, n).status == CheckStatus::pass);
}

TEST_CASE("extraspecial check") {
  auto one = check_extraspecial(3, 1);
  CHECK(one.status == CheckStatus::pass);
  CHECK(witness(one, "qualifying_subgroups") == 1);
  auto r = check_extraspecial(3, 2);
  CHECK(r.status == CheckStatus::pass);
  CHECK(witness(r, "maximal_subgroups") == 40);
  CHECK(witness(r, "maximal_subgroup_order") == 81);
  CHECK(witness(r, "intersection_order") == 3);
  CHECK(witness(r, "coset_action_cross_check")["agrees"] == true);
  auto r5 = check_extraspecial(5, 2);
  CHECK(r5.status == CheckStatus::pass);
  CHECK(witness(r5, "maximal_subgroups") == 156);
  CHECK(witness(r5, "intersection_order") == 5);
  CHECK(check_extraspecial(3, 5).status == CheckStatus::skipped);
}

TEST_CASE("hberger check") {
  auto r = check_hberger(3, 7);
  CHECK(r.status == CheckStatus::pass);
  CHECK(witness(r, "eta") == "(2 6 5 7 3 4)");
  CHECK(witness(r, "tau") == "(2 5 3)(6 7 4)");
  CHECK(witness(r, "order") == 9261);
  CHECK(witness(r, "solvable") == true);
  CHECK(witness(r, "quotient_isomorphism")["quotient"]["order"] == 27);
  CHECK(check_hberger(3, 13).status == CheckStatus::pass);
  CHECK_THROWS_AS(check_hberger(3, 11), Error);
}

TEST_CASE("bigboy check examples") {
  auto s3 = sym(3);
  auto g = subdirect_of_order(s3, s3, 18);
  auto r = check_bigboy({s3, s3}, g, derived_subgroup(g));
  CHECK(r.status == CheckStatus::pass);
  CHECK(witness(r, "normal_order") == 9);
  CHECK(check_bigboy({s3, s3}, g, PermutationGroup::trivial(6)).status == CheckStatus::pass);
  auto s5 = sym(5);
  auto emb = direct_product({s5, s5});
  std::vector<Permutation> a5;
  auto alt = standard_group(StandardFamily::alternating, 5);
  for (const auto &x : alt.generators())
    a5.push_back(emb.embed(0, x));
  CHECK(check_bigboy({s5, s5}, emb.combined, PermutationGroup(a5)).status == CheckStatus::pass);
  // Preconditions.
  auto w = dpcp_group(3, 2);
  auto d3 = standard_group(StandardFamily::dihedral, 3);
  auto c3 = standard_group(StandardFamily::cyclic, 3);
  CHECK_THROWS_AS(check_bigboy({d3, c3}, w.group, w.h), Error);
  CHECK_THROWS_AS(check_bigboy({s3, s3}, PermutationGroup::trivial(6), PermutationGroup::trivial(6)),
                  Error);
  CHECK_THROWS_AS(check_bigboy({standard_group(StandardFamily::cyclic, 4)},
                               standard_group(StandardFamily::cyclic, 4), PermutationGroup::trivial(4)),
                  Error);
}

TEST_CASE("bigboy recovers normal subgroups, not the dpcp subgroup") {
  auto exhaustive = check_bigboy_family(3, 0, 0);
  CHECK(exhaustive.status == CheckStatus::pass);
  CHECK(witness(exhaustive, "instances") == witness(exhaustive, "recovered"));
  auto sampled = check_bigboy_family(5, 50, 0);
  CHECK(sampled.status == CheckStatus::pass);
  CHECK(witness(sampled, "recovered") == 50);
  auto w = dpcp_group(3, 2);
  auto closure = d_closure(w.group, w.h, 3);
  CHECK(closure != w.h);
  CHECK(closure.order() > w.h.order());
}

TEST_CASE("bigboy sampling is seed deterministic") {
  auto a = check_bigboy_family(5, 5, 7);
  auto b = check_bigboy_family(5, 5, 7);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("rirw check") {
  auto s4 = check_rirw(sym(4), 4);
  CHECK(s4.status == CheckStatus::pass);
  CHECK(witness(s4, "closure_trivial") == true);
  CHECK(witness(s4, "faithful_action_exists") == true);
  auto s4_3 = check_rirw(sym(4), 3);
  CHECK(s4_3.status == CheckStatus::pass);
  CHECK(witness(s4_3, "closure_trivial") == false);
  CHECK(witness(s4_3, "faithful_action_exists") == false);
  CHECK(witness(s4_3, "closure")["order"] == 4);
  auto d = check_rirw(dpcp_group(3, 2).group, 3);
  CHECK(d.status == CheckStatus::pass);
  CHECK(witness(d, "faithful_action_exists") == true);
}

TEST_CASE("gtb check") {
  for (std::uint64_t p : {3, 5, 7}) {
    auto r = check_gtb(p);
    CHECK(r.status == CheckStatus::pass);
    CHECK(witness(r, "classes").size() == transitive_groups(p).classes.size());
  }
  auto rows = witness(check_gtb(7), "classes");
  CHECK(rows[4]["T_order"] == 168);
  CHECK(rows[4]["B_order"] == 1);
  CHECK_THROWS_AS(check_gtb(11), Error);
}

TEST_CASE("report serialization") {
  auto r = check_dpcp(3, 2);
  auto j = report_to_json(r, true);
  CHECK(report_from_json(j) == r);
  auto zero = report_to_json(r);
  CHECK(zero["elapsed_ms"] == 0.0);
  std::vector<std::string> keys;
  for (auto it = zero.begin(); it != zero.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check", "elapsed_ms", "params", "status", "witnesses"});
  CHECK(reports_to_json({}).dump() == "[]");
  CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), Error);
  auto text = render_text({r});
  CHECK(text.find("PASS  dpcp n=2 p=3") == 0);
}

TEST_CASE("group json") {
  auto g = dpcp_group(3, 2).group;
  auto back = group_from_json(group_to_json(g));
  CHECK(back == g);
  CHECK(back.generators() == g.generators());
  CHECK(parse_group("(1,2,3);(1,2)") == sym(3));
  CHECK(parse_group(group_to_json(g).dump()) == g);
  CHECK_THROWS_AS(parse_group("{\"degree\": 3}"), Error);
}
