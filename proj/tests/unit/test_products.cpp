#include <random>

#include "doctest.h"
#include "galkit/products.hpp"
#include "galkit/subgroups.hpp"
#include "support/oracles.hpp"

using namespace galkit;

namespace {

PermutationGroup group_of(std::size_t n, std::initializer_list<const char *> gens) {
  std::vector<Permutation> v;
  for (const char *g : gens) v.push_back(parse_permutation(g, n));
  return PermutationGroup(std::move(v));
}

PermutationGroup s3() { return group_of(3, {"(1 2)", "(1 2 3)"}); }

/// Generator-image tuples that define isomorphisms, found by trying every
/// tuple of target elements and closing the graph explicitly.
std::size_t brute_automorphism_count(const PermutationGroup &g, const PermutationGroup &h) {
  auto ge = oracle::closure(g.generators(), g.degree());
  auto he = oracle::closure(h.generators(), h.degree());
  if (ge.size() != he.size()) return 0;
  std::vector<Permutation> targets(he.begin(), he.end());
  const auto &gens = g.generators();
  std::size_t count = 0;
  std::vector<std::size_t> pick(gens.size(), 0);
  for (;;) {
    std::vector<Permutation> pairs, images;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      pairs.push_back(pair_permutation(gens[i], targets[pick[i]]));
      images.push_back(targets[pick[i]]);
    }
    if (oracle::closure(pairs, g.degree() + h.degree()).size() == ge.size() &&
        oracle::closure(images, h.degree()).size() == he.size())
      ++count;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == targets.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return count;
}

std::set<oracle::ElementSet> as_sets(const std::vector<PermutationGroup> &groups) {
  std::set<oracle::ElementSet> out;
  for (const auto &g : groups) out.insert(oracle::closure(g.generators(), g.degree()));
  return out;
}

}  // namespace

TEST_CASE("direct products") {
  auto p = direct_product({s3(), s3()});
  CHECK(p.combined.degree() == 6);
  CHECK(p.combined.order() == 36);
  auto d3c3 = direct_product({group_of(3, {"(1 2 3)", "(2 3)"}), group_of(3, {"(1 2 3)"})});
  CHECK(d3c3.combined.order() == 18);
  auto single = direct_product({s3()});
  CHECK(single.combined == s3());
  CHECK(p.offsets == std::vector<std::size_t>{0, 3});
  CHECK_THROWS_AS(direct_product({}), Error);
  auto x = parse_permutation("(1 2)(4 5 6)", 6);
  CHECK(p.project(1, x) == parse_permutation("(1 2 3)", 3));
  CHECK(p.embed(1, parse_permutation("(1 2 3)", 3)) == parse_permutation("(4 5 6)", 6));
}

TEST_CASE("is_subdirect") {
  auto p = direct_product({s3(), s3()});
  CHECK(is_subdirect(group_of(6, {"(1 2 3)(4 5 6)", "(1 2)(4 5)"}), p));
  CHECK_FALSE(is_subdirect(group_of(6, {"(1 2 3)(4 5 6)"}), p));
  CHECK_THROWS_AS(is_subdirect(group_of(6, {"(1 4)"}), p), Error);
}

TEST_CASE("certify_homomorphism") {
  auto c2 = group_of(2, {"(1 2)"});
  HomomorphismSpec sign{s3(), c2, {parse_permutation("(1 2)", 2), Permutation(2)}};
  CHECK(certify_homomorphism(sign));
  auto c4 = group_of(4, {"(1 2 3 4)"});
  CHECK(certify_homomorphism({c4, c2, {parse_permutation("(1 2)", 2)}}));
  auto c3 = group_of(3, {"(1 2 3)"});
  HomomorphismSpec bad{s3(), c3, {parse_permutation("(1 2 3)", 3), Permutation(3)}};
  CHECK_FALSE(certify_homomorphism(bad));
  CHECK(bad.graph().order() > 6);
  CHECK_THROWS_AS(certify_homomorphism({s3(), c2, {Permutation(2)}}), Error);
  CHECK_THROWS_AS(certify_homomorphism({s3(), c2, {Permutation(3), Permutation(3)}}), Error);
}

TEST_CASE("property: certified maps respect products") {
  std::mt19937_64 rng(8);
  auto s4 = group_of(4, {"(1 2)", "(1 2 3 4)"});
  auto v4 = group_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto q = quotient_as_permgroup(s4, v4);
  HomomorphismSpec proj{s4, q.action, q.action.generators()};
  REQUIRE(certify_homomorphism(proj));
  auto elems = enumerate_elements(s4, 24);
  for (int i = 0; i < 100; ++i) {
    const auto &x = elems[rng() % elems.size()];
    CHECK(proj.apply(x) == q.project(x));
    for (int j = 0; j < 20; ++j) {
      const auto &y = elems[rng() % elems.size()];
      CHECK(proj.apply(x * y) == proj.apply(x) * proj.apply(y));
    }
  }
}

TEST_CASE("find_isomorphism") {
  auto c4 = group_of(4, {"(1 2 3 4)"});
  auto v4 = group_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK_FALSE(find_isomorphism(c4, v4));
  auto d3 = group_of(3, {"(1 2 3)", "(2 3)"});
  auto iso = find_isomorphism(s3(), d3);
  REQUIRE(iso);
  CHECK(is_isomorphism(*iso));
  CHECK_FALSE(find_isomorphism(s3(), group_of(6, {"(1 2 3 4 5 6)"})));
  CHECK_THROWS_AS(find_isomorphism(s3(), d3, 3), Error);
}

TEST_CASE("isomorphism counts match brute force") {
  std::vector<PermutationGroup> groups = {
      s3(), group_of(5, {"(1 2 3 4 5)"}), group_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"}),
      group_of(4, {"(1 2 3 4)", "(1 3)"}), group_of(4, {"(1 2)", "(1 2 3 4)"}),
      group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"})};
  for (const auto &g : groups) {
    auto all = enumerate_isomorphisms(g, g);
    CHECK(all.size() == brute_automorphism_count(g, g));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].images < all[i].images);
    REQUIRE(find_isomorphism(g, g));
    CHECK(find_isomorphism(g, g)->images == all.front().images);
  }
}

TEST_CASE("fibered products") {
  auto a3 = group_of(3, {"(1 2 3)"});
  auto q1 = quotient_as_permgroup(s3(), a3);
  auto iso = find_isomorphism(q1.action, q1.action);
  REQUIRE(iso);
  auto f = fibered_product({s3(), s3(), a3, a3, *iso});
  CHECK(f.order() == 18);
  CHECK(is_subdirect(f, direct_product({s3(), s3()})));

  auto q0 = quotient_as_permgroup(s3(), s3());
  auto full = fibered_product({s3(), s3(), s3(), s3(), *find_isomorphism(q0.action, q0.action)});
  CHECK(full.order() == 36);

  auto s5 = group_of(5, {"(1 2)", "(1 2 3 4 5)"});
  auto one = PermutationGroup::trivial(5);
  auto qs = quotient_as_permgroup(s5, one, 200);
  HomomorphismSpec identity{qs.action, qs.action, qs.action.generators()};
  auto diag = fibered_product({s5, s5, one, one, identity});
  CHECK(diag.order() == 120);

  HomomorphismSpec wrong{q1.action, q1.action,
                         std::vector<Permutation>(q1.action.generators().size(),
                                                  q1.action.identity())};
  CHECK_THROWS_AS(fibered_product({s3(), s3(), a3, a3, wrong}), Error);
}

TEST_CASE("Goursat enumeration") {
  CHECK(enumerate_subdirect_products(s3(), s3()).size() == 8);
  auto c5 = group_of(5, {"(1 2 3 4 5)"});
  // Full product plus the graphs of the four automorphisms.
  CHECK(enumerate_subdirect_products(c5, c5).size() == 5);
  CHECK(enumerate_subdirect_products(group_of(2, {"(1 2)"}), group_of(3, {"(1 2 3)"})).size() ==
        1);
  CHECK_THROWS_AS(enumerate_subdirect_products(s3(), s3(), 5), Error);
}

TEST_CASE("property: Goursat enumeration equals filtered subgroup lists") {
  std::vector<PermutationGroup> groups = {
      group_of(2, {"(1 2)"}), group_of(3, {"(1 2 3)"}), s3(), group_of(5, {"(1 2 3 4 5)"}),
      group_of(4, {"(1 2 3 4)"}), group_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"}),
      group_of(4, {"(1 2 3 4)", "(1 3)"}), group_of(4, {"(1 2 3)", "(2 3 4)"}),
      group_of(4, {"(1 2)", "(1 2 3 4)"})};
  int oracle_checked = 0;
  for (const auto &g1 : groups)
    for (const auto &g2 : groups) {
      if (g1.order() * g2.order() > 1296) continue;
      auto emb = direct_product({g1, g2});
      auto ours = enumerate_subdirect_products(g1, g2);
      for (const auto &s : ours) {
        CHECK(is_subdirect(s, emb));
        CHECK(s.is_subgroup_of(emb.combined));
      }
      std::vector<PermutationGroup> expected;
      for (auto &s : enumerate_subgroups(emb.combined, 1296).members)
        if (is_subdirect(s, emb)) expected.push_back(std::move(s));
      CHECK(as_sets(ours) == as_sets(expected));
      if (emb.combined.order() <= 36) {
        std::set<oracle::ElementSet> brute;
        auto pe = oracle::closure(emb.combined.generators(), emb.combined.degree());
        for (const auto &s : oracle::all_subgroups(pe, emb.combined.degree())) {
          std::vector<Permutation> gens(s.begin(), s.end());
          if (is_subdirect(PermutationGroup(gens), emb)) brute.insert(s);
        }
        CHECK(as_sets(ours) == brute);
        ++oracle_checked;
      }
    }
  CHECK(oracle_checked > 5);
}
