#include <random>

#include "doctest.h"
#include "galkit/subgroups.hpp"
#include "support/oracles.hpp"

using namespace galkit;

namespace {

PermutationGroup group_of(std::size_t n, std::initializer_list<const char *> gens) {
  std::vector<Permutation> v;
  for (const char *g : gens) v.push_back(parse_permutation(g, n));
  return PermutationGroup(std::move(v));
}

PermutationGroup sym(std::size_t n) {
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<std::vector<Point>> cycle(1);
  for (Point i = 1; i <= n; ++i) cycle[0].push_back(i);
  return PermutationGroup({Permutation::from_cycles(n, {{1, 2}}),
                           Permutation::from_cycles(n, cycle)});
}

oracle::ElementSet elements(const PermutationGroup &g) {
  return oracle::closure(g.generators(), g.degree());
}

std::vector<std::size_t> orders_of(const SubgroupList &list) {
  std::vector<std::size_t> out;
  for (const auto &m : list.members) out.push_back(static_cast<std::size_t>(m.order()));
  return out;
}

}  // namespace

TEST_CASE("enumerate_subgroups matches the closure oracle") {
  auto s3 = sym(3);
  auto c6 = group_of(6, {"(1 2 3 4 5 6)"});
  auto s4 = sym(4);
  CHECK(oracle::all_subgroups(elements(s3), 3).size() == 6);
  CHECK(oracle::all_subgroups(elements(s4), 4).size() == 30);
  CHECK(enumerate_subgroups(s3).members.size() == 6);
  CHECK(enumerate_subgroups(c6).members.size() == 4);
  auto list = enumerate_subgroups(s4);
  CHECK(list.members.size() == 30);
  CHECK(list.completeness == Completeness::exhaustive);

  std::set<oracle::ElementSet> ours;
  for (const auto &m : list.members) {
    CHECK(m.is_subgroup_of(s4));
    ours.insert(elements(m));
  }
  CHECK(ours == oracle::all_subgroups(elements(s4), 4));
  auto orders = orders_of(list);
  CHECK(std::is_sorted(orders.begin(), orders.end()));
}

TEST_CASE("enumerate_subgroups respects its bound") {
  CHECK_THROWS_AS(enumerate_subgroups(sym(6), 512), Error);
}

TEST_CASE("subgroup classes include perfect subgroups") {
  auto classes = subgroup_classes(sym(5), 200);
  CHECK(classes.size() == 19);
  std::size_t total = 0;
  bool has_a5 = false;
  for (const auto &c : classes) {
    total += c.class_size;
    if (c.representative.order() == 60) has_a5 = true;
  }
  CHECK(total == 156);
  CHECK(has_a5);
}

TEST_CASE("subgroup classes of S5 agree with the oracle count") {
  CHECK(oracle::all_subgroups(elements(sym(5)), 5).size() == 156);
}

TEST_CASE("overgroups") {
  auto s4 = sym(4);
  auto top = overgroups(s4, s4);
  CHECK(top.members.size() == 1);
  auto c4 = group_of(4, {"(1 2 3 4)"});
  CHECK(overgroups(c4, PermutationGroup::trivial(4)).members.size() == 3);
  auto t = group_of(4, {"(1 2)"});
  std::size_t expected = 0;
  for (const auto &s : oracle::all_subgroups(elements(s4), 4))
    if (s.count(parse_permutation("(1 2)", 4))) ++expected;
  CHECK(overgroups(s4, t).members.size() == expected);
  CHECK_THROWS_AS(overgroups(c4, t), Error);
}

TEST_CASE("low index subgroups of S4") {
  auto s4 = sym(4);
  CHECK(orders_of(low_index_subgroups(s4, 4)) ==
        std::vector<std::size_t>{6, 6, 6, 6, 8, 8, 8, 12, 24});
  CHECK(orders_of(low_index_subgroups(s4, 3)) == std::vector<std::size_t>{8, 8, 8, 12, 24});
  CHECK(low_index_subgroups(s4, 1).members.size() == 1);
  CHECK(orders_of(low_index_subgroups(s4, 4, {}, LowIndexMethod::automatic,
                                      IndexFilter::exact)) ==
        std::vector<std::size_t>{6, 6, 6, 6});
}

TEST_CASE("normal-core route agrees with exhaustive filtering") {
  std::vector<PermutationGroup> groups = {
      sym(4), group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"}),
      group_of(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}),
      group_of(6, {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}),
      group_of(8, {"(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)", "(1 3)"})};
  for (const auto &g : groups)
    for (std::uint64_t d = 1; d <= 5; ++d)
      for (auto filter : {IndexFilter::at_most, IndexFilter::exact}) {
        auto a = low_index_subgroups(g, d, {}, LowIndexMethod::exhaustive, filter);
        auto b = low_index_subgroups(g, d, {}, LowIndexMethod::normal_core, filter);
        REQUIRE(a.members.size() == b.members.size());
        for (std::size_t i = 0; i < a.members.size(); ++i)
          CHECK(a.members[i] == b.members[i]);
      }
}

TEST_CASE("d_closure") {
  auto s4 = sym(4);
  auto one = PermutationGroup::trivial(4);
  CHECK(d_closure(s4, one, 4).is_trivial());
  auto v4 = d_closure(s4, one, 3);
  CHECK(v4.order() == 4);
  CHECK(is_normal_subgroup(s4, v4));
  CHECK(d_closure(s4, one, 1) == s4);
}

TEST_CASE("property: d_closure is extensive, idempotent and antitone in d") {
  std::mt19937_64 rng(11);
  std::vector<PermutationGroup> groups = {
      sym(4), group_of(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}),
      group_of(8, {"(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)", "(1 3)"})};
  for (const auto &g : groups) {
    auto elems = enumerate_elements(g, 512);
    for (int trial = 0; trial < 4; ++trial) {
      PermutationGroup h({elems[rng() % elems.size()]});
      PermutationGroup previous = g;
      for (std::uint64_t d = 1; d <= 6; ++d) {
        auto c = d_closure(g, h, d);
        CHECK(h.is_subgroup_of(c));
        CHECK(d_closure(g, c, d) == c);
        CHECK(c.is_subgroup_of(previous));
        previous = c;
      }
    }
  }
}

TEST_CASE("normal subgroups") {
  CHECK(orders_of(normal_subgroups(sym(4))) == std::vector<std::size_t>{1, 4, 12, 24});
  auto a5 = group_of(5, {"(1 2 3)", "(1 2 3 4 5)"});
  CHECK(normal_subgroups(a5).members.size() == 2);
  auto f20 = group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  CHECK(orders_of(normal_subgroups(f20)) == std::vector<std::size_t>{1, 5, 10, 20});
}

TEST_CASE("property: normal subgroups equal the normal members of the oracle lattice") {
  std::vector<PermutationGroup> groups = {
      sym(4), group_of(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}),
      group_of(6, {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}),
      group_of(8, {"(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)", "(1 3)"}),
      group_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"})};
  for (const auto &g : groups) {
    auto ge = elements(g);
    std::set<oracle::ElementSet> expected;
    for (const auto &s : oracle::all_subgroups(ge, g.degree()))
      if (oracle::is_normal(ge, s)) expected.insert(s);
    std::set<oracle::ElementSet> ours;
    for (const auto &n : normal_subgroups(g).members) ours.insert(elements(n));
    CHECK(ours == expected);
  }
}

TEST_CASE("quotients") {
  auto s4 = sym(4);
  auto v4 = group_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto q = quotient_as_permgroup(s4, v4);
  CHECK(q.action.degree() == 6);
  CHECK(q.action.order() == 6);
  CHECK_FALSE(q.action.is_abelian());
  auto whole = quotient_as_permgroup(s4, s4);
  CHECK(whole.action.degree() == 1);
  CHECK(whole.action.is_trivial());
  CHECK_THROWS_AS(quotient_as_permgroup(s4, group_of(4, {"(1 2)"})), Error);
  CHECK_THROWS_AS(quotient_as_permgroup(s4, PermutationGroup::trivial(4), 10), Error);

  for (const auto &x : enumerate_elements(s4, 24)) {
    auto image = q.project(x);
    CHECK(q.action.contains(image));
    CHECK(q.project(q.lift(image)) == image);
    CHECK(v4.contains(q.lift(image) * x.inverse()));
  }
}

TEST_CASE("property: quotient action is faithful on g/n") {
  for (const auto &g : {sym(4), group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"}),
                        group_of(8, {"(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)", "(1 3)"})}) {
    for (const auto &n : normal_subgroups(g).members) {
      auto q = quotient_as_permgroup(g, n);
      CHECK(q.action.order() * n.order() == g.order());
      PermutationGroup stab_all = q.action;
      for (Point p = 0; p < q.action.degree(); ++p)
        stab_all = intersection(stab_all, point_stabilizer(q.action, p));
      CHECK(stab_all.is_trivial());
    }
  }
}

TEST_CASE("abelian quotient order") {
  CHECK(abelian_quotient_order(sym(5)) == 2);
  CHECK(abelian_quotient_order(group_of(5, {"(1 2 3)", "(1 2 3 4 5)"})) == 1);
  CHECK(abelian_quotient_order(group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"})) == 4);
}

TEST_CASE("property: p divides the abelian quotient order iff g/g' has an index-p subgroup") {
  std::vector<PermutationGroup> groups = {
      sym(4), sym(3), group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"}),
      group_of(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}),
      group_of(4, {"(1 2 3)", "(2 3 4)"}), group_of(6, {"(1 2 3 4 5 6)"})};
  for (const auto &g : groups) {
    auto q = quotient_as_permgroup(g, derived_subgroup(g));
    auto subs = enumerate_subgroups(q.action).members;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      bool has = false;
      for (const auto &s : subs) has = has || q.action.order() == s.order() * p;
      CHECK(has == (abelian_quotient_order(g) % p == 0));
    }
  }
}

TEST_CASE("center and conjugating element") {
  CHECK(center(sym(4)).is_trivial());
  auto d8 = group_of(4, {"(1 2 3 4)", "(1 3)"});
  CHECK(center(d8).order() == 2);
  auto a = group_of(4, {"(1 2)"});
  auto b = group_of(4, {"(3 4)"});
  auto x = conjugating_element(sym(4), a, b);
  REQUIRE(x);
  CHECK(parse_permutation("(1 2)", 4).conjugate_by(*x) == parse_permutation("(3 4)", 4));
  CHECK_FALSE(conjugating_element(d8, group_of(4, {"(1 2)(3 4)"}), group_of(4, {"(1 3)(2 4)"})));
}
