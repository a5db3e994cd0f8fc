#include <random>

#include "doctest.h"
#include "galkit/perm_group.hpp"
#include "support/oracles.hpp"

using namespace galkit;

namespace {

PermutationGroup group_of(std::size_t n, std::initializer_list<const char *> gens) {
  std::vector<Permutation> v;
  for (const char *g : gens) v.push_back(parse_permutation(g, n));
  return PermutationGroup(std::move(v));
}

/// Random groups with small closures: one to three sparse generators.
std::vector<std::pair<PermutationGroup, oracle::ElementSet>> random_small_groups(
    std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<PermutationGroup, oracle::ElementSet>> out;
  while (out.size() < count) {
    std::size_t n = 2 + rng() % 7;
    std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(oracle::random_permutation(n, rng));
    auto elements = oracle::closure(gens, n);
    if (elements.size() > 200) continue;
    out.emplace_back(PermutationGroup(gens), std::move(elements));
  }
  return out;
}

}  // namespace

TEST_CASE("build_group orders") {
  CHECK(group_of(4, {"(1 2)", "(1 2 3 4)"}).order() == 24);
  auto f20 = group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  CHECK(f20.order() == 20);
  CHECK(oracle::closure(f20.generators(), 5).size() == 20);
  CHECK(group_of(6, {"(1 2 3)(4 5 6)"}).order() == 3);
}

TEST_CASE("build_group errors") {
  CHECK_THROWS_AS(build_group({}), Error);
  CHECK_THROWS_AS(build_group({Permutation(3), Permutation(4)}), Error);
}

TEST_CASE("membership") {
  auto s4 = group_of(4, {"(1 2)", "(1 2 3 4)"});
  CHECK(s4.contains(parse_permutation("(1 3)(2 4)", 4)));
  CHECK_FALSE(group_of(5, {"(1 2 3 4 5)"}).contains(parse_permutation("(1 2)", 5)));
  auto f20 = group_of(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  CHECK(parse_permutation("(2 3 5 4)", 5).pow(2) == parse_permutation("(2 5)(3 4)", 5));
  CHECK(f20.contains(parse_permutation("(2 5)(3 4)", 5)));
  CHECK_THROWS_AS(f20.contains(Permutation(4)), Error);
}

TEST_CASE("enumerate_elements") {
  auto s3 = group_of(3, {"(1 2)", "(1 2 3)"});
  auto elems = enumerate_elements(s3, 10);
  CHECK(elems.size() == 6);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems.front().is_identity());
  CHECK_THROWS_AS(enumerate_elements(group_of(5, {"(1 2)", "(1 2 3 4 5)"}), 50), Error);
}

TEST_CASE("orbits") {
  auto g = group_of(6, {"(1 2 3)(4 5 6)"});
  CHECK(orbits(g) == std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(orbits(PermutationGroup::trivial(3)) ==
        std::vector<std::vector<Point>>{{0}, {1}, {2}});
}

TEST_CASE("minimal block systems") {
  auto c4 = group_of(4, {"(1 2 3 4)"});
  auto blocks = minimal_block_system(c4, 0, 2);
  CHECK_FALSE(blocks.primitive);
  CHECK(blocks.blocks == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  CHECK(minimal_block_system(c4, 0, 1).primitive);
  CHECK_FALSE(is_primitive(c4));

  auto s5 = group_of(5, {"(1 2)", "(1 2 3 4 5)"});
  CHECK(is_primitive(s5));
  CHECK(is_primitive(group_of(5, {"(1 2 3 4 5)"})));
  CHECK_THROWS_AS(minimal_block_system(group_of(4, {"(1 2)"}), 0, 1), Error);
}

TEST_CASE("normal closure") {
  auto s4 = group_of(4, {"(1 2)", "(1 2 3 4)"});
  std::vector<Permutation> klein_seed = {parse_permutation("(1 2)(3 4)", 4)};
  CHECK(normal_closure(s4, klein_seed).order() == 4);
  std::vector<Permutation> transposition = {parse_permutation("(1 2)", 4)};
  CHECK(normal_closure(s4, transposition).order() == 24);
  std::vector<Permutation> identity = {Permutation(4)};
  CHECK(normal_closure(s4, identity).is_trivial());
  std::vector<Permutation> outside = {parse_permutation("(1 2)", 4)};
  CHECK_THROWS_AS(normal_closure(group_of(4, {"(1 2 3 4)"}), outside), Error);

  // Brute-force conjugate closure agrees.
  auto elems = oracle::closure(s4.generators(), 4);
  oracle::ElementSet conj;
  for (const auto &x : elems) conj.insert(klein_seed[0].conjugate_by(x));
  CHECK(oracle::closure(conj, 4).size() == 4);
}

TEST_CASE("derived subgroup") {
  auto s4 = group_of(4, {"(1 2)", "(1 2 3 4)"});
  CHECK(derived_subgroup(s4).order() == 12);
  CHECK(oracle::derived(oracle::closure(s4.generators(), 4), 4).size() == 12);
  CHECK(derived_subgroup(group_of(5, {"(1 2 3 4 5)"})).is_trivial());
}

TEST_CASE("point stabilizers") {
  auto s4 = group_of(4, {"(1 2)", "(1 2 3 4)"});
  CHECK(point_stabilizer(s4, 3).order() == 6);
  CHECK(point_stabilizer(group_of(5, {"(1 2 3 4 5)"}), 0).is_trivial());
  CHECK_THROWS_AS(point_stabilizer(s4, 4), Error);
}

TEST_CASE("intersection by element filtering and by coset orbit agree") {
  auto s6 = group_of(6, {"(1 2)", "(1 2 3 4 5 6)"});
  auto a = group_of(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"});
  auto b = group_of(6, {"(1 4)(2 5)(3 6)", "(1 2 3)(4 5 6)", "(1 2)(4 5)"});
  auto i1 = intersection(a, b);
  auto ea = oracle::closure(a.generators(), 6);
  auto eb = oracle::closure(b.generators(), 6);
  std::size_t common = 0;
  for (const auto &x : ea) common += eb.count(x);
  CHECK(i1.order() == common);
  (void)s6;
}

TEST_CASE("coset action of S4 on the cosets of a point stabilizer") {
  auto s4 = group_of(4, {"(1 2)", "(1 2 3 4)"});
  auto act = coset_action(s4, point_stabilizer(s4, 0), 100);
  CHECK(act.action.degree() == 4);
  CHECK(act.action.order() == 24);
  CHECK(act.representatives.front().is_identity());
}

TEST_CASE("property: chain order and membership match brute-force closure") {
  auto groups = random_small_groups(100, 2024);
  std::mt19937_64 rng(99);
  for (const auto &[g, elems] : groups) {
    REQUIRE(g.order() == elems.size());
    std::vector<Permutation> list(elems.begin(), elems.end());
    for (int t = 0; t < 20; ++t) {
      const auto &x = list[rng() % list.size()];
      const auto &y = list[rng() % list.size()];
      CHECK(g.contains(x * y));
      CHECK(g.contains(x.inverse()));
    }
    for (int t = 0; t < 10; ++t) {
      auto r = oracle::random_permutation(g.degree(), rng);
      CHECK(g.contains(r) == (elems.count(r) == 1));
    }
    auto listed = enumerate_elements(g, 200);
    CHECK(std::equal(listed.begin(), listed.end(), elems.begin(), elems.end()));
  }
}

TEST_CASE("property: orbit-stabilizer") {
  for (const auto &[g, elems] : random_small_groups(60, 77)) {
    for (Point p = 0; p < g.degree(); ++p)
      CHECK(orbit_of(g, p).size() * point_stabilizer(g, p).order() == g.order());
  }
}

TEST_CASE("property: block systems are invariant partitions") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (const auto &[g, elems] : random_small_groups(200, 314)) {
    if (!is_transitive(g) || g.degree() < 3) continue;
    Point a = static_cast<Point>(rng() % g.degree());
    Point b = static_cast<Point>((a + 1 + rng() % (g.degree() - 1)) % g.degree());
    auto bs = minimal_block_system(g, a, b);
    if (bs.primitive) continue;
    ++checked;
    std::size_t size = bs.blocks.front().size();
    std::vector<int> block_of(g.degree(), -1);
    for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
      CHECK(bs.blocks[i].size() == size);
      for (Point x : bs.blocks[i]) {
        CHECK(block_of[x] == -1);
        block_of[x] = static_cast<int>(i);
      }
    }
    CHECK(size > 1);
    CHECK(size < g.degree());
    CHECK(g.degree() % size == 0);
    for (const auto &x : elems)
      for (const auto &block : bs.blocks) {
        int target = block_of[x[block.front()]];
        for (Point y : block) CHECK(block_of[x[y]] == target);
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: derived subgroup matches commutator closure") {
  for (const auto &[g, elems] : random_small_groups(60, 4242)) {
    auto d = derived_subgroup(g);
    CHECK(d.order() == oracle::derived(elems, g.degree()).size());
    CHECK(is_normal_subgroup(g, d));
  }
}
