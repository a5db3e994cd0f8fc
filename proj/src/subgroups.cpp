#include "galkit/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "galkit/element_table.hpp"

namespace galkit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool index_less(const Bitset &a, const Bitset &b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.indices() < b.indices();
}

struct WalkClass {
  Bitset canonical;
  std::vector<Bitset> conjugates;
};

std::vector<Bitset> conjugate_orbit(const ElementTable &t, const Bitset &v) {
  std::vector<Bitset> out = {v};
  std::unordered_set<Bitset, BitsetHash> seen = {v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : t.generator_indices()) {
      Bitset w = t.conjugate(out[i], s);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  return out;
}

// Breadth-first over classes: every subgroup V > 1 is <M, x> for a maximal
// subgroup M of V, and M is conjugate to an already discovered representative.
std::vector<WalkClass> walk_classes(const ElementTable &t) {
  const std::size_t n = t.size();
  std::vector<WalkClass> classes;
  std::vector<Bitset> reps;
  std::vector<std::vector<std::size_t>> rep_gens;
  std::unordered_set<Bitset, BitsetHash> seen;

  auto add_class = [&](Bitset v, std::vector<std::size_t> gens) {
    WalkClass c;
    c.conjugates = conjugate_orbit(t, v);
    for (const auto &w : c.conjugates) seen.insert(w);
    c.canonical = *std::min_element(c.conjugates.begin(), c.conjugates.end(), index_less);
    classes.push_back(std::move(c));
    reps.push_back(std::move(v));
    rep_gens.push_back(std::move(gens));
  };

  Bitset trivial = t.empty_set();
  trivial.set(0);
  add_class(trivial, {});

  for (std::size_t ci = 0; ci < reps.size(); ++ci) {
    const Bitset u = reps[ci];
    const std::vector<std::size_t> ugens = rep_gens[ci];
    if (u.count() == n) continue;

    Bitset normalizer = t.empty_set();
    for (std::size_t x = 0; x < n; ++x) {
      bool normalizes = true;
      for (auto g : ugens)
        if (!u.test(t.conj(g, x))) {
          normalizes = false;
          break;
        }
      if (normalizes) normalizer.set(x);
    }
    auto ngens = t.generators_of(normalizer);

    UnionFind uf(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (u.test(x)) continue;
      for (auto g : ugens) {
        uf.unite(x, t.mul(g, x));
        uf.unite(x, t.mul(x, g));
      }
      for (auto g : ngens) uf.unite(x, t.conj(x, g));
      std::uint64_t ord = t.element_order(x);
      std::size_t power = x;
      for (std::uint64_t k = 2; k < ord; ++k) {
        power = t.mul(power, x);
        if (std::gcd(k, ord) == 1) uf.unite(x, power);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (u.test(x) || uf.find(x) != x) continue;
      const std::size_t extra[] = {x};
      Bitset v = t.join(u, ugens, extra);
      if (seen.count(v)) continue;
      auto gens = ugens;
      gens.push_back(x);
      add_class(std::move(v), std::move(gens));
    }
  }
  std::sort(classes.begin(), classes.end(), [](const WalkClass &a, const WalkClass &b) {
    return index_less(a.canonical, b.canonical);
  });
  return classes;
}

PermutationGroup group_of_bitset(const ElementTable &t, const Bitset &b) {
  return t.to_group(t.generators_of(b));
}

void require_subgroup(const PermutationGroup &g, const PermutationGroup &h) {
  if (h.degree() != g.degree())
    fail(ErrorCode::degree_mismatch, "subgroup and group have different degrees");
  if (!h.is_subgroup_of(g)) fail(ErrorCode::precondition, "h is not a subgroup of g");
}

void add_unique(std::vector<PermutationGroup> &list, PermutationGroup candidate) {
  for (const auto &existing : list)
    if (existing == candidate) return;
  list.push_back(std::move(candidate));
}

BigInt factorial(std::uint64_t d) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

void sort_subgroups(std::vector<PermutationGroup> &groups, std::uint64_t budget) {
  std::vector<std::pair<std::vector<Permutation>, std::size_t>> keys;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].order() <= BigInt(budget))
      keys.emplace_back(enumerate_elements(groups[i], budget), i);
    else
      keys.emplace_back(groups[i].generators(), i);
  }
  std::vector<std::size_t> idx(groups.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (groups[a].order() != groups[b].order()) return groups[a].order() < groups[b].order();
    return keys[a].first < keys[b].first;
  });
  std::vector<PermutationGroup> sorted;
  for (auto i : idx) sorted.push_back(std::move(groups[i]));
  groups = std::move(sorted);
}

std::vector<SubgroupClass> subgroup_classes(const PermutationGroup &g, std::uint64_t bound) {
  ElementTable t(g, bound);
  std::vector<SubgroupClass> out;
  for (const auto &c : walk_classes(t))
    out.push_back({group_of_bitset(t, c.canonical), c.conjugates.size()});
  return out;
}

SubgroupList enumerate_subgroups(const PermutationGroup &g, std::uint64_t bound) {
  ElementTable t(g, bound);
  std::vector<Bitset> all;
  for (auto &c : walk_classes(t))
    for (auto &b : c.conjugates) all.push_back(std::move(b));
  std::sort(all.begin(), all.end(), index_less);
  SubgroupList result{g, {}, Completeness::exhaustive};
  for (const auto &b : all) result.members.push_back(group_of_bitset(t, b));
  return result;
}

SubgroupList overgroups(const PermutationGroup &g, const PermutationGroup &h,
                        const AnalysisOptions &options) {
  require_subgroup(g, h);
  std::vector<PermutationGroup> found = {h};
  for (std::size_t i = 0; i < found.size(); ++i) {
    PermutationGroup b = found[i];
    if (b.order() == g.order()) continue;
    auto cosets = coset_action(g, b, options.element_budget);
    std::vector<PermutationGroup> joins;
    for (std::size_t r = 1; r < cosets.representatives.size(); ++r) {
      auto gens = b.generators();
      gens.push_back(cosets.representatives[r]);
      add_unique(joins, PermutationGroup(std::move(gens)));
    }
    for (auto &j : joins) add_unique(found, std::move(j));
  }
  sort_subgroups(found, options.element_budget);
  return {g, std::move(found), Completeness::exhaustive};
}

SubgroupList low_index_subgroups(const PermutationGroup &g, std::uint64_t d,
                                 const AnalysisOptions &options, LowIndexMethod method,
                                 IndexFilter filter) {
  if (d == 0) fail(ErrorCode::invalid_argument, "index bound must be positive");
  auto keep = [&](const BigInt &index) {
    return filter == IndexFilter::exact ? index == d : index <= d;
  };
  if (method == LowIndexMethod::automatic)
    method = g.order() <= BigInt(options.subgroup_bound) ? LowIndexMethod::exhaustive
                                                         : LowIndexMethod::normal_core;

  SubgroupList result{g, {}, Completeness::exhaustive};
  if (method == LowIndexMethod::exhaustive) {
    for (auto &s : enumerate_subgroups(g, options.subgroup_bound).members)
      if (keep(g.order() / s.order())) result.members.push_back(std::move(s));
    return result;
  }

  // Every subgroup K of index <= d contains its core, a normal subgroup of
  // index dividing d!; K is the preimage of a core-free subgroup of G/core.
  if (g.order() > BigInt(options.element_budget))
    fail(ErrorCode::budget_exceeded,
         "no normal-core route: group order " + to_string(g.order()) +
             " exceeds element budget " + std::to_string(options.element_budget));
  const BigInt limit = factorial(d);
  for (const auto &n : normal_subgroups(g, options.element_budget).members) {
    BigInt index = g.order() / n.order();
    if (index > limit) continue;
    auto q = quotient_as_permgroup(g, n, options.quotient_budget);
    ElementTable t(q.action, options.quotient_budget);
    for (const auto &c : walk_classes(t)) {
      BigInt sub_index = g.order() / (n.order() * c.canonical.count());
      if (!keep(sub_index)) continue;
      Bitset core = c.conjugates.front();
      for (const auto &w : c.conjugates) core &= w;
      if (core.count() != 1) continue;
      for (const auto &w : c.conjugates)
        result.members.push_back(pull_back(q, group_of_bitset(t, w)));
    }
  }
  sort_subgroups(result.members, options.element_budget);
  return result;
}

PermutationGroup d_closure(const PermutationGroup &g, const PermutationGroup &h,
                           std::uint64_t d, const AnalysisOptions &options,
                           IndexFilter filter, LowIndexMethod method) {
  require_subgroup(g, h);
  PermutationGroup closure = g;
  for (const auto &k : low_index_subgroups(g, d, options, method, filter).members)
    if (h.is_subgroup_of(k)) closure = intersection(closure, k);
  return closure;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermutationGroup &g,
                                                        std::uint64_t bound) {
  ElementTable t(g, bound);
  UnionFind uf(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    for (auto s : t.generator_indices()) uf.unite(x, t.conj(x, s));
  std::map<std::size_t, std::vector<Permutation>> by_root;
  for (std::size_t x = 0; x < t.size(); ++x) by_root[uf.find(x)].push_back(t.element(x));
  std::vector<std::vector<Permutation>> out;
  for (auto &[root, cls] : by_root) out.push_back(std::move(cls));
  return out;
}

SubgroupList normal_subgroups(const PermutationGroup &g, std::uint64_t bound) {
  ElementTable t(g, bound);
  UnionFind uf(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    for (auto s : t.generator_indices()) uf.unite(x, t.conj(x, s));
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t x = 0; x < t.size(); ++x) by_root[uf.find(x)].push_back(x);

  // Normal closures of single classes, then closure under products.
  std::vector<Bitset> found;
  std::vector<std::vector<std::size_t>> found_gens;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add = [&](Bitset b) {
    if (!seen.insert(b).second) return;
    found_gens.push_back(t.generators_of(b));
    found.push_back(std::move(b));
  };
  Bitset trivial = t.empty_set();
  trivial.set(0);
  add(trivial);
  for (const auto &[root, cls] : by_root) add(t.generate(cls));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
      add(t.join(found[i], found_gens[i], found_gens[j]));
    }
  std::sort(found.begin(), found.end(), index_less);
  SubgroupList result{g, {}, Completeness::exhaustive};
  for (const auto &b : found) result.members.push_back(group_of_bitset(t, b));
  return result;
}

QuotientRealization quotient_as_permgroup(const PermutationGroup &g, const PermutationGroup &n,
                                          std::uint64_t max_index) {
  require_subgroup(g, n);
  if (!is_normal_subgroup(g, n)) fail(ErrorCode::precondition, "kernel is not normal");
  auto act = coset_action(g, n, max_index);
  QuotientRealization q{g, n, act.action, std::move(act.representatives), {}};
  for (std::size_t i = 0; i < q.lift_table.size(); ++i)
    q.coset_index.emplace(n.chain().canonical_coset_rep(q.lift_table[i]),
                          static_cast<Point>(i));
  return q;
}

Permutation QuotientRealization::project(const Permutation &x) const {
  if (!parent.contains(x)) fail(ErrorCode::precondition, "element is not in the parent group");
  std::vector<Point> images(lift_table.size());
  for (std::size_t i = 0; i < lift_table.size(); ++i)
    images[i] = coset_index.at(kernel.chain().canonical_coset_rep(lift_table[i] * x));
  return Permutation::from_images(std::move(images));
}

Permutation QuotientRealization::lift(const Permutation &q) const {
  if (q.degree() != lift_table.size())
    fail(ErrorCode::degree_mismatch, "quotient element has the wrong degree");
  return lift_table[q[0]];
}

PermutationGroup pull_back(const QuotientRealization &q, const PermutationGroup &sub) {
  auto gens = q.kernel.generators();
  for (const auto &s : sub.generators())
    if (!s.is_identity()) gens.push_back(q.lift(s));
  return PermutationGroup(std::move(gens));
}

BigInt abelian_quotient_order(const PermutationGroup &g) {
  return g.order() / derived_subgroup(g).order();
}

PermutationGroup center(const PermutationGroup &g, std::uint64_t bound) {
  ElementTable t(g, bound);
  Bitset z = t.empty_set();
  for (std::size_t x = 0; x < t.size(); ++x) {
    bool central = true;
    for (auto s : t.generator_indices())
      if (t.mul(x, s) != t.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return group_of_bitset(t, z);
}

std::optional<Permutation> conjugating_element(const PermutationGroup &ambient,
                                               const PermutationGroup &a,
                                               const PermutationGroup &b,
                                               std::uint64_t bound) {
  if (a.order() != b.order()) return std::nullopt;
  for (const auto &x : enumerate_elements(ambient, bound)) {
    bool maps = true;
    for (const auto &s : a.generators())
      if (!b.contains(s.conjugate_by(x))) {
        maps = false;
        break;
      }
    if (maps) return x;
  }
  return std::nullopt;
}

}  // namespace galkit
