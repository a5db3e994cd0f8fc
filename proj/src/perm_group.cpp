#include "galkit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace galkit {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree), prefix_(base_prefix.begin(), base_prefix.end()) {
  for (Point b : prefix_) {
    if (b >= degree_) fail(ErrorCode::invalid_argument, "base point out of range");
    add_level(b);
  }
  for (const auto &g : generators) {
    if (g.degree() != degree_)
      fail(ErrorCode::degree_mismatch, "generator degree differs from group degree");
    add_generator(g);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto &level : levels_) b.push_back(level.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto &level : levels_) n *= level.orbit.size();
  return n;
}

void StabilizerChain::add_level(Point base_point) {
  ChainLevel level;
  level.base_point = base_point;
  level.orbit = {base_point};
  level.transversal = {Permutation(degree_)};
  level.inverse_transversal = {Permutation(degree_)};
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[base_point] = 0;
  levels_.push_back(std::move(level));
}

void StabilizerChain::extend_orbit(std::size_t index) {
  ChainLevel &level = levels_[index];
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto &s : level.generators) {
      Point y = s[level.orbit[k]];
      if (level.orbit_index[y] >= 0) continue;
      level.orbit_index[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation u = level.transversal[k] * s;
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(
    Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const ChainLevel &level = levels_[l];
    std::int32_t idx = level.orbit_index[g[level.base_point]];
    if (idx < 0) return {std::move(g), l};
    g *= level.inverse_transversal[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

bool StabilizerChain::add_generator(const Permutation &g) {
  if (g.degree() != degree_)
    fail(ErrorCode::degree_mismatch, "generator degree differs from group degree");
  auto [h, j] = sift(g);
  if (h.is_identity()) return false;
  if (j == levels_.size()) add_level(h.first_moved_point());
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].generators.push_back(h);
    extend_orbit(l);
  }
  complete(j);
  return true;
}

// Levels above `start_level` are assumed complete. Each Schreier generator of
// the current level must sift through the levels below it; a non-trivial
// residue becomes a new strong generator and processing resumes at the level
// where it stopped.
void StabilizerChain::complete(std::size_t start_level) {
  std::size_t i = start_level;
  for (;;) {
    bool added = false;
    {
      const ChainLevel &level = levels_[i];
      for (std::size_t oi = 0; oi < level.orbit.size() && !added; ++oi) {
        for (std::size_t si = 0; si < level.generators.size(); ++si) {
          const Permutation &s = level.generators[si];
          Point image = s[level.orbit[oi]];
          auto target = static_cast<std::size_t>(level.orbit_index[image]);
          Permutation schreier = level.transversal[oi] * s;
          schreier *= level.inverse_transversal[target];
          if (schreier.is_identity()) continue;
          auto [h, j] = sift(std::move(schreier), i + 1);
          if (h.is_identity()) continue;
          if (j == levels_.size()) add_level(h.first_moved_point());
          for (std::size_t l = i + 1; l <= j; ++l) {
            levels_[l].generators.push_back(h);
            extend_orbit(l);
          }
          i = j;
          added = true;
          break;
        }
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
}

Permutation StabilizerChain::canonical_coset_rep(const Permutation &x) const {
  Permutation y = x;
  for (const auto &level : levels_) {
    std::size_t best = 0;
    Point best_image = y[level.orbit[0]];
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      Point image = y[level.orbit[k]];
      if (image < best_image) {
        best_image = image;
        best = k;
      }
    }
    if (best != 0) y = level.transversal[best] * y;
  }
  return y;
}

// ---------------------------------------------------------------------------
// PermutationGroup

namespace {

std::size_t common_degree(const std::vector<Permutation> &generators) {
  if (generators.empty())
    fail(ErrorCode::invalid_argument, "a group needs at least one generator");
  std::size_t n = generators.front().degree();
  if (n == 0) fail(ErrorCode::invalid_argument, "degree must be positive");
  for (const auto &g : generators)
    if (g.degree() != n)
      fail(ErrorCode::degree_mismatch, "generators have mixed degrees");
  return n;
}

}  // namespace

PermutationGroup::PermutationGroup(std::vector<Permutation> generators)
    : PermutationGroup(std::move(generators), {}) {}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators,
                                   std::span<const Point> base_prefix)
    : degree_(common_degree(generators)), generators_(std::move(generators)) {
  auto chain = std::make_shared<StabilizerChain>(degree_, generators_, base_prefix);
  order_ = chain->order();
  chain_ = std::move(chain);
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup({Permutation(degree)});
}

PermutationGroup PermutationGroup::from_chain(std::vector<Permutation> generators,
                                              StabilizerChain chain) {
  PermutationGroup g;
  g.degree_ = common_degree(generators);
  g.generators_ = std::move(generators);
  g.order_ = chain.order();
  g.chain_ = std::make_shared<StabilizerChain>(std::move(chain));
  return g;
}

std::uint64_t PermutationGroup::order_u64() const {
  if (order_ > BigInt(std::numeric_limits<std::uint64_t>::max()))
    fail(ErrorCode::budget_exceeded, "group order does not fit in 64 bits");
  return order_.convert_to<std::uint64_t>();
}

bool PermutationGroup::contains(const Permutation &x) const {
  if (x.degree() != degree_)
    fail(ErrorCode::degree_mismatch, "membership test with a permutation of another degree");
  return chain_->contains(x);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup &other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation &g) { return other.chain_->contains(g); });
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

bool operator==(const PermutationGroup &a, const PermutationGroup &b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_ && a.is_subgroup_of(b);
}

// ---------------------------------------------------------------------------
// Free operations

PermutationGroup build_group(std::vector<Permutation> generators) {
  return PermutationGroup(std::move(generators));
}

bool contains(const PermutationGroup &g, const Permutation &x) { return g.contains(x); }

std::vector<Permutation> enumerate_elements(const PermutationGroup &g,
                                            std::uint64_t bound) {
  if (g.order() > BigInt(bound))
    fail(ErrorCode::budget_exceeded,
         "group order " + to_string(g.order()) + " exceeds enumeration bound " +
             std::to_string(bound));
  std::vector<Permutation> current = {g.identity()};
  const auto &levels = g.chain().levels();
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * levels[l].transversal.size());
    for (const auto &c : current)
      for (const auto &u : levels[l].transversal) next.push_back(c * u);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Point{0});
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

std::vector<std::vector<Point>> classes_of(UnionFind &uf, std::size_t n) {
  std::vector<std::vector<Point>> out;
  std::vector<std::int64_t> slot(n, -1);
  for (Point x = 0; x < n; ++x) {
    Point r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Point>> orbits(const PermutationGroup &g) {
  UnionFind uf(g.degree());
  for (const auto &s : g.generators())
    for (Point x = 0; x < g.degree(); ++x) uf.unite(x, s[x]);
  return classes_of(uf, g.degree());
}

std::vector<Point> orbit_of(const PermutationGroup &g, Point point) {
  if (point >= g.degree()) fail(ErrorCode::invalid_argument, "point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orbit = {point};
  seen[point] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto &s : g.generators()) {
      Point y = s[orbit[k]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_transitive(const PermutationGroup &g) {
  return orbit_of(g, 0).size() == g.degree();
}

BlockSystem minimal_block_system(const PermutationGroup &g, Point a, Point b) {
  if (a >= g.degree() || b >= g.degree() || a == b)
    fail(ErrorCode::invalid_argument, "seed must be two distinct points in range");
  if (!is_transitive(g))
    fail(ErrorCode::precondition, "minimal block systems need a transitive group");
  UnionFind uf(g.degree());
  std::deque<std::pair<Point, Point>> queue;
  uf.unite(a, b);
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto &s : g.generators()) {
      Point u = s[x], v = s[y];
      if (uf.unite(u, v)) queue.emplace_back(u, v);
    }
  }
  BlockSystem result;
  result.blocks = classes_of(uf, g.degree());
  if (result.blocks.size() == 1) {
    result.primitive = true;
    result.blocks.clear();
  }
  return result;
}

bool is_primitive(const PermutationGroup &g) {
  if (!is_transitive(g)) return false;
  for (Point x = 1; x < g.degree(); ++x)
    if (!minimal_block_system(g, 0, x).primitive) return false;
  return true;
}

PermutationGroup normal_closure(const PermutationGroup &g,
                                std::span<const Permutation> seeds) {
  for (const auto &s : seeds)
    if (!g.contains(s))
      fail(ErrorCode::precondition, "normal closure seed " + s.to_string() +
                                        " is not in the group");
  StabilizerChain chain(g.degree(), {});
  std::vector<Permutation> gens;
  for (const auto &s : seeds)
    if (chain.add_generator(s)) gens.push_back(s);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const auto &x : g.generators()) {
      Permutation c = gens[k].conjugate_by(x);
      if (chain.add_generator(c)) gens.push_back(std::move(c));
    }
  }
  if (gens.empty()) return PermutationGroup::trivial(g.degree());
  return PermutationGroup::from_chain(std::move(gens), std::move(chain));
}

Permutation commutator(const Permutation &a, const Permutation &b) {
  return a.inverse() * b.inverse() * a * b;
}

PermutationGroup derived_subgroup(const PermutationGroup &g) {
  std::vector<Permutation> seeds;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(g, seeds);
}

PermutationGroup point_stabilizer(const PermutationGroup &g, Point point) {
  if (point >= g.degree()) fail(ErrorCode::invalid_argument, "point out of range");
  const Point prefix[] = {point};
  StabilizerChain chain(g.degree(), g.generators(), prefix);
  std::vector<Permutation> gens;
  if (chain.levels().size() > 1) gens = chain.levels()[1].generators;
  if (gens.empty()) return PermutationGroup::trivial(g.degree());
  return PermutationGroup(std::move(gens));
}

bool is_normal_subgroup(const PermutationGroup &g, const PermutationGroup &n) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto &x : g.generators())
    for (const auto &y : n.generators())
      if (!n.contains(y.conjugate_by(x))) return false;
  return true;
}

bool is_solvable(const PermutationGroup &g) {
  PermutationGroup current = g;
  // Each proper step at least halves the order.
  while (!current.is_trivial()) {
    PermutationGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

std::uint64_t exponent(const PermutationGroup &g, std::uint64_t bound) {
  std::uint64_t e = 1;
  for (const auto &x : enumerate_elements(g, bound)) e = std::lcm(e, x.order());
  return e;
}

namespace {

constexpr std::uint64_t kFilterLimit = 10000;

PermutationGroup group_from_elements(std::size_t degree,
                                     const std::vector<Permutation> &elements) {
  StabilizerChain chain(degree, {});
  std::vector<Permutation> gens;
  for (const auto &x : elements)
    if (chain.add_generator(x)) gens.push_back(x);
  if (gens.empty()) return PermutationGroup::trivial(degree);
  return PermutationGroup::from_chain(std::move(gens), std::move(chain));
}

}  // namespace

PermutationGroup intersection(const PermutationGroup &h, const PermutationGroup &k,
                              std::uint64_t max_index) {
  if (h.degree() != k.degree())
    fail(ErrorCode::degree_mismatch, "intersection of groups of different degree");
  const PermutationGroup &small = h.order() <= k.order() ? h : k;
  const PermutationGroup &large = h.order() <= k.order() ? k : h;
  if (small.order() <= kFilterLimit) {
    std::vector<Permutation> kept;
    for (auto &x : enumerate_elements(small, kFilterLimit))
      if (large.contains(x)) kept.push_back(std::move(x));
    return group_from_elements(h.degree(), kept);
  }

  // Orbit of the coset K under H; the stabilizer is H cap K.
  const StabilizerChain &kc = k.chain();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  std::vector<Permutation> reps = {h.identity()};
  index.emplace(kc.canonical_coset_rep(h.identity()), 0);
  StabilizerChain stab(h.degree(), {});
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto &s : h.generators()) {
      Permutation moved = reps[i] * s;
      Permutation key = kc.canonical_coset_rep(moved);
      auto it = index.find(key);
      if (it == index.end()) {
        if (reps.size() >= max_index)
          fail(ErrorCode::budget_exceeded, "intersection orbit exceeds index budget");
        index.emplace(std::move(key), reps.size());
        reps.push_back(std::move(moved));
      } else {
        Permutation schreier = moved * reps[it->second].inverse();
        if (stab.add_generator(schreier)) gens.push_back(std::move(schreier));
      }
    }
  }
  if (gens.empty()) return PermutationGroup::trivial(h.degree());
  return PermutationGroup::from_chain(std::move(gens), std::move(stab));
}

CosetAction coset_action(const PermutationGroup &g, const PermutationGroup &k,
                         std::uint64_t max_index) {
  if (!k.is_subgroup_of(g))
    fail(ErrorCode::precondition, "coset action needs a subgroup");
  BigInt index = g.order() / k.order();
  if (index > BigInt(max_index))
    fail(ErrorCode::budget_exceeded, "coset action of index " + to_string(index) +
                                         " exceeds budget " + std::to_string(max_index));
  const StabilizerChain &kc = k.chain();
  std::unordered_map<Permutation, Point, PermutationHash> lookup;
  CosetAction result;
  result.representatives.push_back(g.identity());
  lookup.emplace(kc.canonical_coset_rep(g.identity()), 0);
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t i = 0; i < result.representatives.size(); ++i) {
    for (std::size_t si = 0; si < g.generators().size(); ++si) {
      Permutation moved = result.representatives[i] * g.generators()[si];
      Permutation key = kc.canonical_coset_rep(moved);
      auto [it, inserted] =
          lookup.emplace(std::move(key), static_cast<Point>(result.representatives.size()));
      if (inserted) result.representatives.push_back(std::move(moved));
      images[si].push_back(it->second);
    }
  }
  std::vector<Permutation> gens;
  for (auto &img : images) gens.push_back(Permutation::from_images(std::move(img)));
  result.action = PermutationGroup(std::move(gens));
  return result;
}

Permutation restrict_to_window(const Permutation &x, std::size_t offset,
                               std::size_t size) {
  std::vector<Point> images(size);
  for (std::size_t i = 0; i < size; ++i) {
    Point y = x[static_cast<Point>(offset + i)];
    if (y < offset || y >= offset + size)
      fail(ErrorCode::precondition, "window is not invariant under the permutation");
    images[i] = static_cast<Point>(y - offset);
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace galkit
