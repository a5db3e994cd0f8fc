#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "galkit/error.hpp"
#include "galkit/permutation.hpp"

namespace galkit {

/// One level of a stabilizer chain: the orbit of `base_point` under the
/// strong generators fixing all earlier base points, with an explicit
/// transversal (`transversal[i]` maps the base point to `orbit[i]`).
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;
  /// Index into `orbit` for every point, or -1.
  std::vector<std::int32_t> orbit_index;
};

/// Deterministic Schreier-Sims. New base points are always the smallest point
/// moved by the element that needs one, after any prescribed prefix.
class StabilizerChain {
 public:
  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel> &levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  /// Residue of `g` after sifting from `from_level`, and the level at which
  /// sifting stopped (levels().size() when it went all the way through).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from_level = 0) const;
  bool contains(const Permutation &g) const;

  /// Adds `g` as a generator. Returns false when it was already a member.
  bool add_generator(const Permutation &g);

  /// Canonical element of the right coset {k * x : k in this group}.
  Permutation canonical_coset_rep(const Permutation &x) const;

 private:
  void add_level(Point base_point);
  void extend_orbit(std::size_t level);
  void complete(std::size_t start_level);

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
  std::vector<Point> prefix_;
};

/// A permutation group given by generators, with its stabilizer chain built
/// at construction. Immutable.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  /// Throws on an empty list or mixed degrees.
  explicit PermutationGroup(std::vector<Permutation> generators);
  PermutationGroup(std::vector<Permutation> generators,
                   std::span<const Point> base_prefix);

  static PermutationGroup trivial(std::size_t degree);
  /// Adopts an already complete chain for `generators`.
  static PermutationGroup from_chain(std::vector<Permutation> generators,
                                     StabilizerChain chain);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const StabilizerChain &chain() const noexcept { return *chain_; }
  const BigInt &order() const noexcept { return order_; }
  /// order() as a machine integer; throws budget_exceeded when it does not fit.
  std::uint64_t order_u64() const;

  bool contains(const Permutation &x) const;
  bool is_subgroup_of(const PermutationGroup &other) const;
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_abelian() const;
  /// Identity is returned for groups of order 1.
  Permutation identity() const { return Permutation(degree_); }

  friend bool operator==(const PermutationGroup &a, const PermutationGroup &b);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  BigInt order_ = 1;
};

/// Blocks of imprimitivity, or the marker for a primitive result.
struct BlockSystem {
  bool primitive = false;
  /// 0-based blocks, each sorted, ordered by smallest element.
  std::vector<std::vector<Point>> blocks;
};

PermutationGroup build_group(std::vector<Permutation> generators);
bool contains(const PermutationGroup &g, const Permutation &x);

/// All elements in lexicographic order of image sequences.
std::vector<Permutation> enumerate_elements(const PermutationGroup &g,
                                            std::uint64_t bound);

/// Orbit partition; each orbit sorted, orbits ordered by smallest point.
std::vector<std::vector<Point>> orbits(const PermutationGroup &g);
std::vector<Point> orbit_of(const PermutationGroup &g, Point point);
bool is_transitive(const PermutationGroup &g);

BlockSystem minimal_block_system(const PermutationGroup &g, Point a, Point b);
bool is_primitive(const PermutationGroup &g);

PermutationGroup normal_closure(const PermutationGroup &g,
                                std::span<const Permutation> seeds);
PermutationGroup derived_subgroup(const PermutationGroup &g);
PermutationGroup point_stabilizer(const PermutationGroup &g, Point point);

bool is_normal_subgroup(const PermutationGroup &g, const PermutationGroup &n);
Permutation commutator(const Permutation &a, const Permutation &b);
/// Derived series terminates in the trivial group.
bool is_solvable(const PermutationGroup &g);
/// Least common multiple of all element orders (requires |g| <= bound).
std::uint64_t exponent(const PermutationGroup &g, std::uint64_t bound);

/// Stabilizer of the right coset K*1 in H acting by right multiplication,
/// i.e. H intersect K. `max_index` bounds the orbit length |H : H cap K|.
PermutationGroup intersection(const PermutationGroup &h, const PermutationGroup &k,
                              std::uint64_t max_index = 1u << 20);

/// Right-coset action of `g` on the cosets of `k`: the image group, and a
/// representative for every coset (index 0 is the coset k itself).
struct CosetAction {
  PermutationGroup action;
  std::vector<Permutation> representatives;
};
CosetAction coset_action(const PermutationGroup &g, const PermutationGroup &k,
                         std::uint64_t max_index);

/// Image of `x` restricted to the window [offset, offset + size), as a
/// permutation of `size` points. The window must be invariant under `x`.
Permutation restrict_to_window(const Permutation &x, std::size_t offset,
                               std::size_t size);

}  // namespace galkit
