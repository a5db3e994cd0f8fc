#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "galkit/perm_group.hpp"

namespace galkit {

inline constexpr std::uint64_t kDefaultSubgroupBound = 512;
inline constexpr std::uint64_t kDefaultElementBudget = 100000;
inline constexpr std::uint64_t kDefaultQuotientBudget = 5040;

struct AnalysisOptions {
  /// Largest group whose full subgroup list may be enumerated.
  std::uint64_t subgroup_bound = kDefaultSubgroupBound;
  /// Largest group whose elements may be listed (conjugacy classes, normal
  /// subgroups, overgroup search).
  std::uint64_t element_budget = kDefaultElementBudget;
  /// Largest index of a coset action built for a quotient.
  std::uint64_t quotient_budget = kDefaultQuotientBudget;
};

enum class Completeness { exhaustive, bounded_search };

struct SubgroupList {
  PermutationGroup parent;
  /// Sorted by order, then by the lexicographically least element list.
  std::vector<PermutationGroup> members;
  Completeness completeness = Completeness::exhaustive;
};

struct SubgroupClass {
  PermutationGroup representative;
  std::uint64_t class_size = 1;
};

/// Conjugacy classes of subgroups of `g` (conjugacy inside `g`). Every
/// subgroup is reached as the join of a smaller class representative with a
/// single element, so perfect subgroups are not missed.
std::vector<SubgroupClass> subgroup_classes(const PermutationGroup &g,
                                            std::uint64_t bound);

SubgroupList enumerate_subgroups(const PermutationGroup &g,
                                 std::uint64_t bound = kDefaultSubgroupBound);

/// Every B with h <= B <= g, by breadth-first joins with coset representatives.
SubgroupList overgroups(const PermutationGroup &g, const PermutationGroup &h,
                        const AnalysisOptions &options = {});

enum class LowIndexMethod { automatic, exhaustive, normal_core };
enum class IndexFilter { at_most, exact };

SubgroupList low_index_subgroups(const PermutationGroup &g, std::uint64_t d,
                                 const AnalysisOptions &options = {},
                                 LowIndexMethod method = LowIndexMethod::automatic,
                                 IndexFilter filter = IndexFilter::at_most);

/// Intersection of every subgroup of index <= d (or exactly d) that contains h.
PermutationGroup d_closure(const PermutationGroup &g, const PermutationGroup &h,
                           std::uint64_t d, const AnalysisOptions &options = {},
                           IndexFilter filter = IndexFilter::at_most,
                           LowIndexMethod method = LowIndexMethod::automatic);

/// Conjugacy classes of elements, each as a sorted list of elements.
std::vector<std::vector<Permutation>> conjugacy_classes(const PermutationGroup &g,
                                                        std::uint64_t bound);

/// All normal subgroups, as closures of unions of conjugacy classes.
SubgroupList normal_subgroups(const PermutationGroup &g,
                              std::uint64_t bound = kDefaultElementBudget);

/// Faithful action of g/n on the cosets of n.
struct QuotientRealization {
  PermutationGroup parent;
  PermutationGroup kernel;
  /// Generators are the images of the parent's generators, in order.
  PermutationGroup action;
  /// lift_table[i] is a representative of coset i (coset 0 is n itself).
  std::vector<Permutation> lift_table;

  /// Image of a parent element in the action.
  Permutation project(const Permutation &x) const;
  /// A parent element mapping to `q`.
  Permutation lift(const Permutation &q) const;

  std::unordered_map<Permutation, Point, PermutationHash> coset_index;
};

QuotientRealization quotient_as_permgroup(const PermutationGroup &g,
                                          const PermutationGroup &n,
                                          std::uint64_t max_index = kDefaultQuotientBudget);

BigInt abelian_quotient_order(const PermutationGroup &g);

PermutationGroup center(const PermutationGroup &g,
                        std::uint64_t bound = kDefaultElementBudget);

/// An element x of `ambient` with a^x = b, searched over the elements of
/// `ambient`, or nothing.
std::optional<Permutation> conjugating_element(const PermutationGroup &ambient,
                                               const PermutationGroup &a,
                                               const PermutationGroup &b,
                                               std::uint64_t bound = kDefaultElementBudget);

/// Sorts by order, then by the sorted element list (generator list for groups
/// larger than `budget`).
void sort_subgroups(std::vector<PermutationGroup> &groups,
                    std::uint64_t budget = kDefaultElementBudget);

/// Preimage of a subgroup of the quotient.
PermutationGroup pull_back(const QuotientRealization &q, const PermutationGroup &sub);

}  // namespace galkit
