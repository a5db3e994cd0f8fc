#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galkit/constructions.hpp"
#include "galkit/report.hpp"
#include "galkit/subgroups.hpp"

namespace galkit {

struct TransitiveCatalog {
  std::size_t degree = 0;
  /// One representative per conjugacy class of transitive subgroups of S_d,
  /// sorted by order.
  std::vector<PermutationGroup> classes;
  std::string completeness;
};

/// 2 <= d <= 7. Cached per process.
const TransitiveCatalog &transitive_groups(std::size_t d);

/// Catalog invariants: every class transitive of degree d, no two classes
/// conjugate in S_d, and the count matching the published tables.
CheckReport check_catalog(std::size_t d);

CheckReport check_pcycle_lemma(std::size_t d, std::uint64_t p);

struct NoquotResult {
  std::optional<std::uint64_t> prime;
  CheckReport report;
};

/// Least prime p in (d/2, d) meeting the p-cycle, abelian quotient and
/// order-ratio conditions, or none.
NoquotResult find_noquot_prime(std::size_t d);

/// Every Goursat subdirect product of every ordered pair of catalog classes
/// has abelian quotient order prime to p. d <= 5.
CheckReport brute_check_noquot_pairs(std::size_t d, std::uint64_t p);

/// Goursat enumeration against the subdirect members of the full subgroup
/// list of g1 x g2, plus |g1 x_Q g2| = |g1||g2|/|Q| for each product.
CheckReport check_goursat(const PermutationGroup &g1, const PermutationGroup &g2,
                          const AnalysisOptions &options = {});

CheckReport check_dpcp(std::uint64_t p, std::uint64_t n, const AnalysisOptions &options = {});

CheckReport check_extraspecial(std::uint64_t p, std::uint64_t n,
                               std::uint64_t degree_budget = kDefaultDegreeBudget,
                               const AnalysisOptions &options = {});

CheckReport check_hberger(std::uint64_t p, std::uint64_t q,
                          std::uint64_t degree_budget = kDefaultDegreeBudget);

CheckReport check_bigboy(const std::vector<PermutationGroup> &components,
                         const PermutationGroup &subdirect, const PermutationGroup &n_sub,
                         const AnalysisOptions &options = {});

/// All products of one or two degree-p catalog classes, with every normal
/// subgroup, when `samples` is 0. Otherwise `samples` random instances
/// (pair of classes, Goursat product, normal subgroup) drawn from `seed`.
CheckReport check_bigboy_family(std::uint64_t p, std::uint64_t samples, std::uint64_t seed,
                                const AnalysisOptions &options = {});

CheckReport check_rirw(const PermutationGroup &g, std::uint64_t d,
                       const AnalysisOptions &options = {});

/// Every transitive group of prime degree p (3, 5 or 7) is T x| B with T
/// its unique minimal normal subgroup, simple and transitive, and B cyclic
/// of order dividing p - 1.
CheckReport check_gtb(std::uint64_t p);

}  // namespace galkit
