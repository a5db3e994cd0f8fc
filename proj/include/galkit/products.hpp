#pragma once

#include <cstdint>
#include <vector>

#include "galkit/homomorphism.hpp"
#include "galkit/perm_group.hpp"

namespace galkit {

/// Factors acting on consecutive windows of one domain.
struct ProductEmbedding {
  std::vector<PermutationGroup> factors;
  PermutationGroup combined;
  std::vector<std::size_t> offsets;

  /// Image of a permutation in factor `i` on the combined domain.
  Permutation embed(std::size_t i, const Permutation &x) const;
  /// Restriction of a combined element to the window of factor `i`.
  Permutation project(std::size_t i, const Permutation &x) const;
};

ProductEmbedding direct_product(const std::vector<PermutationGroup> &factors);

/// True when every window projection of `sub` is onto its factor.
bool is_subdirect(const PermutationGroup &sub, const ProductEmbedding &emb);

/// g1 x_Q g2 for Q = g1/n1 ~ g2/n2. The isomorphism goes between the coset
/// actions returned by quotient_as_permgroup(g1, n1) and (g2, n2).
struct FiberedProductSpec {
  PermutationGroup g1, g2;
  PermutationGroup n1, n2;
  HomomorphismSpec quotient_iso;
};

PermutationGroup fibered_product(const FiberedProductSpec &spec);

inline constexpr std::uint64_t kDefaultFactorBound = 512;

/// Every subdirect subgroup of g1 x g2, one per (n1, n2, isomorphism) triple,
/// deduplicated and sorted by order, then by generators.
std::vector<PermutationGroup> enumerate_subdirect_products(
    const PermutationGroup &g1, const PermutationGroup &g2,
    std::uint64_t bound = kDefaultFactorBound);

}  // namespace galkit
