#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "galkit/perm_group.hpp"

namespace galkit {

/// Permutation of the disjoint union of the two domains, `a` on the first
/// block and `b` on the second.
Permutation pair_permutation(const Permutation &a, const Permutation &b);

/// A map given on generators: images[i] is the image of source.generators()[i].
struct HomomorphismSpec {
  HomomorphismSpec() = default;
  HomomorphismSpec(PermutationGroup source_group, PermutationGroup target_group,
                   std::vector<Permutation> generator_images)
      : source(std::move(source_group)),
        target(std::move(target_group)),
        images(std::move(generator_images)) {}

  PermutationGroup source;
  PermutationGroup target;
  std::vector<Permutation> images;

  /// Subgroup of source x target generated by the pairs (s_i, images[i]).
  /// Its order equals |source| exactly when the map is well defined.
  const PermutationGroup &graph() const;
  /// Image of a source element. Only meaningful for certified maps.
  Permutation apply(const Permutation &x) const;
  /// Group generated by the images.
  PermutationGroup image_group() const;

 private:
  mutable std::shared_ptr<const PermutationGroup> graph_;
};

bool certify_homomorphism(const HomomorphismSpec &spec);
/// Certified, injective and onto.
bool is_isomorphism(const HomomorphismSpec &spec);

inline constexpr std::uint64_t kDefaultIsomorphismBound = 100000;

/// First isomorphism in lexicographic order of generator images, or none.
std::optional<HomomorphismSpec> find_isomorphism(
    const PermutationGroup &g, const PermutationGroup &h,
    std::uint64_t bound = kDefaultIsomorphismBound);

/// Every isomorphism g -> h, in lexicographic order of generator images.
std::vector<HomomorphismSpec> enumerate_isomorphisms(
    const PermutationGroup &g, const PermutationGroup &h,
    std::uint64_t bound = kDefaultIsomorphismBound);

}  // namespace galkit
