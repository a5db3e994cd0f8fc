#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "galkit/perm_group.hpp"

namespace galkit {

/// Fixed-size bit set over element indices of an ElementTable.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const noexcept;
  bool is_subset_of(const Bitset &other) const noexcept;
  Bitset &operator&=(const Bitset &other) noexcept;
  std::vector<std::size_t> indices() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Bitset &, const Bitset &) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset &b) const noexcept { return b.hash(); }
};

/// All elements of a small group, sorted lexicographically (so index 0 is the
/// identity), with index-level arithmetic.
class ElementTable {
 public:
  ElementTable(const PermutationGroup &g, std::uint64_t bound);

  const PermutationGroup &group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation &element(std::size_t i) const noexcept { return elements_[i]; }
  std::optional<std::size_t> find(const Permutation &x) const;
  std::size_t index_of(const Permutation &x) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const noexcept { return inverses_[a]; }
  /// by^-1 * a * by
  std::size_t conj(std::size_t a, std::size_t by) const;
  std::uint64_t element_order(std::size_t a) const noexcept { return orders_[a]; }
  /// Indices of the parent group's generators.
  const std::vector<std::size_t> &generator_indices() const noexcept { return gens_; }

  Bitset empty_set() const { return Bitset(size()); }
  /// Subgroup generated by `subgroup` (which must already be a subgroup)
  /// together with `extra`.
  Bitset join(const Bitset &subgroup, std::span<const std::size_t> subgroup_gens,
              std::span<const std::size_t> extra) const;
  Bitset generate(std::span<const std::size_t> gens) const;
  Bitset conjugate(const Bitset &set, std::size_t by) const;

  PermutationGroup to_group(std::span<const std::size_t> gens) const;
  /// Greedy generating set of a subgroup given as a bit set.
  std::vector<std::size_t> generators_of(const Bitset &subgroup) const;

 private:
  PermutationGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  // Degree <= 16: four bits per image, for hashing without allocation.
  bool packed_ = false;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> code_index_;
  std::vector<std::size_t> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> gens_;
  std::vector<std::uint32_t> table_;  // full product table when small
};

}  // namespace galkit
