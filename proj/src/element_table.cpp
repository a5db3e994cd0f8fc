#include "galkit/element_table.hpp"

#include <bit>

namespace galkit {

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::is_subset_of(const Bitset &other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Bitset &Bitset::operator&=(const Bitset &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Bitset::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {
constexpr std::size_t kTableLimit = 1024;
constexpr std::size_t kPackLimit = 16;

std::uint64_t pack(const Permutation &x) {
  std::uint64_t code = 0;
  for (Point i = 0; i < x.degree(); ++i) code |= std::uint64_t{x[i]} << (4 * i);
  return code;
}

std::uint64_t packed_product(std::uint64_t a, std::uint64_t b, std::size_t degree) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < degree; ++i) {
    std::uint64_t ai = (a >> (4 * i)) & 15u;
    code |= ((b >> (4 * ai)) & 15u) << (4 * i);
  }
  return code;
}
}  // namespace

ElementTable::ElementTable(const PermutationGroup &g, std::uint64_t bound)
    : group_(g), elements_(enumerate_elements(g, bound)) {
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  packed_ = g.degree() <= kPackLimit;
  if (packed_) {
    codes_.reserve(size());
    code_index_.reserve(size() * 2);
    for (std::size_t i = 0; i < size(); ++i) {
      codes_.push_back(pack(elements_[i]));
      code_index_.emplace(codes_.back(), static_cast<std::uint32_t>(i));
    }
  }
  inverses_.resize(size());
  orders_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) {
    inverses_[i] = index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
  for (const auto &s : g.generators()) gens_.push_back(index_of(s));
  if (size() <= kTableLimit) {
    std::vector<std::uint32_t> table(size() * size());
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        table[a * size() + b] = static_cast<std::uint32_t>(mul(a, b));
    table_ = std::move(table);
  }
}

std::optional<std::size_t> ElementTable::find(const Permutation &x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ElementTable::index_of(const Permutation &x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    fail(ErrorCode::precondition, "element " + x.to_string() + " is not in the group");
  return it->second;
}

std::size_t ElementTable::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * size() + b];
  if (packed_) {
    auto it = code_index_.find(packed_product(codes_[a], codes_[b], group_.degree()));
    if (it == code_index_.end())
      fail(ErrorCode::internal, "product left the element table");
    return it->second;
  }
  return index_of(elements_[a] * elements_[b]);
}

std::size_t ElementTable::conj(std::size_t a, std::size_t by) const {
  if (!table_.empty()) return mul(mul(inverses_[by], a), by);
  return index_of(elements_[a].conjugate_by(elements_[by]));
}

// Dimino-style: the join is a union of right cosets of `subgroup`, so each new
// element brings its whole coset and only coset representatives are expanded.
Bitset ElementTable::join(const Bitset &subgroup,
                          std::span<const std::size_t> subgroup_gens,
                          std::span<const std::size_t> extra) const {
  Bitset result = subgroup;
  std::vector<std::size_t> base = subgroup.indices();
  std::vector<std::size_t> gens(subgroup_gens.begin(), subgroup_gens.end());
  bool grows = false;
  for (auto e : extra) {
    gens.push_back(e);
    if (!result.test(e)) grows = true;
  }
  if (!grows) return result;
  std::vector<std::size_t> reps = {0};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (auto s : gens) {
      std::size_t y = mul(reps[r], s);
      if (result.test(y)) continue;
      for (auto u : base) result.set(mul(u, y));
      reps.push_back(y);
    }
  }
  return result;
}

Bitset ElementTable::generate(std::span<const std::size_t> gens) const {
  Bitset trivial = empty_set();
  trivial.set(0);
  Bitset current = trivial;
  std::vector<std::size_t> used;
  for (auto g : gens) {
    if (current.test(g)) continue;
    const std::size_t one[] = {g};
    current = join(current, used, one);
    used.push_back(g);
  }
  return current;
}

Bitset ElementTable::conjugate(const Bitset &set, std::size_t by) const {
  Bitset out = empty_set();
  for (auto i : set.indices()) out.set(conj(i, by));
  return out;
}

PermutationGroup ElementTable::to_group(std::span<const std::size_t> gens) const {
  if (gens.empty()) return PermutationGroup::trivial(group_.degree());
  std::vector<Permutation> perms;
  for (auto i : gens) perms.push_back(elements_[i]);
  return PermutationGroup(std::move(perms));
}

std::vector<std::size_t> ElementTable::generators_of(const Bitset &subgroup) const {
  Bitset current = empty_set();
  current.set(0);
  std::vector<std::size_t> gens;
  for (auto i : subgroup.indices()) {
    if (current.test(i)) continue;
    const std::size_t one[] = {i};
    current = join(current, gens, one);
    gens.push_back(i);
  }
  return gens;
}

}  // namespace galkit
