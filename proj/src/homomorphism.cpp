#include "galkit/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "galkit/element_table.hpp"

namespace galkit {

Permutation pair_permutation(const Permutation &a, const Permutation &b) {
  std::vector<Point> images(a.degree() + b.degree());
  const auto n = static_cast<Point>(a.degree());
  for (Point i = 0; i < a.degree(); ++i) images[i] = a[i];
  for (Point i = 0; i < b.degree(); ++i) images[n + i] = n + b[i];
  return Permutation::from_images(std::move(images));
}

const PermutationGroup &HomomorphismSpec::graph() const {
  if (!graph_) {
    if (images.size() != source.generators().size())
      fail(ErrorCode::invalid_argument, "one image per source generator is required");
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].degree() != target.degree())
        fail(ErrorCode::degree_mismatch, "image degree differs from target degree");
      gens.push_back(pair_permutation(source.generators()[i], images[i]));
    }
    // Source points first, so that sifting (x, 1) clears the source component.
    std::vector<Point> prefix(source.degree());
    std::iota(prefix.begin(), prefix.end(), Point{0});
    graph_ = std::make_shared<const PermutationGroup>(std::move(gens), prefix);
  }
  return *graph_;
}

Permutation HomomorphismSpec::apply(const Permutation &x) const {
  if (x.degree() != source.degree())
    fail(ErrorCode::degree_mismatch, "element degree differs from source degree");
  auto [residue, level] =
      graph().chain().sift(pair_permutation(x, target.identity()));
  (void)level;
  const auto n = static_cast<Point>(source.degree());
  for (Point i = 0; i < n; ++i)
    if (residue[i] != i) fail(ErrorCode::precondition, "element is not in the source group");
  // residue = (1, f(x)^-1)
  std::vector<Point> images(target.degree());
  for (Point i = 0; i < target.degree(); ++i) images[i] = residue[n + i] - n;
  return Permutation::from_images(std::move(images)).inverse();
}

PermutationGroup HomomorphismSpec::image_group() const {
  if (images.empty()) return PermutationGroup::trivial(target.degree());
  return PermutationGroup(images);
}

bool certify_homomorphism(const HomomorphismSpec &spec) {
  if (spec.images.size() != spec.source.generators().size())
    fail(ErrorCode::invalid_argument, "one image per source generator is required");
  for (const auto &y : spec.images)
    if (y.degree() != spec.target.degree())
      fail(ErrorCode::degree_mismatch, "image degree differs from target degree");
  for (const auto &y : spec.images)
    if (!spec.target.contains(y)) return false;
  return spec.graph().order() == spec.source.order();
}

bool is_isomorphism(const HomomorphismSpec &spec) {
  return spec.source.order() == spec.target.order() && certify_homomorphism(spec) &&
         spec.image_group().order() == spec.target.order();
}

namespace {

std::map<std::uint64_t, std::size_t> order_histogram(const ElementTable &t) {
  std::map<std::uint64_t, std::size_t> h;
  for (std::size_t i = 0; i < t.size(); ++i) ++h[t.element_order(i)];
  return h;
}

// Backtracking over generator images. A partial assignment is extended to the
// subgroup it generates by labelling its Cayley graph; a clash or a repeated
// image rules the assignment out.
class IsoSearch {
 public:
  IsoSearch(const ElementTable &src, const ElementTable &dst, bool all)
      : src_(src), dst_(dst), all_(all) {
    gens_ = src.generator_indices();
    for (std::size_t i = 0; i < dst.size(); ++i) by_order_[dst.element_order(i)].push_back(i);
  }

  std::vector<std::vector<std::size_t>> run() {
    std::vector<std::size_t> images;
    recurse(images);
    return found_;
  }

 private:
  bool consistent(const std::vector<std::size_t> &images) const {
    const std::size_t k = images.size();
    std::vector<std::int64_t> map(src_.size(), -1);
    std::vector<char> used(dst_.size(), 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<std::size_t> queue = {0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t x = queue[q];
      auto fx = static_cast<std::size_t>(map[x]);
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t y = src_.mul(x, gens_[j]);
        std::size_t fy = dst_.mul(fx, images[j]);
        if (map[y] >= 0) {
          if (static_cast<std::size_t>(map[y]) != fy) return false;
          continue;
        }
        if (used[fy]) return false;
        map[y] = static_cast<std::int64_t>(fy);
        used[fy] = 1;
        queue.push_back(y);
      }
    }
    return true;
  }

  void recurse(std::vector<std::size_t> &images) {
    if (!all_ && !found_.empty()) return;
    if (images.size() == gens_.size()) {
      found_.push_back(images);
      return;
    }
    auto it = by_order_.find(src_.element_order(gens_[images.size()]));
    if (it == by_order_.end()) return;
    for (auto c : it->second) {
      images.push_back(c);
      if (consistent(images)) recurse(images);
      images.pop_back();
      if (!all_ && !found_.empty()) return;
    }
  }

  const ElementTable &src_;
  const ElementTable &dst_;
  bool all_;
  std::vector<std::size_t> gens_;
  std::map<std::uint64_t, std::vector<std::size_t>> by_order_;
  std::vector<std::vector<std::size_t>> found_;
};

std::vector<HomomorphismSpec> search(const PermutationGroup &g, const PermutationGroup &h,
                                     std::uint64_t bound, bool all) {
  if (g.order() != h.order()) return {};
  if (g.order() > BigInt(bound))
    fail(ErrorCode::budget_exceeded, "isomorphism search bound " + std::to_string(bound) +
                                         " exceeded by order " + to_string(g.order()));
  if (g.is_abelian() != h.is_abelian()) return {};
  if (g.order() / derived_subgroup(g).order() != h.order() / derived_subgroup(h).order())
    return {};
  ElementTable src(g, bound), dst(h, bound);
  if (order_histogram(src) != order_histogram(dst)) return {};
  std::vector<HomomorphismSpec> out;
  for (const auto &images : IsoSearch(src, dst, all).run()) {
    HomomorphismSpec spec{g, h, {}};
    for (auto i : images) spec.images.push_back(dst.element(i));
    if (!is_isomorphism(spec))
      fail(ErrorCode::internal, "isomorphism search produced an uncertified map");
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace

std::optional<HomomorphismSpec> find_isomorphism(const PermutationGroup &g,
                                                 const PermutationGroup &h,
                                                 std::uint64_t bound) {
  auto found = search(g, h, bound, false);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<HomomorphismSpec> enumerate_isomorphisms(const PermutationGroup &g,
                                                     const PermutationGroup &h,
                                                     std::uint64_t bound) {
  return search(g, h, bound, true);
}

}  // namespace galkit
