#include "galkit/products.hpp"

#include <algorithm>

#include "galkit/subgroups.hpp"

namespace galkit {

Permutation ProductEmbedding::embed(std::size_t i, const Permutation &x) const {
  if (i >= factors.size()) fail(ErrorCode::invalid_argument, "factor index out of range");
  if (x.degree() != factors[i].degree())
    fail(ErrorCode::degree_mismatch, "element degree differs from factor degree");
  std::vector<Point> images(combined.degree());
  for (Point p = 0; p < images.size(); ++p) images[p] = p;
  const auto offset = static_cast<Point>(offsets[i]);
  for (Point p = 0; p < x.degree(); ++p) images[offset + p] = offset + x[p];
  return Permutation::from_images(std::move(images));
}

Permutation ProductEmbedding::project(std::size_t i, const Permutation &x) const {
  if (i >= factors.size()) fail(ErrorCode::invalid_argument, "factor index out of range");
  return restrict_to_window(x, offsets[i], factors[i].degree());
}

ProductEmbedding direct_product(const std::vector<PermutationGroup> &factors) {
  if (factors.empty()) fail(ErrorCode::invalid_argument, "direct product of no factors");
  ProductEmbedding emb;
  emb.factors = factors;
  std::size_t degree = 0;
  for (const auto &f : factors) {
    emb.offsets.push_back(degree);
    degree += f.degree();
  }
  emb.combined = PermutationGroup::trivial(degree);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto &s : factors[i].generators())
      if (!s.is_identity()) gens.push_back(emb.embed(i, s));
  if (!gens.empty()) emb.combined = PermutationGroup(std::move(gens));
  return emb;
}

bool is_subdirect(const PermutationGroup &sub, const ProductEmbedding &emb) {
  if (!sub.is_subgroup_of(emb.combined))
    fail(ErrorCode::precondition, "group is not inside the product");
  for (std::size_t i = 0; i < emb.factors.size(); ++i) {
    std::vector<Permutation> projected;
    for (const auto &s : sub.generators()) projected.push_back(emb.project(i, s));
    if (PermutationGroup(std::move(projected)).order() != emb.factors[i].order()) return false;
  }
  return true;
}

PermutationGroup fibered_product(const FiberedProductSpec &spec) {
  auto q1 = quotient_as_permgroup(spec.g1, spec.n1);
  auto q2 = quotient_as_permgroup(spec.g2, spec.n2);
  const auto &iso = spec.quotient_iso;
  if (iso.source.degree() != q1.action.degree() || iso.target.degree() != q2.action.degree() ||
      !(iso.source == q1.action) || !(iso.target == q2.action))
    fail(ErrorCode::invalid_argument,
         "quotient isomorphism must map between the coset actions of g1/n1 and g2/n2");
  if (!is_isomorphism(iso))
    fail(ErrorCode::precondition, "quotient map fails the graph-closure certification");

  auto one1 = spec.g1.identity();
  auto one2 = spec.g2.identity();
  std::vector<Permutation> gens;
  for (const auto &k : spec.n1.generators())
    if (!k.is_identity()) gens.push_back(pair_permutation(k, one2));
  for (const auto &k : spec.n2.generators())
    if (!k.is_identity()) gens.push_back(pair_permutation(one1, k));
  for (const auto &x : spec.g1.generators()) {
    Permutation partner = q2.lift(iso.apply(q1.project(x)));
    gens.push_back(pair_permutation(x, partner));
  }
  PermutationGroup result(std::move(gens));
  if (result.order() * q1.action.order() != spec.g1.order() * spec.g2.order())
    fail(ErrorCode::internal, "fibered product has the wrong order");
  return result;
}

std::vector<PermutationGroup> enumerate_subdirect_products(const PermutationGroup &g1,
                                                           const PermutationGroup &g2,
                                                           std::uint64_t bound) {
  if (g1.order() > BigInt(bound) || g2.order() > BigInt(bound))
    fail(ErrorCode::budget_exceeded,
         "factor order exceeds the bound " + std::to_string(bound));
  auto normals1 = normal_subgroups(g1, bound).members;
  auto normals2 = normal_subgroups(g2, bound).members;
  std::vector<PermutationGroup> found;
  for (const auto &n1 : normals1)
    for (const auto &n2 : normals2) {
      if (g1.order() / n1.order() != g2.order() / n2.order()) continue;
      auto q1 = quotient_as_permgroup(g1, n1, bound);
      auto q2 = quotient_as_permgroup(g2, n2, bound);
      for (auto &iso : enumerate_isomorphisms(q1.action, q2.action, bound)) {
        auto s = fibered_product({g1, g2, n1, n2, std::move(iso)});
        bool duplicate = false;
        for (const auto &f : found)
          if (f == s) {
            duplicate = true;
            break;
          }
        if (!duplicate) found.push_back(std::move(s));
      }
    }
  sort_subgroups(found, std::min<std::uint64_t>(bound * bound, kDefaultElementBudget));
  return found;
}

}  // namespace galkit
