#pragma once

// Independent reference computations used only by the tests. Nothing here
// touches stabilizer chains: groups are closed as explicit element sets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "galkit/permutation.hpp"

namespace galkit::oracle {

using ElementSet = std::set<Permutation>;

inline ElementSet closure(const std::vector<Permutation> &gens, std::size_t degree) {
  ElementSet seen = {Permutation(degree)};
  std::vector<Permutation> frontier = {Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &x : frontier)
      for (const auto &g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline ElementSet closure(const ElementSet &elements, std::size_t degree) {
  return closure(std::vector<Permutation>(elements.begin(), elements.end()), degree);
}

inline bool is_normal(const ElementSet &g, const ElementSet &n) {
  for (const auto &x : g)
    for (const auto &y : n)
      if (!n.count(y.conjugate_by(x))) return false;
  return true;
}

/// Every subgroup, as the closure of the set of pair-generated subgroups
/// under joins. Complete because every subgroup is a join of cyclic ones.
inline std::set<ElementSet> all_subgroups(const ElementSet &g, std::size_t degree) {
  std::vector<Permutation> elems(g.begin(), g.end());
  std::set<ElementSet> found;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      found.insert(closure(std::vector<Permutation>{elems[i], elems[j]}, degree));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> list(found.begin(), found.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ElementSet u = list[i];
        u.insert(list[j].begin(), list[j].end());
        if (found.insert(closure(u, degree)).second) grew = true;
      }
  }
  return found;
}

inline ElementSet derived(const ElementSet &g, std::size_t degree) {
  ElementSet comms;
  for (const auto &a : g)
    for (const auto &b : g) comms.insert(a.inverse() * b.inverse() * a * b);
  return closure(comms, degree);
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64 &rng) {
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i) images[i] = i;
  for (std::size_t i = degree; i > 1; --i)
    std::swap(images[i - 1], images[rng() % i]);
  return Permutation::from_images(std::move(images));
}

}  // namespace galkit::oracle
