#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galkit {

/// Points are stored 0-based; every textual form is 1-based.
using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Products read left to right:
/// (a * b)(x) = b(a(x)), i.e. `a` is applied first.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Validates that `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Product of 1-based cycles, read left to right. Cycles need not be
  /// disjoint.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation &rhs) const;
  Permutation &operator*=(const Permutation &rhs);

  Permutation inverse() const;
  Permutation pow(long long e) const;
  /// `by^-1 * this * by`, the map by(x) -> by(this(x)).
  Permutation conjugate_by(const Permutation &by) const;

  bool is_identity() const noexcept;
  /// Least common multiple of the cycle lengths. Throws if it overflows.
  std::uint64_t order() const;
  /// 0-based cycles of length >= 2, each starting at its smallest point,
  /// sorted by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Sorted multiset of cycle lengths including fixed points.
  std::vector<std::size_t> cycle_type() const;
  /// Smallest moved point, or degree() when this is the identity.
  Point first_moved_point() const noexcept;

  /// Canonical 1-based cycle notation, e.g. "(1,3,2)(4,5)"; identity is "()".
  std::string to_string(std::string_view separator = ",") const;

  /// Cycles ordered by first appearance in `point_order` (0-based), each
  /// starting at that point. Used to print a permutation the way it is
  /// derived from another one.
  std::string to_string_following(std::span<const Point> point_order,
                                  std::string_view separator = " ") const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a,
                                          const Permutation &b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    return p.hash();
  }
};

/// Parses cycle notation such as "(1 2 3)(4,5)"; empty text is the identity.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Largest point mentioned in cycle notation (0 if none). Lets callers infer
/// a degree from human input.
std::size_t max_point_in(std::string_view text);

Permutation compose(const Permutation &a, const Permutation &b);

}  // namespace galkit
