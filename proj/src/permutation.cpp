#include "galkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "galkit/error.hpp"

namespace galkit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y])
      fail(ErrorCode::invalid_argument, "images do not form a bijection");
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>> &cycles) {
  Permutation result(degree);
  for (const auto &cycle : cycles) {
    Permutation c(degree);
    std::vector<bool> used(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x < 1 || x > degree)
        fail(ErrorCode::invalid_argument,
             "point " + std::to_string(x) + " out of range 1.." +
                 std::to_string(degree));
      if (used[x - 1])
        fail(ErrorCode::invalid_argument,
             "point " + std::to_string(x) + " repeated within one cycle");
      used[x - 1] = true;
      c.images_[x - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    result *= c;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  Permutation r(*this);
  r *= rhs;
  return r;
}

Permutation &Permutation::operator*=(const Permutation &rhs) {
  if (rhs.degree() != degree())
    fail(ErrorCode::degree_mismatch,
         "cannot compose permutations of degree " + std::to_string(degree()) +
             " and " + std::to_string(rhs.degree()));
  if (&rhs == this) {
    std::vector<Point> squared(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) squared[i] = images_[images_[i]];
    images_ = std::move(squared);
    return *this;
  }
  for (auto &x : images_) x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (Point x = 0; x < degree(); ++x) r.images_[images_[x]] = x;
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (n) {
    if (n & 1ULL) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation &by) const {
  if (by.degree() != degree())
    fail(ErrorCode::degree_mismatch, "conjugation by a permutation of another degree");
  Permutation r;
  r.images_.resize(degree());
  for (Point x = 0; x < degree(); ++x) r.images_[by.images_[x]] = by.images_[images_[x]];
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    std::uint64_t g = std::gcd(result, len);
    if (result / g > std::numeric_limits<std::uint64_t>::max() / len)
      fail(ErrorCode::budget_exceeded, "element order exceeds 64 bits");
    result = result / g * len;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Point Permutation::first_moved_point() const noexcept {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return x;
  return static_cast<Point>(degree());
}

namespace {

std::string format_cycle(const std::vector<Point> &cycle,
                         std::string_view separator) {
  std::string s = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += separator;
    s += std::to_string(cycle[i] + 1);
  }
  return s + ")";
}

}  // namespace

std::string Permutation::to_string(std::string_view separator) const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto &c : cs) s += format_cycle(c, separator);
  return s;
}

std::string Permutation::to_string_following(std::span<const Point> point_order,
                                             std::string_view separator) const {
  std::vector<bool> seen(degree(), false);
  std::string s;
  auto emit = [&](Point start) {
    if (seen[start] || images_[start] == start) return;
    std::vector<Point> cycle;
    for (Point y = start; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    s += format_cycle(cycle, separator);
  };
  for (Point x : point_order)
    if (x < degree()) emit(x);
  for (Point x = 0; x < degree(); ++x) emit(x);
  return s.empty() ? "()" : s;
}

std::size_t Permutation::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) fail(ErrorCode::invalid_argument, "degree must be positive");
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      fail(ErrorCode::parse_error,
           "expected '(' at offset " + std::to_string(i) + " in \"" +
               std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    bool closed = false;
    while (i < text.size()) {
      char c = text[i];
      if (c == ')') {
        ++i;
        closed = true;
        break;
      }
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorCode::parse_error,
             std::string("unexpected character '") + c + "' in \"" +
                 std::string(text) + "\"");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree)
          fail(ErrorCode::invalid_argument,
               "point out of range 1.." + std::to_string(degree) + " in \"" +
                   std::string(text) + "\"");
        ++i;
      }
      if (value == 0)
        fail(ErrorCode::invalid_argument, "point 0 is out of range (points are 1-based)");
      cycle.push_back(static_cast<Point>(value));
    }
    if (!closed)
      fail(ErrorCode::parse_error, "unbalanced parentheses in \"" + std::string(text) + "\"");
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::size_t max_point_in(std::string_view text) {
  std::size_t best = 0, value = 0;
  bool in_number = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      value = value * 10 + static_cast<std::size_t>(c - '0');
      in_number = true;
    } else {
      if (in_number) best = std::max(best, value);
      value = 0;
      in_number = false;
    }
  }
  if (in_number) best = std::max(best, value);
  return best;
}

Permutation compose(const Permutation &a, const Permutation &b) { return a * b; }

}  // namespace galkit
