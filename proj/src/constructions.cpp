#include "galkit/constructions.hpp"

#include <functional>
#include <numeric>

#include "galkit/number_theory.hpp"
#include "galkit/subgroups.hpp"

namespace galkit {

namespace {

Permutation from_map(std::size_t degree, const std::function<Point(Point)> &f) {
  std::vector<Point> images(degree);
  for (Point x = 0; x < degree; ++x) images[x] = f(x);
  return Permutation::from_images(std::move(images));
}

Permutation full_cycle(std::size_t degree) {
  return from_map(degree, [degree](Point x) { return static_cast<Point>((x + 1) % degree); });
}

void require_odd_prime(std::uint64_t p, const char *what) {
  if (p == 2 || !is_prime(p))
    fail(ErrorCode::invalid_argument, std::string(what) + " must be an odd prime, got " +
                                          std::to_string(p));
}

/// `x` (on `size` points) acting on the window starting at `offset`.
Permutation on_window(const Permutation &x, std::size_t offset, std::size_t degree) {
  return from_map(degree, [&](Point y) {
    if (y < offset || y >= offset + x.degree()) return y;
    return static_cast<Point>(offset + x[static_cast<Point>(y - offset)]);
  });
}

}  // namespace

StandardFamily parse_standard_family(std::string_view name) {
  if (name == "cyclic") return StandardFamily::cyclic;
  if (name == "dihedral") return StandardFamily::dihedral;
  if (name == "symmetric") return StandardFamily::symmetric;
  if (name == "alternating") return StandardFamily::alternating;
  fail(ErrorCode::invalid_argument, "unknown group family '" + std::string(name) + "'");
}

PermutationGroup standard_group(StandardFamily family, std::size_t d) {
  if (d == 0) fail(ErrorCode::invalid_argument, "degree must be positive");
  switch (family) {
    case StandardFamily::cyclic:
      return d == 1 ? PermutationGroup::trivial(1) : PermutationGroup({full_cycle(d)});
    case StandardFamily::dihedral: {
      if (d < 3) fail(ErrorCode::invalid_argument, "dihedral groups need degree at least 3");
      auto reflection = from_map(d, [d](Point x) { return static_cast<Point>((d - x) % d); });
      return PermutationGroup({full_cycle(d), reflection});
    }
    case StandardFamily::symmetric:
      if (d == 1) return PermutationGroup::trivial(1);
      return PermutationGroup({Permutation::from_cycles(d, {{1, 2}}), full_cycle(d)});
    case StandardFamily::alternating: {
      if (d < 3) return PermutationGroup::trivial(d);
      std::vector<Permutation> gens;
      for (Point k = 3; k <= d; ++k) gens.push_back(Permutation::from_cycles(d, {{1, 2, k}}));
      return PermutationGroup(std::move(gens));
    }
  }
  fail(ErrorCode::invalid_argument, "unknown group family");
}

PermutationGroup heisenberg(std::uint64_t p) {
  require_odd_prime(p, "p");
  const std::size_t degree = p * p;
  auto point = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<Point>(x % p + p * (y % p));
  };
  auto central = from_map(degree, [&](Point v) { return point(v % p + 1, v / p); });
  auto shear = from_map(degree, [&](Point v) { return point(v % p + v / p, v / p); });
  auto lift = from_map(degree, [&](Point v) { return point(v % p, v / p + 1); });
  return PermutationGroup({central, shear, lift});
}

DpCpWitness dpcp_group(std::uint64_t p, std::uint64_t n) {
  require_odd_prime(p, "p");
  if (n < 2) fail(ErrorCode::invalid_argument, "n must be at least 2");
  const std::size_t degree = n * p;
  auto cycle = full_cycle(p);
  auto reflection = from_map(p, [p](Point x) { return static_cast<Point>((p - x) % p); });
  DpCpWitness w;
  w.p = p;
  w.n = n;
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i + 1 < n; ++i) {
    w.r.push_back(on_window(cycle, i * p, degree));
    w.s.push_back(on_window(reflection, i * p, degree));
    gens.push_back(w.r.back());
    gens.push_back(w.s.back());
  }
  w.r_last = on_window(cycle, (n - 1) * p, degree);
  w.r.push_back(w.r_last);
  gens.push_back(w.r_last);
  w.group = PermutationGroup(std::move(gens));
  std::vector<Permutation> hgens;
  for (std::uint64_t i = 0; i + 1 < n; ++i) hgens.push_back(w.r[i] * w.r_last);
  w.h = PermutationGroup(std::move(hgens));
  return w;
}

HbergerWitness hberger_group(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  if (!is_prime(q)) fail(ErrorCode::invalid_argument, std::to_string(q) + " is not prime");
  if (q % p != 1)
    fail(ErrorCode::invalid_argument,
         "q must be 1 mod p, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  HbergerWitness w;
  w.p = p;
  w.q = q;
  w.m = (q - 1) / p;
  w.primitive_root = smallest_primitive_root(q);
  const std::uint64_t multiplier = inverse_mod(w.primitive_root, q);
  w.sigma = full_cycle(q);
  w.eta = from_map(q, [&](Point r) { return static_cast<Point>(mul_mod(r, multiplier, q)); });
  w.tau = w.eta.pow(static_cast<long long>(w.m));

  const std::size_t degree = p * q;
  w.alpha = Permutation(degree);
  w.beta = Permutation(degree);
  for (std::uint64_t i = 0; i < p; ++i) {
    w.sigmas.push_back(on_window(w.sigma, i * q, degree));
    w.taus.push_back(on_window(w.tau, i * q, degree));
    w.alpha *= w.taus.back();
    w.beta *= w.taus.back().pow(static_cast<long long>(i));
  }
  w.gamma = from_map(degree, [&](Point x) {
    return static_cast<Point>(((x / q + 1) % p) * q + x % q);
  });
  w.a_sub = PermutationGroup(w.sigmas);
  w.b_sub = PermutationGroup({w.alpha, w.beta, w.gamma});
  auto gens = w.sigmas;
  gens.push_back(w.alpha);
  gens.push_back(w.beta);
  gens.push_back(w.gamma);
  w.group = PermutationGroup(std::move(gens));
  return w;
}

ExtraspecialCover extraspecial_cover(std::uint64_t p, std::uint64_t n) {
  require_odd_prime(p, "p");
  if (n == 0) fail(ErrorCode::invalid_argument, "n must be positive");
  auto h = heisenberg(p);
  ExtraspecialCover c;
  c.p = p;
  c.n = n;
  c.product = direct_product(std::vector<PermutationGroup>(n, h));
  for (std::uint64_t i = 0; i < n; ++i) c.z.push_back(c.product.embed(i, h.generators()[0]));
  std::vector<Permutation> kernel_gens;
  for (std::uint64_t i = 0; i + 1 < n; ++i) kernel_gens.push_back(c.z[i] * c.z[n - 1].inverse());
  c.kernel = kernel_gens.empty() ? PermutationGroup::trivial(c.product.combined.degree())
                                 : PermutationGroup(std::move(kernel_gens));
  return c;
}

ExtraspecialWitness extraspecial(std::uint64_t p, std::uint64_t n, std::uint64_t degree_budget) {
  require_odd_prime(p, "p");
  if (n == 0) fail(ErrorCode::invalid_argument, "n must be positive");
  BigInt degree = 1;
  for (std::uint64_t i = 0; i < 2 * n + 1; ++i) degree *= p;
  if (degree > BigInt(degree_budget))
    fail(ErrorCode::budget_exceeded, "E_{p,n} needs degree " + to_string(degree) +
                                         ", above the degree budget " +
                                         std::to_string(degree_budget));
  ExtraspecialWitness w;
  w.p = p;
  w.n = n;
  w.cover = extraspecial_cover(p, n);
  auto q = quotient_as_permgroup(w.cover.product.combined, w.cover.kernel, degree_budget);
  w.group = q.action;
  for (const auto &z : w.cover.z) w.z_images.push_back(q.project(z));
  return w;
}

}  // namespace galkit
