#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "galkit/homomorphism.hpp"
#include "galkit/perm_group.hpp"
#include "galkit/products.hpp"

namespace galkit {

enum class StandardFamily { cyclic, dihedral, symmetric, alternating };

/// Parses "cyclic", "dihedral", "symmetric" or "alternating".
StandardFamily parse_standard_family(std::string_view name);

/// Natural degree-d action. Dihedral needs d >= 3.
PermutationGroup standard_group(StandardFamily family, std::size_t d);

/// Unitriangular 3x3 matrices over F_p acting on the affine plane z = 1; the
/// point (x, y) is 1 + x + p*y. Generators: the central translation
/// x -> x + 1, then x -> x + y, then y -> y + 1.
PermutationGroup heisenberg(std::uint64_t p);

struct DpCpWitness {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  /// Generators r_1, s_1, ..., r_{n-1}, s_{n-1}, r_n.
  PermutationGroup group;
  /// <r_1 r_n, ..., r_{n-1} r_n>
  PermutationGroup h;
  std::vector<Permutation> r;
  std::vector<Permutation> s;
  Permutation r_last;
};

DpCpWitness dpcp_group(std::uint64_t p, std::uint64_t n);

struct HbergerWitness {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  /// Primitive root g mod q; eta multiplies residues by g^-1.
  std::uint64_t primitive_root = 0;
  /// On q points.
  Permutation sigma, eta, tau;
  /// On p*q points; point j of block i is i*q + j (1-based j).
  std::vector<Permutation> sigmas, taus;
  Permutation alpha, beta, gamma;
  /// Generators sigma_0..sigma_{p-1}, alpha, beta, gamma.
  PermutationGroup group;
  PermutationGroup a_sub;
  PermutationGroup b_sub;
};

HbergerWitness hberger_group(std::uint64_t p, std::uint64_t q);

/// H_p^n together with N_{p,n} = { (z_1^a_1, ..., z_n^a_n) : sum a_i = 0 }.
struct ExtraspecialCover {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  ProductEmbedding product;
  /// Central generator of each factor, embedded.
  std::vector<Permutation> z;
  PermutationGroup kernel;
};

ExtraspecialCover extraspecial_cover(std::uint64_t p, std::uint64_t n);

struct ExtraspecialWitness {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  /// Faithful action on the p^(2n+1) cosets of the kernel.
  PermutationGroup group;
  std::vector<Permutation> z_images;
  ExtraspecialCover cover;
};

inline constexpr std::uint64_t kDefaultDegreeBudget = 300;

ExtraspecialWitness extraspecial(std::uint64_t p, std::uint64_t n,
                                 std::uint64_t degree_budget = kDefaultDegreeBudget);

}  // namespace galkit
