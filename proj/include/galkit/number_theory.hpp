#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace galkit {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
/// Trial division for small factors, then deterministic Pollard rho.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Smallest generator of the multiplicative group mod a prime q.
std::uint64_t smallest_primitive_root(std::uint64_t q);

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace galkit
