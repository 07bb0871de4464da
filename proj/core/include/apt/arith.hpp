#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace apt {

using Int = mpz_class;

bool fits_i64(const Int& x);
/// Throws DomainError when x does not fit.
std::int64_t to_i64(const Int& x);

Int isqrt(const Int& n);
/// Exact square root of n, if n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);
bool is_square_free(std::int64_t n);

/// Primes p <= limit in increasing order.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);
std::int64_t next_prime(std::int64_t n);

/// Strips every factor p from n and returns how many were removed.
unsigned remove_factor(Int& n, std::int64_t p);

struct Factorization {
  std::vector<std::pair<std::int64_t, unsigned>> factors;  // increasing p
  Int cofactor;  // what trial division could not split (1 when complete)
};

/// Trial division of |n| by every prime up to `limit`.
Factorization trial_factor(const Int& n, std::int64_t limit);

/// Trial division restricted to the given primes.
Factorization factor_over(const Int& n, const std::vector<std::int64_t>& primes);

/// Complete factorization of |n| (trial division, then Pollard rho). Throws
/// DomainError if a prime factor does not fit in 64 bits.
Factorization factor_complete(const Int& n);

}  // namespace apt
