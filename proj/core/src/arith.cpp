#include "apt/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "apt/errors.hpp"

namespace apt {

bool fits_i64(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

std::int64_t to_i64(const Int& x) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!fits_i64(x)) throw DomainError("integer " + x.get_str() + " exceeds 64 bits");
  return x.get_si();
}

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int abs(const Int& a) { return sgn(a) < 0 ? Int(-a) : a; }

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_square_free(std::int64_t n) {
  if (n == 0) return false;
  std::uint64_t v = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t c = std::max<std::int64_t>(n + 1, 2);
  while (!is_prime(static_cast<std::uint64_t>(c))) ++c;
  return c;
}

unsigned remove_factor(Int& n, std::int64_t p) {
  if (sgn(n) == 0) throw DomainError("remove_factor on zero");
  unsigned count = 0;
  const Int prime(static_cast<long>(p));
  while (mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t()) != 0) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    ++count;
  }
  return count;
}

Factorization factor_over(const Int& n, const std::vector<std::int64_t>& primes) {
  Factorization out;
  out.cofactor = abs(n);
  if (sgn(n) == 0) throw DomainError("cannot factor zero");
  for (std::int64_t p : primes) {
    if (out.cofactor == 1) break;
    if (unsigned e = remove_factor(out.cofactor, p); e > 0) out.factors.emplace_back(p, e);
  }
  return out;
}

Factorization trial_factor(const Int& n, std::int64_t limit) {
  Factorization out;
  out.cofactor = abs(n);
  if (sgn(n) == 0) throw DomainError("cannot factor zero");
  std::int64_t p = 2;
  while (p <= limit && out.cofactor != 1) {
    if (Int(static_cast<long>(p)) * p > out.cofactor) {
      // What is left is prime.
      if (fits_i64(out.cofactor) && out.cofactor.get_si() <= limit) {
        out.factors.emplace_back(out.cofactor.get_si(), 1);
        out.cofactor = 1;
      }
      break;
    }
    if (unsigned e = remove_factor(out.cofactor, p); e > 0) out.factors.emplace_back(p, e);
    p = p == 2 ? 3 : p + 2;
  }
  return out;
}

namespace {

bool probably_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n.
Int pollard_brent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const auto step = [&](const Int& v) { return Int((v * v + c) % n); };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min<std::size_t>(128, r - k); ++i) {
          y = step(y);
          q = q * abs(Int(x - y)) % n;
        }
        g = gcd(q, n);
        k += 128;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  const Int d = pollard_brent(n);
  split_into(d, out);
  split_into(Int(n / d), out);
}

}  // namespace

Factorization factor_complete(const Int& n) {
  constexpr std::int64_t kTrialLimit = 1 << 16;
  Factorization out = trial_factor(n, kTrialLimit);
  if (out.cofactor == 1) return out;
  std::map<Int, unsigned> large;
  split_into(out.cofactor, large);
  for (const auto& [p, e] : large) {
    if (!fits_i64(p)) throw DomainError("prime factor " + p.get_str() + " exceeds 64 bits");
    out.factors.emplace_back(p.get_si(), e);
  }
  out.cofactor = 1;
  return out;
}

}  // namespace apt
