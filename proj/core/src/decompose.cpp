#include "apt/decompose.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "apt/errors.hpp"

namespace apt {

namespace {

bool even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

// The primitive generator (a - b*sqrt(-m))/2^k of the triple.
QuadInt generator(const Modulus& mod, const Triple& t) {
  if (even(t.c())) return QuadInt::halves(mod, t.a(), -t.b());
  return QuadInt::integral(t.a(), -t.b());
}

Int generator_norm_root(const Triple& t) { return even(t.c()) ? Int(t.c() / 2) : t.c(); }

}  // namespace

std::map<PrimeIdealKey, unsigned> ideal_valuations(const Modulus& mod, const Triple& t) {
  if (!t.satisfies(mod)) throw NotASolution("triple does not belong to m = " + std::to_string(mod.value()));
  const QuadInt z = generator(mod, t);
  std::map<PrimeIdealKey, unsigned> out;
  for (const auto& [q, e] : factor_complete(generator_norm_root(t)).factors) {
    const PrimeSplitInfo info = splitting_type(mod, q);
    if (info.kind != SplitKind::Split) {
      out[{q, false}] = prime_ideal_valuation(mod, z, info);
      continue;
    }
    out[{q, !in_prime_ideal(mod, z, info)}] = 2 * e;
  }
  return out;
}

std::int64_t signed_valuation(const Modulus& mod, const Triple& t, const PrimeSplitInfo& q) {
  if (q.kind != SplitKind::Split) throw DomainError(std::to_string(q.p) + " does not split");
  Int n = generator_norm_root(t);
  const auto e = static_cast<std::int64_t>(remove_factor(n, q.p));
  if (e == 0) return 0;
  return in_prime_ideal(mod, generator(mod, t), q) ? e : -e;
}

const Triple& Decomposer::beta(std::int64_t p) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(p);
  if (it == cache_.end()) {
    Triple t = (p == 2 && basis_->special()) ? *basis_->special() : basis_->beta(p).triple;
    it = cache_.emplace(p, std::move(t)).first;
  }
  return it->second;
}

Decomposition Decomposer::decompose(const Triple& t, std::optional<std::int64_t> bound) const {
  const Modulus& mod = basis_->modulus();
  if (!t.satisfies(mod)) throw NotASolution("triple does not belong to m = " + std::to_string(mod.value()));

  // Primes that may occur in the third component along the way.
  std::vector<std::int64_t> primes;
  for (const auto& [q, e] : factor_complete(t.c()).factors) {
    if (kronecker(mod, q) == 1) primes.push_back(q);
  }
  std::int64_t limit = primes.empty() ? 2 : primes.back();
  for (const Pillar& pl : basis_->quotient().pillars()) {
    limit = std::max(limit, pl.prime.p);
    if (std::find(primes.begin(), primes.end(), pl.prime.p) == primes.end()) primes.push_back(pl.prime.p);
  }
  std::sort(primes.begin(), primes.end());
  if (bound) limit = *bound;

  Decomposition out;
  std::map<std::int64_t, Int> coeffs;
  Triple cur = t;
  constexpr std::array phases{Category::Composite, Category::Pillar, Category::L0};
  for (Category phase : phases) {
    for (std::int64_t q : primes) {
      if (basis_->category(q) != phase) continue;
      const PrimeSplitInfo info = splitting_type(mod, q);
      const std::int64_t k = signed_valuation(mod, cur, info);
      if (k == 0) continue;
      if (q > limit) {
        throw BasisUnavailable("beta(" + std::to_string(q) + ") lies beyond bound " + std::to_string(limit));
      }
      const Triple& b = beta(q);
      const std::int64_t kb = signed_valuation(mod, b, info);
      if (kb == 0 || k % kb != 0) {
        throw VerificationFailure("valuation at " + std::to_string(q) + " is not a multiple of beta's");
      }
      const Int n = std::abs(k / kb);
      // The sign is the one that clears q from the third component.
      const Triple minus = subtract(mod, cur, scalar_mul(mod, n, b));
      Int s;
      if (mpz_divisible_ui_p(minus.c().get_mpz_t(), static_cast<unsigned long>(q)) == 0) {
        cur = minus;
        s = n;
      } else {
        const Triple plus = add(mod, cur, scalar_mul(mod, n, b));
        if (mpz_divisible_ui_p(plus.c().get_mpz_t(), static_cast<unsigned long>(q)) != 0) {
          throw VerificationFailure("neither sign clears " + std::to_string(q));
        }
        cur = plus;
        s = -n;
      }
      coeffs[q] += s;
    }
  }
  if (!cur.is_identity()) {
    std::ostringstream msg;
    msg << "residual " << cur << " after elimination is not the identity";
    throw VerificationFailure(msg.str());
  }

  for (auto& [p, s] : coeffs) {
    if (sgn(s) == 0) continue;
    if (p == 2 && basis_->special()) {
      out.special_coeff = s;
    } else {
      out.terms.emplace_back(p, s);
    }
  }
  if (recombine(out, limit) != t) throw VerificationFailure("recombination does not reproduce the input");
  out.verified = true;
  return out;
}

Triple Decomposer::recombine(const Decomposition& d, std::optional<std::int64_t> bound) const {
  const Modulus& mod = basis_->modulus();
  Triple acc;
  for (const auto& [p, s] : d.terms) {
    if (bound && p > *bound) {
      throw BasisUnavailable("beta(" + std::to_string(p) + ") lies beyond bound " + std::to_string(*bound));
    }
    acc = add(mod, acc, scalar_mul(mod, s, beta(p)));
  }
  if (sgn(d.special_coeff) != 0) {
    if (!basis_->special()) throw DomainError("no [q,r,4] element for m = " + std::to_string(mod.value()));
    acc = add(mod, acc, scalar_mul(mod, d.special_coeff, *basis_->special()));
  }
  return acc;
}

}  // namespace apt
