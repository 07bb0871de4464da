#pragma once

// Writing a triple as an integer combination of the basis Im(beta), and the
// inverse map.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "apt/basis.hpp"
#include "apt/triples.hpp"

namespace apt {

struct PrimeIdealKey {
  std::int64_t p = 0;
  bool conj = false;  // the conjugate of l(p)
  auto operator<=>(const PrimeIdealKey&) const = default;
};

/// Prime ideal factorization of <z> for the primitive generator
/// z = (a - b*sqrt(-m))/2^k, k = 1 iff c is even. Exponents are even and the
/// norms multiply to (c/2^k)^2.
std::map<PrimeIdealKey, unsigned> ideal_valuations(const Modulus& mod, const Triple& t);

/// Exponent of l(q) minus exponent of its conjugate in <z>, halved.
std::int64_t signed_valuation(const Modulus& mod, const Triple& t, const PrimeSplitInfo& q);

struct Decomposition {
  std::vector<std::pair<std::int64_t, Int>> terms;  // (p, coefficient), increasing p, nonzero
  Int special_coeff = 0;
  bool verified = false;

  bool operator==(const Decomposition&) const = default;
};

/// Decomposes triples over one BasisBuilder. beta values are cached; the
/// cache is guarded, so one Decomposer may serve several threads.
class Decomposer {
 public:
  explicit Decomposer(const BasisBuilder& basis) : basis_(&basis) {}

  /// Throws NotASolution for foreign triples, BasisUnavailable when a needed
  /// prime exceeds `bound`, VerificationFailure if recombination disagrees.
  /// The default bound covers every prime dividing c and every pillar.
  Decomposition decompose(const Triple& t, std::optional<std::int64_t> bound = std::nullopt) const;

  /// sum s * beta(p) + special_coeff * [q, r, 4].
  Triple recombine(const Decomposition& d, std::optional<std::int64_t> bound = std::nullopt) const;

  const Triple& beta(std::int64_t p) const;

 private:
  const BasisBuilder* basis_;
  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, Triple> cache_;
};

}  // namespace apt
