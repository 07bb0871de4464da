#pragma once

// Generators of the triple group: the prime sets L and L0, triples attached
// to principal ideals, and the injective map beta from L into the group whose
// image is a free basis.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apt/arith.hpp"
#include "apt/classgroup.hpp"
#include "apt/quadfield.hpp"
#include "apt/triples.hpp"

namespace apt {

/// Primes p <= bound with (-m/p) = 1.
std::vector<std::int64_t> compute_L(const Modulus& mod, std::int64_t bound);

/// The primes of compute_L whose class lies in E.
std::vector<std::int64_t> compute_L0(const ClassGroup& group, std::int64_t bound);

/// Coprime (u, v) with u, v >= 0 and u^2 + m*v^2 = n, sorted by u.
std::vector<std::pair<Int, Int>> solve_norm_equation(const Modulus& mod, const Int& n);

/// One factor l(p)^e, or conj(l(p))^e, of an ideal product.
struct IdealPower {
  PrimeSplitInfo prime;
  bool conj = false;
  unsigned exponent = 1;
};

/// Form of the product of the given ideals (primitive part). Odd ramified
/// primes and inert 2 are dropped since they only add rational factors
/// after squaring. Throws DomainError for inert odd primes and for ramified
/// 2 with a nonzero exponent.
QuadForm ideal_product_form(const Modulus& mod, std::span<const IdealPower> product);

/// Triple [u, v, w] attached to a generator of J^2 where J is the ideal
/// product: u^2 + m*v^2 = w^2 with w = N(J) or 2*N(J). Sign as produced by
/// the generator. Throws DomainError when J^2 is not principal.
Triple triple_of_ideal_product(const Modulus& mod, std::span<const IdealPower> product);

/// [q, r, 4] for the two fields where l(2) has class in E (m = 7 and 15).
std::optional<Triple> special_four_element(const Modulus& mod);

enum class Category { L0, Pillar, Composite };

const char* to_string(Category c);

/// a_{jp} copies of P_j (or of its conjugate).
struct ExponentEntry {
  std::size_t pillar = 0;  // index into QuotientBasis::pillars()
  unsigned exponent = 0;
  bool conj = false;

  bool operator==(const ExponentEntry&) const = default;
};

struct BasisElement {
  std::int64_t p = 0;
  Triple triple;
  Category category = Category::L0;
  std::optional<std::size_t> pillar;    // set for Category::Pillar
  std::vector<ExponentEntry> exps;      // nonzero entries, Category::Composite
  std::vector<std::pair<std::int64_t, unsigned>> third_shape;  // factorization of c
};

/// Builds beta(p) for one field and one pillar configuration.
class BasisBuilder {
 public:
  explicit BasisBuilder(const Modulus& mod, const PillarConfig& config = {});

  BasisBuilder(const BasisBuilder&) = delete;
  BasisBuilder& operator=(const BasisBuilder&) = delete;

  const Modulus& modulus() const noexcept { return mod_; }
  const PillarConfig& config() const noexcept { return config_; }
  const ClassGroup& class_group() const noexcept { return group_; }
  const QuotientBasis& quotient() const noexcept { return quotient_; }
  const std::optional<Triple>& special() const noexcept { return special_; }

  /// Throws DomainError unless p is in L.
  Category category(std::int64_t p) const;

  /// Canonical exponents for a composite prime: a_j <= h_j/2 and
  /// l(p) * prod Q_j^{a_j} has class in E, Q_j = P_j or its conjugate.
  /// Zero entries are omitted.
  std::vector<ExponentEntry> exponent_vector(std::int64_t p) const;

  /// Throws DomainError unless p is in L.
  BasisElement beta(std::int64_t p) const;

  /// beta(p) for p in L up to bound, increasing p. The special element is
  /// not included; it is reported by special().
  std::vector<BasisElement> enumerate(std::int64_t bound) const;

 private:
  BasisElement make_element(std::int64_t p, Category cat, const Triple& t) const;

  Modulus mod_;
  PillarConfig config_;
  ClassGroup group_;
  QuotientBasis quotient_;
  std::optional<Triple> special_;
};

}  // namespace apt
