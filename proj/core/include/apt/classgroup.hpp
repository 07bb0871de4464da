#pragma once

// The ideal class group Cl(K) of K = Q(sqrt(-m)), realized as reduced
// primitive positive-definite binary quadratic forms of discriminant disc(K)
// under composition. A primitive ideal a*Z + ((-b + sqrt(D))/2)*Z corresponds
// to the form (a, b, c); composition of forms is multiplication of ideals.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "apt/arith.hpp"
#include "apt/finite_abelian.hpp"
#include "apt/quadfield.hpp"

namespace apt {

/// The form a*x^2 + b*x*y + c*y^2.
struct QuadForm {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  /// -a < b <= a <= c, and b >= 0 whenever a == c.
  bool is_reduced() const;

  bool operator==(const QuadForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadForm& f);

/// Integer 2x2 matrix acting on (x, y) column vectors.
struct Transform {
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
};

struct TrackedReduction {
  QuadForm form;
  /// The reduced form is f(transform * (X, Y)).
  Transform transform;
};

TrackedReduction reduce_tracked(const QuadForm& f);

/// Gauss reduction. Throws DiscriminantMismatch when disc(f) != disc, and
/// DomainError for non-positive a or an imprimitive form.
QuadForm reduce_form(const QuadForm& f, const Int& disc);
QuadForm reduce_form(const QuadForm& f);

/// Composition of ideals without reduction (Cohen, Alg. 5.4.7). Returns the
/// form of the primitive part of the ideal product.
QuadForm compose_unreduced(const QuadForm& f, const QuadForm& g);
/// Composition followed by reduction. Throws DiscriminantMismatch.
QuadForm compose_forms(const QuadForm& f, const QuadForm& g);

QuadForm principal_form(const Int& disc);

/// Form (p, B, C) of the prime ideal l(p) or of its conjugate. Inert primes
/// have no such form; DomainError.
QuadForm prime_form(const Modulus& mod, const PrimeSplitInfo& prime, bool conj = false);

/// When the ideal of `ideal_form` is principal, a generator of norm a.
std::optional<QuadInt> principal_generator(const Modulus& mod, const QuadForm& ideal_form);

/// Index of a reduced form in ClassGroup::forms().
struct ClassId {
  std::uint32_t index = 0;
  auto operator<=>(const ClassId&) const = default;
};

struct ClassFactor {
  ClassId generator;
  std::size_t order = 1;
};

struct PrimeClass {
  ClassId cls;
  bool inert = false;
};

class ClassGroup {
 public:
  explicit ClassGroup(const Modulus& mod);

  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t order() const noexcept { return forms_.size(); }
  const std::vector<QuadForm>& forms() const noexcept { return forms_; }
  const QuadForm& form(ClassId id) const { return forms_.at(id.index); }
  ClassId identity() const noexcept { return identity_; }

  /// Reduces `f` first. Throws DiscriminantMismatch for foreign forms.
  ClassId class_of(const QuadForm& f) const;

  ClassId compose(ClassId x, ClassId y) const { return {group_.op(x.index, y.index)}; }
  ClassId inverse(ClassId x) const { return {group_.inverse(x.index)}; }
  ClassId power(ClassId x, std::int64_t n) const { return {group_.power(x.index, n)}; }
  std::size_t element_order(ClassId x) const { return group_.order(x.index); }

  const FiniteAbelianGroup& table() const noexcept { return group_; }

  /// Cyclic decomposition of Cl(K); generators chosen in form order.
  std::vector<ClassFactor> structure(FactorStyle style = FactorStyle::InvariantFactors) const;

  /// E: classes whose square is trivial, in form order.
  const std::vector<ClassId>& two_torsion() const noexcept { return two_torsion_; }
  bool in_two_torsion(ClassId x) const { return compose(x, x) == identity_; }

  /// f = pi o l. Inert primes map to the identity with the inert flag set.
  PrimeClass class_of_prime(std::int64_t p, bool conj = false) const;

 private:
  Modulus mod_;
  std::vector<QuadForm> forms_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t> index_;
  ClassId identity_;
  FiniteAbelianGroup group_;
  std::vector<ClassId> two_torsion_;
};

/// Reduced forms of discriminant `disc` with |b| <= a <= sqrt(|disc|/3).
std::vector<QuadForm> enumerate_reduced_forms(std::int64_t disc);

struct PillarConfig {
  /// Explicit pillar primes P_j = l(p_j), in order. Empty means "choose".
  std::vector<std::int64_t> primes;
  FactorStyle style = FactorStyle::InvariantFactors;
};

struct Pillar {
  PrimeSplitInfo prime;
  bool conj = false;
  ClassId cls;          // class of P_j in Cl(K)
  std::size_t order{};  // h_j, the order of its image in Cl(K)/E
};

/// Cl(K)/E together with pillar ideals P_j whose images generate it as an
/// internal direct sum, and discrete logarithms in that basis.
class QuotientBasis {
 public:
  QuotientBasis(const ClassGroup& group, const PillarConfig& config = {});

  std::size_t order() const noexcept { return quotient_size_; }
  const std::vector<Pillar>& pillars() const noexcept { return pillars_; }
  std::vector<std::size_t> pillar_orders() const;
  /// Structure of Cl(K)/E in the requested style (orders only).
  std::vector<std::size_t> structure(FactorStyle style = FactorStyle::InvariantFactors) const;

  /// Coset label of a class; equal labels iff the classes agree modulo E.
  std::uint32_t coset(ClassId x) const { return coset_[x.index]; }
  /// Coordinates (c_1, ..., c_n), 0 <= c_j < h_j, with x = sum c_j * P_j mod E.
  const std::vector<std::size_t>& coordinates(ClassId x) const;

  /// g = rho o f.
  const std::vector<std::size_t>& class_mod_e(std::int64_t p) const;

  std::optional<std::size_t> pillar_index(std::int64_t p) const;

 private:
  const ClassGroup* group_;
  std::vector<std::uint32_t> coset_;
  std::size_t quotient_size_ = 1;
  std::vector<std::uint32_t> coset_rep_;  // quotient element -> a class index
  std::optional<FiniteAbelianGroup> quotient_;
  std::vector<Pillar> pillars_;
  std::vector<std::vector<std::size_t>> dlog_;  // by quotient element
};

/// Split primes are scanned up to this bound when choosing pillars.
inline constexpr std::int64_t kPillarSearchLimit = 10'000'000;

}  // namespace apt
