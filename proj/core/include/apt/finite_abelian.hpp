#pragma once

// Brute-force structure theory for small finite abelian groups given by a
// full operation table. Group sizes here are class numbers (a few hundred at
// most), so O(n^2) work is fine.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace apt {

enum class FactorStyle { InvariantFactors, Primary };

struct CyclicFactor {
  std::uint32_t generator = 0;
  std::size_t order = 1;
};

class FiniteAbelianGroup {
 public:
  using Element = std::uint32_t;

  /// `table[x][y]` is x*y. Throws DomainError if the table is not square.
  FiniteAbelianGroup(std::vector<std::vector<Element>> table, Element identity);

  std::size_t size() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element op(Element x, Element y) const { return table_[x][y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  Element power(Element x, std::int64_t n) const;
  std::size_t order(Element x) const;

  /// Membership mask of the subgroup generated by `gens`.
  std::vector<bool> span(std::span<const Element> gens) const;
  /// Smallest k >= 1 with x^k in the subgroup `mask`.
  std::size_t relative_order(Element x, const std::vector<bool>& mask) const;

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  Element identity_;
};

/// Builds a direct-sum decomposition one cyclic factor at a time. At each
/// step the next factor must be generated by an element whose order equals
/// target() and whose cyclic group meets the factors chosen so far trivially.
/// Any candidate accepted this way extends to a full decomposition, so the
/// caller is free to offer candidates in whatever preference order it has.
class GreedyPeeler {
 public:
  GreedyPeeler(const FiniteAbelianGroup& group, FactorStyle style);

  bool done() const noexcept { return covered_ == group_->size(); }
  std::size_t target() const noexcept { return target_; }
  bool accepts(FiniteAbelianGroup::Element x) const;
  void take(FiniteAbelianGroup::Element x);

  const std::vector<CyclicFactor>& factors() const noexcept { return factors_; }
  const std::vector<bool>& covered_mask() const noexcept { return mask_; }

 private:
  void retarget();

  const FiniteAbelianGroup* group_;
  FactorStyle style_;
  std::vector<bool> mask_;
  std::size_t covered_ = 1;
  std::size_t target_ = 1;
  std::vector<CyclicFactor> factors_;
};

/// Decomposition using candidates in element order; deterministic.
std::vector<CyclicFactor> cyclic_decomposition(const FiniteAbelianGroup& group, FactorStyle style);

/// Prime-power factorization of n into (prime, power) pairs, smallest prime first.
std::vector<std::pair<std::size_t, std::size_t>> prime_powers(std::size_t n);

}  // namespace apt
