#include "apt/finite_abelian.hpp"

#include <algorithm>

#include "apt/errors.hpp"

namespace apt {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::vector<Element>> table, Element identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t n = table_.size();
  if (identity_ >= n) throw DomainError("identity out of range");
  for (const auto& row : table_) {
    if (row.size() != n) throw DomainError("operation table is not square");
  }
  inverse_.assign(n, identity_);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (table_[x][y] == identity_) {
        inverse_[x] = y;
        break;
      }
    }
  }
}

FiniteAbelianGroup::Element FiniteAbelianGroup::power(Element x, std::int64_t n) const {
  if (n < 0) {
    x = inverse(x);
    n = -n;
  }
  Element result = identity_;
  Element base = x;
  while (n != 0) {
    if (n & 1) result = op(result, base);
    base = op(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t FiniteAbelianGroup::order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != identity_; y = op(y, x)) ++k;
  return k;
}

std::vector<bool> FiniteAbelianGroup::span(std::span<const Element> gens) const {
  std::vector<bool> mask(size(), false);
  std::vector<Element> members{identity_};
  mask[identity_] = true;
  for (Element g : gens) {
    // Multiply the current subgroup by powers of g until nothing new appears.
    const std::vector<Element> base = members;
    Element step = g;
    while (!mask[step]) {
      for (Element h : base) {
        Element y = op(h, step);
        if (!mask[y]) {
          mask[y] = true;
          members.push_back(y);
        }
      }
      step = op(step, g);
    }
  }
  return mask;
}

std::size_t FiniteAbelianGroup::relative_order(Element x, const std::vector<bool>& mask) const {
  std::size_t k = 1;
  for (Element y = x; !mask[y]; y = op(y, x)) ++k;
  return k;
}

std::vector<std::pair<std::size_t, std::size_t>> prime_powers(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::size_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

namespace {

std::size_t smallest_prime_factor(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

std::size_t part_of(std::size_t n, std::size_t prime) {
  std::size_t q = 1;
  while (n % prime == 0) {
    n /= prime;
    q *= prime;
  }
  return q;
}

}  // namespace

GreedyPeeler::GreedyPeeler(const FiniteAbelianGroup& group, FactorStyle style)
    : group_(&group), style_(style), mask_(group.size(), false) {
  mask_[group.identity()] = true;
  retarget();
}

void GreedyPeeler::retarget() {
  target_ = 1;
  if (done()) return;
  const std::size_t index = group_->size() / covered_;
  const std::size_t ell = smallest_prime_factor(index);
  for (FiniteAbelianGroup::Element x = 0; x < group_->size(); ++x) {
    std::size_t r = group_->relative_order(x, mask_);
    if (style_ == FactorStyle::Primary) r = part_of(r, ell);
    target_ = std::max(target_, r);
  }
}

bool GreedyPeeler::accepts(FiniteAbelianGroup::Element x) const {
  if (done()) return false;
  return group_->order(x) == target_ && group_->relative_order(x, mask_) == target_;
}

void GreedyPeeler::take(FiniteAbelianGroup::Element x) {
  if (!accepts(x)) throw DomainError("element cannot extend the decomposition");
  factors_.push_back({x, target_});
  std::vector<FiniteAbelianGroup::Element> gens;
  gens.reserve(factors_.size());
  for (const auto& f : factors_) gens.push_back(f.generator);
  mask_ = group_->span(gens);
  covered_ = static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
  retarget();
}

std::vector<CyclicFactor> cyclic_decomposition(const FiniteAbelianGroup& group, FactorStyle style) {
  GreedyPeeler peeler(group, style);
  while (!peeler.done()) {
    bool progressed = false;
    for (FiniteAbelianGroup::Element x = 0; x < group.size(); ++x) {
      if (peeler.accepts(x)) {
        peeler.take(x);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw VerificationFailure("no element extends the cyclic decomposition");
  }
  return peeler.factors();
}

}  // namespace apt
