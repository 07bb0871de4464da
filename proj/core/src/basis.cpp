#include "apt/basis.hpp"

#include <algorithm>
#include <string>

#include "apt/errors.hpp"

namespace apt {

std::vector<std::int64_t> compute_L(const Modulus& mod, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_up_to(bound)) {
    if (kronecker(mod, p) == 1) out.push_back(p);
  }
  return out;
}

std::vector<std::int64_t> compute_L0(const ClassGroup& group, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : compute_L(group.modulus(), bound)) {
    if (group.in_two_torsion(group.class_of_prime(p).cls)) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<Int, Int>> solve_norm_equation(const Modulus& mod, const Int& n) {
  if (sgn(n) <= 0) throw DomainError("norm must be positive");
  std::vector<std::pair<Int, Int>> out;
  const Int m(static_cast<long>(mod.value()));
  const Int vmax = isqrt(n / m);
  for (Int v = 0; v <= vmax; ++v) {
    if (auto u = exact_sqrt(n - m * v * v); u && gcd(*u, v) == 1) out.emplace_back(*u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuadForm ideal_product_form(const Modulus& mod, std::span<const IdealPower> product) {
  const Int disc(static_cast<long>(mod.disc()));
  QuadForm acc = principal_form(disc);
  for (const IdealPower& f : product) {
    if (f.exponent == 0) continue;
    switch (f.prime.kind) {
      case SplitKind::Inert:
        if (f.prime.p != 2) throw DomainError("inert prime " + std::to_string(f.prime.p) + " in ideal product");
        continue;
      case SplitKind::Ramified:
        if (f.prime.p == 2) throw DomainError("ramified 2 in ideal product");
        continue;
      case SplitKind::Split:
        break;
    }
    const QuadForm pf = prime_form(mod, f.prime, f.conj);
    for (unsigned i = 0; i < f.exponent; ++i) acc = compose_unreduced(acc, pf);
  }
  return acc;
}

namespace {

// Triple of a generator of J^2 for the ideal J with form `j`, or nothing
// when J^2 is not principal.
std::optional<Triple> square_generator_triple(const Modulus& mod, const QuadForm& j) {
  const auto z = principal_generator(mod, compose_unreduced(j, j));
  if (!z) return std::nullopt;
  return normalize(mod, z->twice_u(), z->twice_v(), 2 * j.a);
}

Triple with_positive_b(const Triple& t) { return sgn(t.b()) < 0 ? negate(t) : t; }

}  // namespace

Triple triple_of_ideal_product(const Modulus& mod, std::span<const IdealPower> product) {
  auto t = square_generator_triple(mod, ideal_product_form(mod, product));
  if (!t) throw DomainError("ideal product does not have its class in E");
  return *t;
}

std::optional<Triple> special_four_element(const Modulus& mod) {
  if (kronecker(mod, 2) != 1) return std::nullopt;
  const IdealPower two{splitting_type(mod, 2), false, 1};
  auto t = square_generator_triple(mod, ideal_product_form(mod, std::span(&two, 1)));
  if (!t) return std::nullopt;
  return with_positive_b(*t);
}

const char* to_string(Category c) {
  switch (c) {
    case Category::L0:
      return "L0";
    case Category::Pillar:
      return "pillar";
    case Category::Composite:
      return "composite";
  }
  return "?";
}

BasisBuilder::BasisBuilder(const Modulus& mod, const PillarConfig& config)
    : mod_(mod), config_(config), group_(mod), quotient_(group_, config), special_(special_four_element(mod)) {}

Category BasisBuilder::category(std::int64_t p) const {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || kronecker(mod_, p) != 1) {
    throw DomainError(std::to_string(p) + " is not a prime in L");
  }
  if (quotient_.pillar_index(p)) return Category::Pillar;
  if (group_.in_two_torsion(group_.class_of_prime(p).cls)) return Category::L0;
  return Category::Composite;
}

std::vector<ExponentEntry> BasisBuilder::exponent_vector(std::int64_t p) const {
  const Category cat = category(p);
  if (cat != Category::Composite) {
    throw DomainError("exponent vectors are defined for composite primes only, " + std::to_string(p) + " is " +
                      to_string(cat));
  }
  const auto& coords = quotient_.class_mod_e(p);
  std::vector<ExponentEntry> out;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const std::size_t h = quotient_.pillars()[j].order;
    const std::size_t c = coords[j];
    if (c == 0) continue;
    const std::size_t t = h - c;
    if (t <= h / 2) {
      out.push_back({j, static_cast<unsigned>(t), false});
    } else {
      out.push_back({j, static_cast<unsigned>(c), true});
    }
  }
  return out;
}

BasisElement BasisBuilder::make_element(std::int64_t p, Category cat, const Triple& t) const {
  BasisElement e;
  e.p = p;
  e.triple = with_positive_b(t);
  e.category = cat;
  std::vector<std::int64_t> primes{2};
  if (p != 2) primes.push_back(p);
  for (const Pillar& pl : quotient_.pillars()) {
    if (std::find(primes.begin(), primes.end(), pl.prime.p) == primes.end()) primes.push_back(pl.prime.p);
  }
  std::sort(primes.begin(), primes.end());
  Factorization f = factor_over(e.triple.c(), primes);
  if (f.cofactor != 1) throw VerificationFailure("unexpected prime in beta(" + std::to_string(p) + ")");
  e.third_shape = std::move(f.factors);
  return e;
}

BasisElement BasisBuilder::beta(std::int64_t p) const {
  const Category cat = category(p);
  const PrimeSplitInfo info = splitting_type(mod_, p);

  if (cat == Category::L0) {
    const IdealPower j{info, false, 1};
    return make_element(p, cat, triple_of_ideal_product(mod_, std::span(&j, 1)));
  }

  if (cat == Category::Pillar) {
    const std::size_t idx = *quotient_.pillar_index(p);
    const Pillar& pl = quotient_.pillars()[idx];
    const IdealPower j{pl.prime, pl.conj, static_cast<unsigned>(pl.order)};
    BasisElement e = make_element(p, cat, triple_of_ideal_product(mod_, std::span(&j, 1)));
    e.pillar = idx;
    return e;
  }

  // Composite: every conjugate choice for the Q_j whose product with l(p)
  // lands in E is a candidate; the smallest |u|/w wins.
  const std::vector<ExponentEntry> canonical = exponent_vector(p);
  const std::size_t k = canonical.size();
  std::optional<Triple> best;
  std::vector<ExponentEntry> best_exps;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<ExponentEntry> exps = canonical;
    std::vector<IdealPower> product{{info, false, 1}};
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) exps[i].conj = !exps[i].conj;
      const Pillar& pl = quotient_.pillars()[exps[i].pillar];
      product.push_back({pl.prime, exps[i].conj != pl.conj, exps[i].exponent});
    }
    const QuadForm j = ideal_product_form(mod_, product);
    if (!group_.in_two_torsion(group_.class_of(j))) continue;
    const auto t = square_generator_triple(mod_, j);
    if (!t) throw VerificationFailure("class in E but J^2 not principal");
    if (!best || abs(t->a()) * best->c() < abs(best->a()) * t->c()) {
      best = t;
      best_exps = std::move(exps);
    }
  }
  if (!best) throw VerificationFailure("no composite candidate for " + std::to_string(p));
  BasisElement e = make_element(p, cat, *best);
  e.exps = std::move(best_exps);
  return e;
}

std::vector<BasisElement> BasisBuilder::enumerate(std::int64_t bound) const {
  std::vector<BasisElement> out;
  for (std::int64_t p : compute_L(mod_, bound)) {
    if (p == 2 && special_) continue;
    out.push_back(beta(p));
  }
  return out;
}

}  // namespace apt
