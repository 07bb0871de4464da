#include "apt/classgroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "apt/errors.hpp"

namespace apt {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// u*a + v*b = g = gcd(a, b).
struct Bezout {
  Int g, u, v;
};

Bezout xgcd(const Int& a, const Int& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.u.get_mpz_t(), out.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void right_multiply(Transform& t, const Int& n00, const Int& n01, const Int& n10, const Int& n11) {
  Transform r;
  r.m00 = t.m00 * n00 + t.m01 * n10;
  r.m01 = t.m00 * n01 + t.m01 * n11;
  r.m10 = t.m10 * n00 + t.m11 * n10;
  r.m11 = t.m10 * n01 + t.m11 * n11;
  t = std::move(r);
}

}  // namespace

bool QuadForm::is_primitive() const { return gcd(gcd(a, b), c) == 1; }

bool QuadForm::is_reduced() const {
  if (!(-a < b && b <= a && a <= c)) return false;
  return !(a == c && sgn(b) < 0);
}

std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
  return os << '(' << f.a << ", " << f.b << ", " << f.c << ')';
}

TrackedReduction reduce_tracked(const QuadForm& f) {
  if (sgn(f.a) <= 0) throw DomainError("form must be positive definite");
  if (sgn(f.discriminant()) >= 0) throw DomainError("form must have negative discriminant");
  TrackedReduction out{f, {}};
  QuadForm& g = out.form;
  for (;;) {
    if (g.b > g.a || g.b <= -g.a) {
      // f(X + kY, Y) brings b into (-a, a].
      Int k = floor_div(g.a - g.b, 2 * g.a);
      g.c = g.a * k * k + g.b * k + g.c;
      g.b = g.b + 2 * g.a * k;
      right_multiply(out.transform, 1, k, 0, 1);
    } else if (g.c < g.a || (g.c == g.a && sgn(g.b) < 0)) {
      // f(-Y, X) = (c, -b, a).
      std::swap(g.a, g.c);
      g.b = -g.b;
      right_multiply(out.transform, 0, -1, 1, 0);
    } else {
      return out;
    }
  }
}

QuadForm reduce_form(const QuadForm& f) {
  if (!f.is_primitive()) throw DomainError("form is not primitive");
  return reduce_tracked(f).form;
}

QuadForm reduce_form(const QuadForm& f, const Int& disc) {
  if (f.discriminant() != disc) {
    throw DiscriminantMismatch("form has discriminant " + f.discriminant().get_str() + ", expected " +
                               disc.get_str());
  }
  return reduce_form(f);
}

QuadForm compose_unreduced(const QuadForm& f, const QuadForm& g) {
  const Int disc = f.discriminant();
  if (g.discriminant() != disc) throw DiscriminantMismatch("cannot compose forms of different discriminant");
  const QuadForm& f1 = f.a <= g.a ? f : g;
  const QuadForm& f2 = f.a <= g.a ? g : f;

  const Int s = (f1.b + f2.b) / 2;
  const Int n = f2.b - s;
  Int y1, d;
  if (mpz_divisible_p(f2.a.get_mpz_t(), f1.a.get_mpz_t()) != 0) {
    y1 = 0;
    d = f1.a;
  } else {
    Bezout e = xgcd(f2.a, f1.a);
    y1 = e.u;
    d = e.g;
  }
  Int x2, y2, d1;
  if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t()) != 0) {
    x2 = 0;
    y2 = -1;
    d1 = d;
  } else {
    Bezout e = xgcd(s, d);
    x2 = e.u;
    y2 = -e.v;
    d1 = e.g;
  }
  const Int v1 = f1.a / d1;
  const Int v2 = f2.a / d1;
  const Int r = mod_floor(y1 * y2 * n - x2 * f2.c, v1);
  QuadForm out;
  out.a = v1 * v2;
  out.b = f2.b + 2 * v2 * r;
  out.c = (out.b * out.b - disc) / (4 * out.a);
  return out;
}

QuadForm compose_forms(const QuadForm& f, const QuadForm& g) { return reduce_form(compose_unreduced(f, g)); }

QuadForm principal_form(const Int& disc) {
  const Int b = mpz_odd_p(disc.get_mpz_t()) != 0 ? 1 : 0;
  return {1, b, (b * b - disc) / 4};
}

QuadForm prime_form(const Modulus& mod, const PrimeSplitInfo& prime, bool conj) {
  const std::int64_t p = prime.p;
  const std::int64_t disc = mod.disc();
  std::int64_t b = 0;
  switch (prime.kind) {
    case SplitKind::Inert:
      throw DomainError("inert prime " + std::to_string(p) + " has no prime form");
    case SplitKind::Ramified:
      if (p == 2) {
        b = (mod.value() % 2 == 1) ? 2 : 0;
      } else {
        b = disc % 2 == 0 ? 0 : p;
      }
      break;
    case SplitKind::Split:
      if (p == 2) {
        b = conj ? 1 : -1;
      } else {
        const std::int64_t r = *prime.root;
        if (disc % 2 == 0) {
          b = conj ? 2 * r : -2 * r;
        } else {
          // Odd b with b = -r (mod p), or b = r for the conjugate.
          b = conj ? r : p - r;
          if (b % 2 == 0) b -= p;
        }
      }
      break;
  }
  QuadForm f{Int(static_cast<long>(p)), Int(static_cast<long>(b)), 0};
  f.c = (f.b * f.b - disc) / (4 * f.a);
  return f;
}

std::optional<QuadInt> principal_generator(const Modulus& mod, const QuadForm& ideal_form) {
  // For the ideal I = [A, (-B + sqrt(D))/2] one has
  //   N(x*A + y*(-B + sqrt(D))/2) = A * (A x^2 - B x y + C y^2),
  // so I is principal iff (A, -B, C) represents 1.
  const QuadForm conj{ideal_form.a, -ideal_form.b, ideal_form.c};
  TrackedReduction red = reduce_tracked(conj);
  if (red.form != principal_form(Int(static_cast<long>(mod.disc())))) return std::nullopt;
  const Int& x = red.transform.m00;
  const Int& y = red.transform.m10;
  // z = (2xA - yB + y sqrt(D))/2. For D = -4m, sqrt(D) = 2 sqrt(-m).
  const Int tu = 2 * x * ideal_form.a - y * ideal_form.b;
  if (mod.disc() % 2 == 0) return QuadInt::integral(tu / 2, y);
  return QuadInt::halves(mod, tu, y);
}

std::vector<QuadForm> enumerate_reduced_forms(std::int64_t disc) {
  if (disc >= 0 || ((disc % 4) + 4) % 4 > 1) throw DomainError("not a negative discriminant");
  std::vector<QuadForm> out;
  const std::int64_t d = -disc;
  for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({Int(static_cast<long>(a)), Int(static_cast<long>(b)), Int(static_cast<long>(c))});
    }
  }
  return out;
}

namespace {

std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t> index_forms(const std::vector<QuadForm>& forms) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < forms.size(); ++i) {
    index.emplace(std::make_pair(to_i64(forms[i].a), to_i64(forms[i].b)), i);
  }
  return index;
}

FiniteAbelianGroup build_table(const std::vector<QuadForm>& forms,
                               const std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t>& index,
                               std::uint32_t identity) {
  const std::size_t h = forms.size();
  std::vector<std::vector<std::uint32_t>> table(h, std::vector<std::uint32_t>(h));
  for (std::uint32_t i = 0; i < h; ++i) {
    for (std::uint32_t j = i; j < h; ++j) {
      const QuadForm r = compose_forms(forms[i], forms[j]);
      const std::uint32_t k = index.at({to_i64(r.a), to_i64(r.b)});
      table[i][j] = k;
      table[j][i] = k;
    }
  }
  return FiniteAbelianGroup(std::move(table), identity);
}

}  // namespace

ClassGroup::ClassGroup(const Modulus& mod)
    : mod_(mod),
      forms_(enumerate_reduced_forms(mod.disc())),
      index_(index_forms(forms_)),
      identity_{index_.at({1, mod.disc() % 2 == 0 ? 0 : 1})},
      group_(build_table(forms_, index_, identity_.index)) {
  for (std::uint32_t i = 0; i < forms_.size(); ++i) {
    if (in_two_torsion(ClassId{i})) two_torsion_.push_back(ClassId{i});
  }
}

ClassId ClassGroup::class_of(const QuadForm& f) const {
  const QuadForm r = reduce_form(f, Int(static_cast<long>(mod_.disc())));
  auto it = index_.find({to_i64(r.a), to_i64(r.b)});
  if (it == index_.end()) throw VerificationFailure("reduced form missing from the class table");
  return ClassId{it->second};
}

std::vector<ClassFactor> ClassGroup::structure(FactorStyle style) const {
  std::vector<ClassFactor> out;
  for (const CyclicFactor& f : cyclic_decomposition(group_, style)) {
    out.push_back({ClassId{f.generator}, f.order});
  }
  return out;
}

PrimeClass ClassGroup::class_of_prime(std::int64_t p, bool conj) const {
  const PrimeSplitInfo info = splitting_type(mod_, p);
  if (info.kind == SplitKind::Inert) return {identity_, true};
  return {class_of(prime_form(mod_, info, conj)), false};
}

// ---------------------------------------------------------------------------

QuotientBasis::QuotientBasis(const ClassGroup& group, const PillarConfig& config)
    : group_(&group), coset_(group.order(), 0) {
  const std::size_t h = group.order();
  const auto& e = group.two_torsion();

  std::vector<bool> labelled(h, false);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < h; ++x) {
    if (labelled[x]) continue;
    coset_rep_.push_back(x);
    for (ClassId t : e) {
      const ClassId y = group.compose(ClassId{x}, t);
      labelled[y.index] = true;
      coset_[y.index] = next;
    }
    ++next;
  }
  quotient_size_ = next;

  std::vector<std::vector<std::uint32_t>> table(next, std::vector<std::uint32_t>(next));
  for (std::uint32_t i = 0; i < next; ++i) {
    for (std::uint32_t j = 0; j < next; ++j) {
      table[i][j] = coset_[group.compose(ClassId{coset_rep_[i]}, ClassId{coset_rep_[j]}).index];
    }
  }
  quotient_.emplace(std::move(table), coset_[group.identity().index]);
  const FiniteAbelianGroup& q = *quotient_;
  const Modulus& mod = group.modulus();

  auto make_pillar = [&](std::int64_t p) {
    const PrimeSplitInfo info = splitting_type(mod, p);
    const ClassId cls = group.class_of(prime_form(mod, info));
    return Pillar{info, false, cls, q.order(coset_[cls.index])};
  };

  if (!config.primes.empty()) {
    std::vector<std::uint32_t> gens;
    std::size_t product = 1;
    for (std::int64_t p : config.primes) {
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || kronecker(mod, p) != 1) {
        throw DomainError("pillar " + std::to_string(p) + " is not a prime in L");
      }
      Pillar pillar = make_pillar(p);
      if (pillar.order < 2) {
        throw DomainError("pillar " + std::to_string(p) + " is trivial in Cl(K)/E");
      }
      product *= pillar.order;
      gens.push_back(coset_[pillar.cls.index]);
      pillars_.push_back(pillar);
    }
    const auto mask = q.span(gens);
    const auto covered = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
    if (covered != quotient_size_ || product != quotient_size_) {
      throw DomainError("pillar classes do not form a direct-sum basis of Cl(K)/E");
    }
  } else {
    GreedyPeeler peeler(q, config.style);
    for (std::int64_t p = 2; !peeler.done(); p = next_prime(p)) {
      if (p > kPillarSearchLimit) throw VerificationFailure("no split prime found for a pillar");
      if (kronecker(mod, p) != 1) continue;
      Pillar pillar = make_pillar(p);
      const std::uint32_t image = coset_[pillar.cls.index];
      if (!peeler.accepts(image)) continue;
      peeler.take(image);
      pillars_.push_back(pillar);
    }
  }

  // Mixed-radix enumeration of sum c_j * g_j gives every discrete log.
  dlog_.assign(quotient_size_, {});
  std::vector<std::size_t> coords(pillars_.size(), 0);
  for (std::size_t count = 0; count < quotient_size_; ++count) {
    std::uint32_t x = q.identity();
    for (std::size_t j = 0; j < pillars_.size(); ++j) {
      x = q.op(x, q.power(coset_[pillars_[j].cls.index], static_cast<std::int64_t>(coords[j])));
    }
    dlog_[x] = coords;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (++coords[j] < pillars_[j].order) break;
      coords[j] = 0;
    }
  }
}

std::vector<std::size_t> QuotientBasis::pillar_orders() const {
  std::vector<std::size_t> out;
  for (const auto& p : pillars_) out.push_back(p.order);
  return out;
}

std::vector<std::size_t> QuotientBasis::structure(FactorStyle style) const {
  std::vector<std::size_t> out;
  for (const CyclicFactor& f : cyclic_decomposition(*quotient_, style)) out.push_back(f.order);
  return out;
}

const std::vector<std::size_t>& QuotientBasis::coordinates(ClassId x) const { return dlog_.at(coset_.at(x.index)); }

const std::vector<std::size_t>& QuotientBasis::class_mod_e(std::int64_t p) const {
  return coordinates(group_->class_of_prime(p).cls);
}

std::optional<std::size_t> QuotientBasis::pillar_index(std::int64_t p) const {
  for (std::size_t j = 0; j < pillars_.size(); ++j) {
    if (pillars_[j].prime.p == p) return j;
  }
  return std::nullopt;
}

}  // namespace apt
