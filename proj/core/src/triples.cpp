#include "apt/triples.hpp"

#include <string>

#include "apt/errors.hpp"

namespace apt {

namespace {

std::string show(const Int& a, const Int& b, const Int& c) {
  return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

}  // namespace

bool Triple::satisfies(const Modulus& mod) const {
  return a_ * a_ + mod.value() * b_ * b_ == c_ * c_;
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '[' << t.a() << ',' << t.b() << ',' << t.c() << ']';
}

Triple normalize(const Modulus& mod, Int a, Int b, Int c) {
  if (sgn(c) == 0) throw NotASolution("third component must be nonzero");
  if (a * a + mod.value() * b * b != c * c) {
    throw NotASolution(show(a, b, c) + " does not solve x^2 + " + std::to_string(mod.value()) +
                       "*y^2 = z^2");
  }
  if (sgn(a) == 0) throw NotASolution("first component is zero");
  const Int g = gcd(gcd(a, b), c);
  if (g != 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (sgn(c) < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  if (sgn(a) < 0) {
    a = -a;
    b = -b;
  }
  return Triple(std::move(a), std::move(b), std::move(c));
}

Triple add(const Modulus& mod, const Triple& x, const Triple& y) {
  if (!x.satisfies(mod) || !y.satisfies(mod)) {
    throw NotASolution("triple does not belong to m = " + std::to_string(mod.value()));
  }
  return normalize(mod, x.a() * y.a() - mod.value() * x.b() * y.b(), x.a() * y.b() + y.a() * x.b(),
                   x.c() * y.c());
}

Triple negate(const Triple& t) { return Triple(t.a_, -t.b_, t.c_); }

Triple subtract(const Modulus& mod, const Triple& x, const Triple& y) { return add(mod, x, negate(y)); }

Triple scalar_mul(const Modulus& mod, const Int& n, const Triple& t) {
  Triple base = sgn(n) < 0 ? negate(t) : t;
  Int k = abs(n);
  Triple acc;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t()) != 0) acc = add(mod, acc, base);
    k >>= 1;
    if (sgn(k) > 0) base = add(mod, base, base);
  }
  return acc;
}

}  // namespace apt
