#include "apt/quadfield.hpp"

#include <string>

#include "apt/errors.hpp"

namespace apt {

Modulus::Modulus(std::int64_t m) : m_(m) {
  if (m <= 3) throw InvalidModulus("m must be greater than 3, got " + std::to_string(m));
  if (!is_square_free(m)) throw InvalidModulus("m must be square-free, got " + std::to_string(m));
  delta_ = (m % 4 == 3) ? 0 : 1;
  disc_ = delta_ == 0 ? -m : -4 * m;
}

int kronecker(const Modulus& mod, std::int64_t p) {
  const std::int64_t m = mod.value();
  if (p == 2) {
    if (mod.disc() % 2 == 0) return 0;
    return (((-m) % 8) + 8) % 8 == 1 ? 1 : -1;
  }
  if (m % p == 0) return 0;
  const auto up = static_cast<std::uint64_t>(p);
  const auto residue = static_cast<std::uint64_t>(((-m) % p + p) % p);
  return powmod(residue, (up - 1) / 2, up) == 1 ? 1 : -1;
}

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Split:
      return "split";
    case SplitKind::Inert:
      return "inert";
    case SplitKind::Ramified:
      return "ramified";
  }
  return "?";
}

PrimeSplitInfo splitting_type(const Modulus& mod, std::int64_t p) {
  PrimeSplitInfo info{p, SplitKind::Inert, std::nullopt};
  switch (kronecker(mod, p)) {
    case 1:
      info.kind = SplitKind::Split;
      info.root = p == 2 ? 1 : *sqrt_mod(-mod.value(), p);
      break;
    case 0:
      info.kind = SplitKind::Ramified;
      info.root = p == 2 ? mod.value() % 2 : 0;
      break;
    default:
      break;
  }
  return info;
}

std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw DomainError("sqrt_mod needs an odd prime");
  const auto up = static_cast<std::uint64_t>(p);
  const auto n = static_cast<std::uint64_t>((a % p + p) % p);
  if (n == 0) return 0;
  if (powmod(n, (up - 1) / 2, up) != 1) return std::nullopt;

  std::uint64_t root;
  if (up % 4 == 3) {
    root = powmod(n, (up + 1) / 4, up);
  } else {
    std::uint64_t q = up - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
      q >>= 1U;
      ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (up - 1) / 2, up) != up - 1) ++z;

    std::uint64_t c = powmod(z, q, up);
    std::uint64_t t = powmod(n, q, up);
    root = powmod(n, (q + 1) / 2, up);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, up);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, up);
      m = i;
      c = mulmod(b, b, up);
      t = mulmod(t, c, up);
      root = mulmod(root, b, up);
    }
  }
  const std::uint64_t other = up - root;
  return static_cast<std::int64_t>(root < other ? root : other);
}

namespace {

// Builds the element (tu + tv sqrt(-m))/2 from doubled coordinates.
QuadInt from_twice(const Modulus& mod, const Int& tu, const Int& tv) {
  if (mpz_even_p(tu.get_mpz_t()) != 0 && mpz_even_p(tv.get_mpz_t()) != 0) {
    return QuadInt::integral(tu / 2, tv / 2);
  }
  return QuadInt::halves(mod, tu, tv);
}

bool even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

}  // namespace

QuadInt QuadInt::integral(Int u, Int v) { return QuadInt(std::move(u), std::move(v), false); }

QuadInt QuadInt::halves(const Modulus& mod, const Int& u, const Int& v) {
  if (even(u) && even(v)) return QuadInt(u / 2, v / 2, false);
  if (!mod.has_half_integers()) {
    throw ParityError("half-integral element in Z[sqrt(-" + std::to_string(mod.value()) + ")]");
  }
  if (even(u) != even(v)) throw ParityError("u and v must have the same parity");
  return QuadInt(u, v, true);
}

std::ostream& operator<<(std::ostream& os, const QuadInt& z) {
  os << '(' << z.u() << (sgn(z.v()) < 0 ? " - " : " + ") << abs(z.v()) << "*sqrt(-m))";
  if (z.half()) os << "/2";
  return os;
}

QuadInt qi_mul(const Modulus& mod, const QuadInt& x, const QuadInt& y) {
  const Int u1 = x.twice_u(), v1 = x.twice_v(), u2 = y.twice_u(), v2 = y.twice_v();
  const Int m(static_cast<long>(mod.value()));
  // ((u1 + v1 s)(u2 + v2 s))/4 with s^2 = -m; the numerators are even.
  Int tu = u1 * u2 - m * v1 * v2;
  Int tv = u1 * v2 + u2 * v1;
  return from_twice(mod, tu / 2, tv / 2);
}

QuadInt qi_conj(const QuadInt& x) { return x.conjugate(); }

Int qi_norm(const Modulus& mod, const QuadInt& x) {
  const Int tu = x.twice_u(), tv = x.twice_v();
  return (tu * tu + Int(static_cast<long>(mod.value())) * tv * tv) / 4;
}

bool qi_divisible(const Modulus& mod, const QuadInt& z, const Int& q) {
  if (sgn(q) == 0) throw DomainError("division by zero");
  const Int tu = z.twice_u(), tv = z.twice_v();
  if (mpz_divisible_p(tu.get_mpz_t(), q.get_mpz_t()) == 0 ||
      mpz_divisible_p(tv.get_mpz_t(), q.get_mpz_t()) == 0) {
    return false;
  }
  const Int a = tu / q, b = tv / q;
  if (even(a) && even(b)) return true;
  return mod.has_half_integers() && !even(a) && !even(b);
}

QuadInt qi_divide_exact(const Modulus& mod, const QuadInt& z, const Int& q) {
  if (!qi_divisible(mod, z, q)) throw DomainError("element is not divisible by " + q.get_str());
  return from_twice(mod, z.twice_u() / q, z.twice_v() / q);
}

bool in_prime_ideal(const Modulus& mod, const QuadInt& z, const PrimeSplitInfo& prime, bool conj) {
  const Int tu = z.twice_u(), tv = z.twice_v();
  const Int p(static_cast<long>(prime.p));
  switch (prime.kind) {
    case SplitKind::Inert:
      return qi_divisible(mod, z, p);
    case SplitKind::Ramified:
      if (prime.p == 2) {
        // z = u + v sqrt(-m) and the ideal is <2, r + sqrt(-m)> with r = m mod 2.
        return even(z.u() - z.v() * *prime.root);
      }
      return mpz_divisible_p(tu.get_mpz_t(), p.get_mpz_t()) != 0;
    case SplitKind::Split:
      break;
  }
  if (prime.p == 2) {
    // <2, (1 + sqrt(-m))/2>: z = (tu - tv)/2 + tv * (1 + sqrt(-m))/2.
    Int diff = conj ? Int(tu + tv) : Int(tu - tv);
    return mpz_divisible_ui_p(diff.get_mpz_t(), 4) != 0;
  }
  const std::int64_t r = conj ? prime.p - *prime.root : *prime.root;
  // sqrt(-m) = -r modulo l(p), and 2 is a unit there.
  Int residue = tu - tv * r;
  return mpz_divisible_p(residue.get_mpz_t(), p.get_mpz_t()) != 0;
}

unsigned prime_ideal_valuation(const Modulus& mod, const QuadInt& z, const PrimeSplitInfo& prime,
                               bool conj) {
  if (z.is_zero()) throw DomainError("valuation of zero");
  const Int p(static_cast<long>(prime.p));
  const unsigned per_rational = prime.kind == SplitKind::Ramified ? 2 : 1;
  unsigned count = 0;
  QuadInt w = z;
  while (qi_divisible(mod, w, p)) {
    w = qi_divide_exact(mod, w, p);
    count += per_rational;
  }
  if (prime.kind != SplitKind::Inert && in_prime_ideal(mod, w, prime, conj)) {
    Int n = qi_norm(mod, w);
    count += remove_factor(n, prime.p);
  }
  return count;
}

}  // namespace apt
