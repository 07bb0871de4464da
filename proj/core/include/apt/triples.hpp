#pragma once

// The group of primitive almost Pythagorean triples: projective classes
// [a, b, c] of primitive solutions of a^2 + m*b^2 = c^2 under the law
// induced by multiplying a + b*sqrt(-m) in C.

#include <cstdint>
#include <ostream>

#include "apt/arith.hpp"
#include "apt/quadfield.hpp"

namespace apt {

/// Canonical representative: gcd(a, b, c) = 1, c > 0, a > 0.
class Triple {
 public:
  /// The identity [1, 0, 1].
  Triple() : a_(1), b_(0), c_(1) {}

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }

  bool is_identity() const { return sgn(b_) == 0; }
  bool satisfies(const Modulus& mod) const;

  bool operator==(const Triple&) const = default;

  friend Triple normalize(const Modulus& mod, Int a, Int b, Int c);
  friend Triple negate(const Triple& t);

 private:
  Triple(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  Int a_, b_, c_;
};

/// Prints [a,b,c].
std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Canonical representative of the class of (a, b, c). Throws NotASolution
/// unless a^2 + m*b^2 = c^2 with c != 0.
Triple normalize(const Modulus& mod, Int a, Int b, Int c);

/// [a1*a2 - m*b1*b2, a1*b2 + a2*b1, c1*c2], normalized. Throws NotASolution
/// when either input does not belong to this modulus.
Triple add(const Modulus& mod, const Triple& x, const Triple& y);

/// [a, -b, c].
Triple negate(const Triple& t);

Triple subtract(const Modulus& mod, const Triple& x, const Triple& y);

/// n*t by double-and-add; negative n goes through negate.
Triple scalar_mul(const Modulus& mod, const Int& n, const Triple& t);

}  // namespace apt
