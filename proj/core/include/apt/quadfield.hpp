#pragma once

// Exact arithmetic in K = Q(sqrt(-m)) and its ring of integers.

#include <cstdint>
#include <optional>
#include <ostream>

#include "apt/arith.hpp"

namespace apt {

/// A square-free m > 3 together with the invariants of Q(sqrt(-m)) that the
/// rest of the library keys off.
class Modulus {
 public:
  /// Throws InvalidModulus unless m > 3 and m is square-free.
  explicit Modulus(std::int64_t m);

  std::int64_t value() const noexcept { return m_; }
  /// 0 when -m = 1 (mod 4), i.e. when O_K contains (u + v sqrt(-m))/2.
  int delta() const noexcept { return delta_; }
  /// Field discriminant: -m when m = 3 (mod 4), otherwise -4m.
  std::int64_t disc() const noexcept { return disc_; }
  bool has_half_integers() const noexcept { return delta_ == 0; }

  bool operator==(const Modulus&) const = default;

 private:
  std::int64_t m_;
  int delta_;
  std::int64_t disc_;
};

/// Kronecker symbol (-m / p) for a prime p. For p = 2 the value is 1 iff
/// -m = 1 (mod 8), 0 iff 2 divides the discriminant, otherwise -1.
int kronecker(const Modulus& mod, std::int64_t p);

enum class SplitKind { Split, Inert, Ramified };

const char* to_string(SplitKind kind);

/// How a rational prime factors in O_K, plus the square root of -m that pins
/// the chosen prime ideal l(p) = <p, root + sqrt(-m)>. For split p = 2 the
/// chosen ideal is <2, (1 + sqrt(-m))/2> and root is recorded as 1.
struct PrimeSplitInfo {
  std::int64_t p = 0;
  SplitKind kind = SplitKind::Inert;
  std::optional<std::int64_t> root;

  bool operator==(const PrimeSplitInfo&) const = default;
};

PrimeSplitInfo splitting_type(const Modulus& mod, std::int64_t p);

/// Square root of a modulo an odd prime p (Tonelli-Shanks). Returns the root
/// in [1, (p-1)/2] for a nonzero residue, 0 when p | a, nothing otherwise.
std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p);

/// An element of O_K. Stored as (u + v sqrt(-m)) / 2 when half() is set and
/// as u + v sqrt(-m) otherwise; a half element always has u and v odd.
class QuadInt {
 public:
  QuadInt() = default;

  static QuadInt integral(Int u, Int v);
  /// (u + v sqrt(-m))/2. Throws ParityError when the ring has no half
  /// integers or u, v have different parity. Even u, v collapse to integral.
  static QuadInt halves(const Modulus& mod, const Int& u, const Int& v);

  const Int& u() const noexcept { return u_; }
  const Int& v() const noexcept { return v_; }
  bool half() const noexcept { return half_; }

  /// Coordinates scaled so that the element is (twice_u + twice_v sqrt(-m))/2.
  Int twice_u() const { return half_ ? u_ : Int(2 * u_); }
  Int twice_v() const { return half_ ? v_ : Int(2 * v_); }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  QuadInt conjugate() const { return QuadInt(u_, Int(-v_), half_); }
  bool operator==(const QuadInt&) const = default;

 private:
  QuadInt(Int u, Int v, bool half) : u_(std::move(u)), v_(std::move(v)), half_(half) {}
  Int u_;
  Int v_;
  bool half_ = false;
};

std::ostream& operator<<(std::ostream& os, const QuadInt& z);

QuadInt qi_mul(const Modulus& mod, const QuadInt& x, const QuadInt& y);
QuadInt qi_conj(const QuadInt& x);
Int qi_norm(const Modulus& mod, const QuadInt& x);

/// Whether z / q lies in O_K for the rational integer q.
bool qi_divisible(const Modulus& mod, const QuadInt& z, const Int& q);
QuadInt qi_divide_exact(const Modulus& mod, const QuadInt& z, const Int& q);

/// Membership of z in l(p), or in its conjugate when `conj` is set.
bool in_prime_ideal(const Modulus& mod, const QuadInt& z, const PrimeSplitInfo& prime,
                    bool conj = false);

/// Exponent of l(p) (or its conjugate) in the factorization of <z>. For an
/// inert prime the ideal is <p>.
unsigned prime_ideal_valuation(const Modulus& mod, const QuadInt& z,
                               const PrimeSplitInfo& prime, bool conj = false);

}  // namespace apt
