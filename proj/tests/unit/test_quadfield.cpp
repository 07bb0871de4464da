#include <gtest/gtest.h>

#include <random>

#include "apt/errors.hpp"
#include "apt/quadfield.hpp"
#include "../support/oracles.hpp"

using apt::Int;
using apt::Modulus;
using apt::QuadInt;
using apt::SplitKind;

TEST(Modulus, RejectsInvalid) {
  for (std::int64_t m : {-5, 0, 1, 2, 3, 4, 12, 18, 50}) EXPECT_THROW(Modulus{m}, apt::InvalidModulus) << m;
}

TEST(Modulus, DeltaAndDisc) {
  EXPECT_EQ(Modulus(23).delta(), 0);
  EXPECT_EQ(Modulus(23).disc(), -23);
  EXPECT_EQ(Modulus(35).disc(), -35);
  EXPECT_EQ(Modulus(974).delta(), 1);
  EXPECT_EQ(Modulus(974).disc(), -3896);
  EXPECT_EQ(Modulus(5).disc(), -20);
  for (std::int64_t m = 4; m < 300; ++m) {
    if (!oracle::is_square_free_naive(m)) continue;
    const std::int64_t d = Modulus(m).disc();
    EXPECT_TRUE(((d % 4) + 4) % 4 <= 1) << m;
  }
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(apt::kronecker(Modulus(35), 71), 1);
  EXPECT_EQ(apt::kronecker(Modulus(35), 5), 0);
  EXPECT_EQ(apt::kronecker(Modulus(23), 2), 1);
  EXPECT_EQ(apt::kronecker(Modulus(23), 5), -1);
}

TEST(Kronecker, MatchesEulerCriterion) {
  for (std::int64_t m : {5, 6, 7, 15, 23, 35, 71, 974, 1001}) {
    const Modulus mod(m);
    for (std::int64_t p = 2; p < 800; ++p) {
      if (!oracle::is_prime_naive(p)) continue;
      int want = oracle::legendre_euler(-m, p);
      if (p == 2 && mod.disc() % 2 == 0) want = 0;
      EXPECT_EQ(apt::kronecker(mod, p), want) << "m=" << m << " p=" << p;
    }
  }
}

TEST(SqrtMod, Examples) {
  EXPECT_EQ(apt::sqrt_mod(10, 41), 16);
  EXPECT_EQ(apt::sqrt_mod(-974, 41), 16);
  EXPECT_EQ(apt::sqrt_mod(0, 7), 0);
  EXPECT_EQ(apt::sqrt_mod(1, 3), 1);
  EXPECT_FALSE(apt::sqrt_mod(2, 5).has_value());
  EXPECT_THROW((void)apt::sqrt_mod(1, 2), apt::DomainError);
}

TEST(SqrtMod, AgreesWithScanAndIsCanonical) {
  for (std::int64_t p = 3; p < 400; p += 2) {
    if (!oracle::is_prime_naive(p)) continue;
    for (std::int64_t a = -5; a < p; ++a) {
      const auto got = apt::sqrt_mod(a, p);
      const auto any = oracle::sqrt_mod_scan(a, p);
      ASSERT_EQ(got.has_value(), any.has_value()) << a << " mod " << p;
      if (!got) continue;
      EXPECT_EQ((*got * *got - a) % p, 0);
      EXPECT_LE(*got, (p - 1) / 2);
      EXPECT_EQ(*got, std::min(*any, (p - *any) % p));
    }
  }
}

TEST(Splitting, Examples) {
  const auto s41 = apt::splitting_type(Modulus(974), 41);
  EXPECT_EQ(s41.kind, SplitKind::Split);
  EXPECT_EQ(s41.root, 16);
  EXPECT_EQ(apt::splitting_type(Modulus(974), 5).root, 1);
  EXPECT_EQ(apt::splitting_type(Modulus(35), 5).kind, SplitKind::Ramified);
  EXPECT_EQ(apt::splitting_type(Modulus(23), 5).kind, SplitKind::Inert);
  EXPECT_EQ(apt::splitting_type(Modulus(23), 2).root, 1);
}

TEST(Splitting, Trichotomy) {
  for (std::int64_t m : {7, 23, 35, 974}) {
    const Modulus mod(m);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 37, 41, 487, 983}) {
      const auto info = apt::splitting_type(mod, p);
      const int k = apt::kronecker(mod, p);
      EXPECT_EQ(info.kind == SplitKind::Split, k == 1);
      EXPECT_EQ(info.kind == SplitKind::Ramified, k == 0);
      EXPECT_EQ(info.kind == SplitKind::Inert, k == -1);
      if (info.kind == SplitKind::Split && p != 2) {
        const std::int64_t r = *info.root;
        EXPECT_EQ(((r * r + m) % p), 0);
        EXPECT_EQ((((p - r) * (p - r) + m) % p), 0);
      }
    }
  }
}

TEST(QuadInt, ParityRules) {
  const Modulus m23(23), m974(974);
  EXPECT_THROW((void)QuadInt::halves(m974, 1, 1), apt::ParityError);
  EXPECT_THROW((void)QuadInt::halves(m23, 1, 2), apt::ParityError);
  const auto z = QuadInt::halves(m23, 4, 6);
  EXPECT_FALSE(z.half());
  EXPECT_EQ(z.u(), 2);
}

TEST(QuadInt, NormExamples) {
  const Modulus m7(7), m23(23);
  EXPECT_EQ(apt::qi_norm(m7, QuadInt::halves(m7, -3, 1)), 4);
  EXPECT_EQ(apt::qi_norm(m23, QuadInt::integral(6, 1)), 59);
  const Modulus m(974);
  const auto p = apt::qi_mul(m, QuadInt::integral(1, 1), QuadInt::integral(1, -1));
  EXPECT_EQ(p, QuadInt::integral(975, 0));
}

TEST(QuadInt, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-500, 500);
  for (std::int64_t m : {7, 23, 35, 974}) {
    const Modulus mod(m);
    for (int i = 0; i < 300; ++i) {
      auto make = [&] {
        int u = d(rng), v = d(rng);
        if (mod.has_half_integers() && i % 2 == 0) {
          if ((u - v) % 2 != 0) ++u;
          return QuadInt::halves(mod, u, v);
        }
        return QuadInt::integral(u, v);
      };
      const QuadInt x = make(), y = make();
      EXPECT_EQ(apt::qi_norm(mod, apt::qi_mul(mod, x, y)), apt::qi_norm(mod, x) * apt::qi_norm(mod, y));
      const QuadInt n = apt::qi_mul(mod, x, apt::qi_conj(x));
      EXPECT_EQ(n.v(), 0);
      EXPECT_EQ(n.u(), apt::qi_norm(mod, x));
    }
  }
}

TEST(QuadInt, PrimeIdealMembershipAndValuation) {
  const Modulus mod(974);
  const auto p5 = apt::splitting_type(mod, 5);
  // 1 + sqrt(-974) lies in l(5) = <5, 1 + sqrt(-m)>, not in its conjugate.
  const QuadInt z = QuadInt::integral(1, 1);
  EXPECT_TRUE(apt::in_prime_ideal(mod, z, p5));
  EXPECT_FALSE(apt::in_prime_ideal(mod, z, p5, true));
  EXPECT_EQ(apt::prime_ideal_valuation(mod, z, p5), 2U);  // N = 975 = 3 * 5^2 * 13
  const QuadInt w = apt::qi_mul(mod, z, QuadInt::integral(5, 0));
  EXPECT_EQ(apt::prime_ideal_valuation(mod, w, p5), 3U);
  EXPECT_EQ(apt::prime_ideal_valuation(mod, w, p5, true), 1U);
}

TEST(QuadInt, DivisionByRationals) {
  const Modulus m23(23);
  const QuadInt z = QuadInt::integral(3, 1);  // 3 + sqrt(-23) = 2 * (3 + sqrt(-23))/2
  EXPECT_TRUE(apt::qi_divisible(m23, z, 2));
  EXPECT_EQ(apt::qi_divide_exact(m23, z, 2), QuadInt::halves(m23, 3, 1));
  EXPECT_FALSE(apt::qi_divisible(Modulus(974), z, 2));
}
