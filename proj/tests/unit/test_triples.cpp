#include <gtest/gtest.h>

#include <sstream>

#include "apt/arith.hpp"
#include "apt/errors.hpp"
#include "apt/triples.hpp"
#include "../support/gen.hpp"
#include "../support/oracles.hpp"

using apt::Int;
using apt::Modulus;
using apt::Triple;

namespace {

Triple T(const Modulus& mod, long a, long b, long c) { return apt::normalize(mod, Int(a), Int(b), Int(c)); }

std::string str(const Triple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

}  // namespace

TEST(Normalize, Examples) {
  EXPECT_TRUE(T(Modulus(35), 2, 0, 2).is_identity());
  EXPECT_EQ(str(T(Modulus(7), -3, 1, 4)), "[3,-1,4]");
  EXPECT_EQ(str(T(Modulus(35), -34, 2, 36)), "[17,-1,18]");
  EXPECT_EQ(str(T(Modulus(35), 34, -2, -36)), "[17,-1,18]");
}

TEST(Normalize, Errors) {
  EXPECT_THROW(T(Modulus(35), 1, 1, 7), apt::NotASolution);
  EXPECT_THROW(T(Modulus(35), 0, 0, 0), apt::NotASolution);
  EXPECT_THROW(T(Modulus(35), 0, 1, 0), apt::NotASolution);
}

TEST(Normalize, Idempotent) {
  gen::Rng rng(1);
  const Modulus mod(974);
  for (int i = 0; i < 200; ++i) {
    const Triple t = gen::square_triple(mod, rng);
    EXPECT_EQ(apt::normalize(mod, t.a(), t.b(), t.c()), t);
    EXPECT_EQ(apt::normalize(mod, -t.a() * 3, -t.b() * 3, t.c() * 3), t);
  }
}

TEST(Add, KnownSumFor974) {
  const Modulus mod(974);
  EXPECT_EQ(apt::add(mod, T(mod, 4141, 66, 4625), T(mod, 14651, 174, 15625)), T(mod, 3167, 108, 4625));
}

TEST(Add, IdentityAndInverse) {
  const Modulus mod(23);
  const Triple t = T(mod, 13, 12, 59);
  EXPECT_EQ(apt::add(mod, t, Triple{}), t);
  EXPECT_TRUE(apt::add(mod, t, apt::negate(t)).is_identity());
  EXPECT_EQ(str(apt::negate(t)), "[13,-12,59]");
  EXPECT_EQ(apt::negate(Triple{}), Triple{});
  EXPECT_EQ(apt::negate(apt::negate(t)), t);
}

TEST(Add, ForeignTripleIsRejected) {
  EXPECT_THROW((void)apt::add(Modulus(35), T(Modulus(23), 13, 12, 59), Triple{}), apt::NotASolution);
}

TEST(ScalarMul, Examples) {
  const Modulus m35(35), m7(7);
  EXPECT_EQ(str(apt::scalar_mul(m35, 2, T(m35, 1, 1, 6))), "[17,-1,18]");
  EXPECT_TRUE(apt::scalar_mul(m35, 0, T(m35, 1, 1, 6)).is_identity());
  EXPECT_EQ(str(apt::scalar_mul(m7, 2, T(m7, 3, 1, 4))), "[1,3,8]");
}

TEST(ScalarMul, MatchesRepeatedAddition) {
  gen::Rng rng(2);
  for (std::int64_t m : {23, 35, 974}) {
    const Modulus mod(m);
    for (int i = 0; i < 30; ++i) {
      const Triple t = gen::square_triple(mod, rng, 15);
      Triple acc;
      for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(apt::scalar_mul(mod, n, t), acc);
        EXPECT_EQ(apt::scalar_mul(mod, -n, t), apt::negate(acc));
        acc = apt::add(mod, acc, t);
      }
    }
  }
}

TEST(TripleGroup, ClosureAndLaws) {
  gen::Rng rng(7);
  for (std::int64_t m : {6, 23, 35, 974}) {
    const Modulus mod(m);
    for (int i = 0; i < 150; ++i) {
      const Triple a = gen::square_triple(mod, rng), b = gen::square_triple(mod, rng), c = gen::square_triple(mod, rng);
      const Triple ab = apt::add(mod, a, b);
      EXPECT_TRUE(oracle::is_primitive_solution(m, ab.a(), ab.b(), ab.c()));
      EXPECT_GT(ab.a(), 0);
      EXPECT_EQ(ab, apt::add(mod, b, a));
      EXPECT_EQ(apt::add(mod, ab, c), apt::add(mod, a, apt::add(mod, b, c)));
    }
  }
}

TEST(TripleGroup, TorsionFreeSpotCheck) {
  gen::Rng rng(8);
  for (std::int64_t m : {5, 23, 35, 974}) {
    const Modulus mod(m);
    for (int i = 0; i < 100; ++i) {
      const Triple t = gen::square_triple(mod, rng);
      if (t.is_identity()) continue;
      for (int n = 1; n <= 6; ++n) EXPECT_FALSE(apt::scalar_mul(mod, n, t).is_identity());
    }
  }
}

TEST(TripleGroup, ThirdComponentPrimesSplit) {
  // Every odd prime dividing c has (-m/q) = 1; parity constraints on c.
  gen::Rng rng(9);
  for (std::int64_t m : {7, 15, 23, 35, 39, 974}) {
    const Modulus mod(m);
    for (int i = 0; i < 200; ++i) {
      const Triple t = gen::square_triple(mod, rng, 60);
      for (const auto& [q, e] : apt::factor_complete(t.c()).factors) {
        if (q != 2) EXPECT_EQ(apt::kronecker(mod, q), 1) << "m=" << m << " q=" << q;
      }
      if (mpz_even_p(t.c().get_mpz_t())) EXPECT_EQ(((-m) % 4 + 4) % 4, 1);
      if (((-m) % 8 + 8) % 8 == 5) EXPECT_EQ(mpz_divisible_ui_p(t.c().get_mpz_t(), 4), 0) << m;
    }
  }
}
