#include <gtest/gtest.h>

#include <map>

#include "apt/decompose.hpp"
#include "apt/errors.hpp"
#include "../support/gen.hpp"
#include "../support/oracles.hpp"

using apt::BasisBuilder;
using apt::Decomposer;
using apt::Decomposition;
using apt::FactorStyle;
using apt::Int;
using apt::Modulus;
using apt::Triple;

namespace {

Triple T(const Modulus& mod, long a, long b, long c) { return apt::normalize(mod, Int(a), Int(b), Int(c)); }

apt::PillarConfig pillars(std::vector<std::int64_t> p) { return {std::move(p), FactorStyle::InvariantFactors}; }

}  // namespace

TEST(IdealValuations, Examples) {
  const Modulus m23(23), m974(974);
  const auto v = apt::ideal_valuations(m23, T(m23, 13, 12, 59));
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v.begin()->first.p, 59);
  EXPECT_EQ(v.begin()->second, 2U);
  EXPECT_TRUE(apt::ideal_valuations(m23, Triple{}).empty());
  const auto w = apt::ideal_valuations(m974, T(m974, 359, 16, 615));
  ASSERT_EQ(w.size(), 3U);
  for (const auto& [k, e] : w) EXPECT_EQ(e, 2U) << k.p;
}

TEST(IdealValuations, EvenExponentsAndNormConservation) {
  gen::Rng rng(21);
  for (std::int64_t m : {7, 23, 35, 974}) {
    const Modulus mod(m);
    const BasisBuilder b(mod);
    std::vector<Triple> gens;
    for (const auto& e : b.enumerate(60)) gens.push_back(e.triple);
    for (int i = 0; i < 100; ++i) {
      const Triple t = gen::any_triple(mod, gens, rng);
      Int prod = 1;
      for (const auto& [k, e] : apt::ideal_valuations(mod, t)) {
        EXPECT_EQ(e % 2, 0U);
        for (unsigned j = 0; j < e; ++j) prod *= k.p;
      }
      const Int root = mpz_even_p(t.c().get_mpz_t()) ? Int(t.c() / 2) : t.c();
      EXPECT_EQ(prod, root * root);
    }
  }
}

TEST(Decompose, BasisElementsDecomposeToThemselves) {
  for (auto [m, pl] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
           {35, {}}, {23, {2}}, {23, {3}}, {974, {5, 41}}, {974, {}}}) {
    const Modulus mod(m);
    const BasisBuilder b(mod, pillars(pl));
    const Decomposer d(b);
    for (const auto& e : b.enumerate(150)) {
      const Decomposition r = d.decompose(e.triple);
      ASSERT_TRUE(r.verified);
      ASSERT_EQ(r.terms.size(), 1U) << "m=" << m << " p=" << e.p;
      EXPECT_EQ(r.terms[0].first, e.p);
      EXPECT_EQ(r.terms[0].second, 1);
    }
  }
}

TEST(Decompose, KnownDecompositionFor974) {
  const Modulus mod(974);
  const BasisBuilder b(mod, pillars({5, 41}));
  const Decomposer d(b);
  const Decomposition r = d.decompose(T(mod, 4141, 66, 4625));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.terms, (std::vector<std::pair<std::int64_t, Int>>{{5, -1}, {37, 1}}));
  EXPECT_EQ(r.special_coeff, 0);
  EXPECT_EQ(d.recombine({{{37, 1}, {5, -1}}, 0, false}), T(mod, 4141, 66, 4625));
  EXPECT_TRUE(d.recombine({}).is_identity());
}

TEST(Decompose, SpecialElement) {
  const Modulus m7(7);
  const BasisBuilder b(m7);
  const Decomposer d(b);
  const Decomposition r = d.decompose(T(m7, 1, 3, 8));
  EXPECT_TRUE(r.terms.empty());
  EXPECT_EQ(abs(r.special_coeff), 2);
  const Modulus m15(15);
  const BasisBuilder b15(m15);
  const Decomposition s = Decomposer(b15).decompose(apt::scalar_mul(m15, -5, *b15.special()));
  EXPECT_EQ(s.special_coeff, -5);
}

TEST(Decompose, IdentityAndErrors) {
  const Modulus mod(23);
  const BasisBuilder b(mod, pillars({2}));
  const Decomposer d(b);
  const Decomposition r = d.decompose(Triple{});
  EXPECT_TRUE(r.terms.empty());
  EXPECT_TRUE(r.verified);
  EXPECT_THROW((void)d.decompose(T(Modulus(35), 1, 1, 6)), apt::NotASolution);
  EXPECT_THROW((void)d.decompose(T(mod, 13, 12, 59), 50), apt::BasisUnavailable);
  EXPECT_THROW((void)d.recombine({{{59, 1}}, 0, false}, 50), apt::BasisUnavailable);
  EXPECT_THROW((void)d.recombine({{}, 1, false}), apt::DomainError);
}

TEST(Decompose, RoundTripRandomCoefficients) {
  gen::Rng rng(31);
  for (auto [m, pl] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
           {35, {}}, {23, {2}}, {23, {3}}, {974, {5, 41}}, {974, {}}, {7, {}}, {15, {}}, {1155, {}}}) {
    const Modulus mod(m);
    const BasisBuilder b(mod, pillars(pl));
    const Decomposer d(b);
    std::vector<std::int64_t> ps;
    for (const auto& e : b.enumerate(120)) ps.push_back(e.p);
    for (int i = 0; i < 40; ++i) {
      std::map<std::int64_t, Int> want;
      const auto k = gen::uniform(rng, 1, 5);
      for (std::int64_t j = 0; j < k; ++j) {
        want[ps[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(ps.size()) - 1))]] =
            Int(static_cast<long>(gen::uniform(rng, -3, 3)));
      }
      Decomposition s;
      for (const auto& [p, c] : want) {
        if (c != 0) s.terms.emplace_back(p, c);
      }
      if (b.special()) s.special_coeff = static_cast<long>(gen::uniform(rng, -3, 3));
      const Decomposition got = d.decompose(d.recombine(s));
      EXPECT_TRUE(got.verified);
      EXPECT_EQ(got.terms, s.terms) << "m=" << m;
      EXPECT_EQ(got.special_coeff, s.special_coeff);
    }
  }
}

TEST(Decompose, ArbitraryTriplesRecombine) {
  gen::Rng rng(41);
  for (std::int64_t m : {23, 35, 974, 39}) {
    const Modulus mod(m);
    const BasisBuilder b(mod);
    const Decomposer d(b);
    for (int i = 0; i < 60; ++i) {
      const Triple t = gen::square_triple(mod, rng, 80);
      const Decomposition r = d.decompose(t);
      EXPECT_TRUE(r.verified);
      EXPECT_EQ(d.recombine(r), t);
    }
  }
}
