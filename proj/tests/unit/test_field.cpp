#include <gtest/gtest.h>

#include "cansyz/error.hpp"
#include "cansyz/field.hpp"

using namespace cansyz;

TEST(PrimeField, SmallExamples) {
  PrimeField F2(2), F3(3), F101(101);
  EXPECT_EQ(F2.add(1, 1), 0u);
  EXPECT_EQ(F3.inv(2), 2u);
  EXPECT_EQ(F101.inv(7), 29u);
}

TEST(PrimeField, Errors) {
  EXPECT_THROW(PrimeField(4), DomainError);
  EXPECT_THROW(PrimeField(103), DomainError);
  EXPECT_THROW(PrimeField(1), DomainError);
  EXPECT_THROW(PrimeField(5).inv(0), DomainError);
}

TEST(PrimeField, AxiomsOnRandomSamples) {
  Rng rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u, 97u, 101u}) {
    PrimeField F(p);
    for (int k = 0; k < 500; ++k) {
      Coeff a = F.random(rng), b = F.random(rng), c = F.random(rng);
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      EXPECT_EQ(F.mul(a, b), F.mul(b, a));
      EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      EXPECT_EQ(F.sub(a, b), F.add(a, F.neg(b)));
      EXPECT_LT(F.mul(a, b), p);
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    }
  }
}

namespace {
UniPoly P(std::initializer_list<Coeff> c) { return UniPoly(std::vector<Coeff>(c)); }

// Irreducibility by trial division against every monic polynomial of
// degree 1..deg/2.
bool irreducible_by_trial_division(const PrimeField& F, const UniPoly& f) {
  const int n = f.degree();
  const std::uint32_t p = F.characteristic();
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<Coeff> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      if (uni::rem(F, f, UniPoly(c)).is_zero()) return false;
      int i = 0;
      while (i < d && ++c[i] == p) c[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}
}  // namespace

TEST(UniPoly, GcdExamples) {
  PrimeField F3(3), F2(2);
  // x^2 - 1 and x - 1 over F_3
  EXPECT_EQ(uni::gcd(F3, P({2, 0, 1}), P({2, 1})), P({2, 1}));
  UniPoly f = P({1, 2, 2});
  EXPECT_EQ(uni::gcd(F3, f, UniPoly()), uni::monic(F3, f));
  EXPECT_TRUE(uni::gcd(F3, UniPoly(), UniPoly()).is_zero());
  // x^2+x+1 divides x^3 - 1 over F_2
  EXPECT_EQ(uni::gcd(F2, P({1, 1, 1}), P({1, 0, 0, 1})), P({1, 1, 1}));
}

TEST(UniPoly, GcdDividesBoth) {
  Rng rng(3);
  PrimeField F(7);
  for (int k = 0; k < 200; ++k) {
    std::vector<Coeff> a(1 + rng.uniform(6)), b(1 + rng.uniform(6)), c(1 + rng.uniform(3));
    for (auto& x : a) x = F.random(rng);
    for (auto& x : b) x = F.random(rng);
    for (auto& x : c) x = F.random(rng);
    UniPoly common(c);
    UniPoly A = uni::mul(F, UniPoly(a), common), B = uni::mul(F, UniPoly(b), common);
    UniPoly g = uni::gcd(F, A, B);
    if (A.is_zero() && B.is_zero()) continue;
    EXPECT_TRUE(uni::rem(F, A, g).is_zero());
    EXPECT_TRUE(uni::rem(F, B, g).is_zero());
    if (!common.is_zero()) EXPECT_TRUE(uni::rem(F, g, common).is_zero());
    EXPECT_EQ(g.leading(), 1u);
  }
}

TEST(UniPoly, RandomIrreducibleSmallCases) {
  PrimeField F2(2);
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    UniPoly f = uni::random_irreducible(1, F2, rng);
    EXPECT_TRUE(f == P({0, 1}) || f == P({1, 1}));
    EXPECT_EQ(uni::random_irreducible(2, F2, rng), P({1, 1, 1}));
    UniPoly c = uni::random_irreducible(3, F2, rng);
    EXPECT_TRUE(c == P({1, 1, 0, 1}) || c == P({1, 0, 1, 1}));
  }
  EXPECT_THROW(uni::random_irreducible(0, F2, rng), DomainError);
}

TEST(UniPoly, RandomIrreducibleHasNoRootsAndPassesOracle) {
  Rng rng(2024);
  const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13, 31, 53, 97, 101};
  for (int k = 0; k < 1000; ++k) {
    PrimeField F(primes[rng.uniform(std::size(primes))]);
    const int e = 1 + static_cast<int>(rng.uniform(6));
    UniPoly f = uni::random_irreducible(e, F, rng);
    ASSERT_EQ(f.degree(), e);
    ASSERT_EQ(f.leading(), 1u);
    if (e > 1)
      for (Coeff x = 0; x < F.characteristic(); ++x) ASSERT_NE(uni::evaluate(F, f, x), 0u);
    ASSERT_TRUE(uni::is_irreducible(F, f));
    if (F.characteristic() <= 5) ASSERT_TRUE(irreducible_by_trial_division(F, f));
  }
}

TEST(UniPoly, IrreducibilityAgreesWithTrialDivision) {
  // every monic polynomial of degree <= 4 over F_2 and F_3
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (int n = 1; n <= 4; ++n) {
      std::vector<Coeff> c(n + 1, 0);
      c[n] = 1;
      while (true) {
        UniPoly f(c);
        EXPECT_EQ(uni::is_irreducible(F, f), irreducible_by_trial_division(F, f)) << uni::to_string(f);
        int i = 0;
        while (i < n && ++c[i] == p) c[i++] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST(UniPoly, Squarefree) {
  PrimeField F3(3);
  EXPECT_TRUE(uni::is_squarefree(F3, P({1, 0, 1})));
  EXPECT_FALSE(uni::is_squarefree(F3, P({1, 2, 1})));     // (x+1)^2
  EXPECT_FALSE(uni::is_squarefree(F3, P({2, 0, 0, 1})));  // x^3 - 1 = (x-1)^3
}
