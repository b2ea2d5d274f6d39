#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cansyz/polynomial.hpp"

using namespace cansyz;

namespace {
RingPtr xyz(std::uint32_t p) { return PolyRing::make(PrimeField(p), {"x", "y", "z"}); }
Polynomial parse(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }
Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  int i = 0;
  for (int x : e) m.set(i++, x);
  return m;
}
}  // namespace

TEST(Order, GrevlexExamples) {
  auto R = xyz(2);
  EXPECT_GT(R->cmp(mono({2, 1, 0}), mono({1, 1, 1})), 0);
  EXPECT_EQ(R->cmp(mono({1, 2, 3}), mono({1, 2, 3})), 0);
  EXPECT_GT(R->cmp(mono({1, 0, 0}), mono({0, 1, 0})), 0);
  EXPECT_GT(R->cmp(mono({0, 2, 0}), mono({1, 0, 1})), 0);
}

TEST(Order, BlockEliminates) {
  auto R = PolyRing::make(PrimeField(2), {"x", "y", "z", "w"}, MonomialOrder::eliminate(3));
  EXPECT_GT(R->cmp(mono({1, 0, 0, 0}), mono({0, 0, 0, 5})), 0);
  EXPECT_EQ(R->cmp(mono({0, 0, 0, 5}), mono({0, 0, 0, 5})), 0);
}

TEST(Order, TotalAndMultiplicative) {
  Rng rng(5);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::eliminate(2)}) {
    auto R = PolyRing::make(PrimeField(3), {"a", "b", "c", "d", "e"}, order);
    auto rnd = [&] {
      Monomial m;
      for (int i = 0; i < 5; ++i) m.set(i, static_cast<std::uint32_t>(rng.uniform(4)));
      return m;
    };
    for (int k = 0; k < 2000; ++k) {
      Monomial a = rnd(), b = rnd(), n = rnd();
      const int c = R->cmp(a, b);
      EXPECT_EQ(c, -R->cmp(b, a));
      EXPECT_EQ(c == 0, a == b);
      if (c != 0) EXPECT_EQ(c > 0, R->cmp(a * n, b * n) > 0);
      if (!n.is_one()) EXPECT_GT(R->cmp(a * n, a), 0);
    }
  }
}

TEST(Poly, Arithmetic) {
  auto R2 = xyz(2), R3 = xyz(3);
  auto f = parse(R2, "x+y");
  EXPECT_EQ(f * f, parse(R2, "x^2+y^2"));
  EXPECT_EQ(f * Polynomial::constant(R2, 1), f);
  EXPECT_EQ(parse(R3, "x+y") * parse(R3, "x+2y"), parse(R3, "x^2+2*y^2"));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_TRUE((f * f).is_homogeneous());
}

TEST(Poly, ParseAndFormat) {
  auto R = PolyRing::indexed(PrimeField(5), "w", 12);
  auto f = parse(R, "w0*w3+2*w1^2-w2*w4");
  EXPECT_EQ(f.to_string(), "2*w1^2+w0*w3-w2*w4");
  EXPECT_EQ(parse(R, f.to_string()), f);
  EXPECT_EQ(parse(R, "w10 w11"), parse(R, "w10*w11"));
  EXPECT_EQ(parse(R, "3w1 - 3 w1"), Polynomial(R));
  EXPECT_EQ(parse(R, "-w1"), parse(R, "4*w1"));
  EXPECT_THROW(parse(R, "w12"), ParseError);
  EXPECT_THROW(parse(R, "w1 +"), ParseError);
  EXPECT_THROW(parse(R, ""), ParseError);
  EXPECT_THROW(parse(R, "w1 ^"), ParseError);
  try {
    parse_polynomial(R, "q", 7);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7);
  }
}

TEST(Poly, RoundTripRandom) {
  Rng rng(17);
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    auto R = PolyRing::indexed(PrimeField(p), "w", 6);
    for (int k = 0; k < 20; ++k) {
      auto f = random_form(3, R, rng);
      EXPECT_EQ(parse(R, f.to_string()), f);
    }
  }
}

TEST(Poly, NormalFormExamples) {
  auto R = xyz(2);
  EXPECT_TRUE(normal_form(parse(R, "x^2"), {parse(R, "x")}).is_zero());
  EXPECT_EQ(normal_form(parse(R, "y"), {parse(R, "x")}), parse(R, "y"));
  EXPECT_TRUE(normal_form(parse(R, "x^2+x*y"), {parse(R, "x+y")}).is_zero());
}

TEST(Poly, DivisionCertificate) {
  Rng rng(99);
  for (std::uint32_t p : {2u, 5u}) {
    auto R = PolyRing::indexed(PrimeField(p), "v", 4);
    for (int k = 0; k < 50; ++k) {
      std::vector<Polynomial> G;
      for (int i = 0; i < 3; ++i) {
        auto g = random_form(1 + static_cast<int>(rng.uniform(2)), R, rng);
        if (!g.is_zero()) G.push_back(g);
      }
      auto f = random_form(4, R, rng);
      std::vector<Polynomial> q;
      auto r = normal_form(f, G, q);
      Polynomial recon = r;
      for (std::size_t i = 0; i < G.size(); ++i) recon += q[i] * G[i];
      EXPECT_EQ(recon, f);
      for (const auto& t : r.terms())
        for (const auto& g : G) EXPECT_FALSE(divides(g.lead_monomial(), t.m));
      EXPECT_TRUE(r.is_homogeneous());
    }
  }
}

TEST(Poly, RandomFormDeterministicAndUniform) {
  auto R = xyz(2);
  Rng a(42), b(42);
  EXPECT_EQ(random_form(4, R, a), random_form(4, R, b));
  Rng s(1);
  EXPECT_TRUE(random_form(0, R, s).is_zero() || random_form(0, R, s).degree() == 0);
  std::map<std::string, int> counts;
  Rng rng(8);
  for (int k = 0; k < 8000; ++k) counts[random_form(1, R, rng).to_string()]++;
  EXPECT_EQ(counts.size(), 8u);
  for (const auto& [s2, c] : counts) EXPECT_NEAR(c, 1000, 150) << s2;
}

TEST(Poly, Jacobian) {
  auto R2 = xyz(2), R3 = xyz(3);
  EXPECT_TRUE(derivative(parse(R2, "x^2"), 0).is_zero());
  EXPECT_EQ(derivative(parse(R2, "x*y"), 0), parse(R2, "y"));
  for (const auto& d : jacobian(parse(R3, "x^3+y^3+z^3"))) EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(jacobian(parse(R3, "x^2*y+z^3"))[0], parse(R3, "2*x*y"));
}

TEST(Poly, Substitute) {
  auto R = xyz(3);
  auto f = parse(R, "x^2+y*z");
  auto g = substitute(f, {parse(R, "y"), parse(R, "x"), parse(R, "z")}, R);
  EXPECT_EQ(g, parse(R, "y^2+x*z"));
}

TEST(MonomialIndexer, RankMatchesEnumeration) {
  for (int n : {1, 3, 7, 10}) {
    MonomialIndexer idx(n);
    for (int d = 0; d <= 5; ++d) {
      auto list = idx.enumerate(d);
      ASSERT_EQ(list.size(), idx.count(d));
      std::set<std::size_t> seen;
      for (std::size_t i = 0; i < list.size(); ++i) {
        EXPECT_EQ(idx.rank(list[i]), i);
        seen.insert(idx.rank(list[i]));
      }
      EXPECT_EQ(seen.size(), list.size());
    }
  }
}

TEST(Ring, MonomialsOfDegreeWeighted) {
  auto R = PolyRing::make(PrimeField(2), {"w", "x", "y"}, MonomialOrder::grevlex(), {1, 2, 3});
  // w^6, w^4 x, w^3 y, w^2 x^2, w x y, x^3, y^2
  EXPECT_EQ(R->monomials_of_degree(6).size(), 7u);
  EXPECT_EQ(xyz(2)->monomials_of_degree(2).size(), 6u);
}
