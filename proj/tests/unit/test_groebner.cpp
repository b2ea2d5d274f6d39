#include <gtest/gtest.h>

#include "cansyz/groebner.hpp"

using namespace cansyz;

namespace {
RingPtr ring3(std::uint32_t p, std::vector<std::string> names = {"x", "y", "z"}) {
  return PolyRing::make(PrimeField(p), std::move(names));
}
Ideal ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parse_polynomial(R, s));
  return Ideal(R, g);
}
std::vector<std::string> strings(const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.basis()) out.push_back(g.to_string());
  return out;
}
// S-polynomial computed directly from the definition.
Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial L = lcm(f.lead_monomial(), g.lead_monomial());
  const PrimeField& F = f.ring()->field();
  return f.times(L / f.lead_monomial(), F.inv(f.lead_coeff())) - g.times(L / g.lead_monomial(), F.inv(g.lead_coeff()));
}
}  // namespace

TEST(Groebner, Examples) {
  auto R = ring3(2, {"x", "y"});
  EXPECT_EQ(strings(groebner_basis(ideal(R, {"x", "y"}))), (std::vector<std::string>{"y", "x"}));
  EXPECT_EQ(strings(groebner_basis(ideal(R, {"x^2+y^2", "x*y"}))),
            (std::vector<std::string>{"x*y", "x^2+y^2", "y^3"}));
  auto R5 = ring3(5);
  EXPECT_EQ(strings(groebner_basis(ideal(R5, {"2*x^2+y*z"}))), (std::vector<std::string>{"x^2-2*y*z"}));
}

TEST(Groebner, BuchbergerCertificateOnRandomIdeals) {
  Rng rng(123);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 2 + static_cast<int>(rng.uniform(3));
      auto R = PolyRing::indexed(PrimeField(p), "v", n);
      std::vector<Polynomial> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(random_form(1 + static_cast<int>(rng.uniform(3)), R, rng));
      Ideal I(R, gens);
      GroebnerBasis G(I);
      const auto& B = G.basis();
      for (std::size_t i = 0; i < B.size(); ++i) {
        EXPECT_EQ(B[i].lead_coeff(), 1u);
        for (std::size_t j = 0; j < B.size(); ++j) {
          if (i != j) EXPECT_FALSE(divides(B[j].lead_monomial(), B[i].lead_monomial()));
          if (i < j) EXPECT_TRUE(normal_form(spoly(B[i], B[j]), B).is_zero());
        }
        // tails reduced
        for (std::size_t t = 1; t < B[i].size(); ++t)
          for (const auto& b : B) EXPECT_FALSE(divides(b.lead_monomial(), B[i].terms()[t].m));
      }
      for (const auto& g : gens) EXPECT_TRUE(G.contains(g));
      // explicit combinations are members
      Polynomial comb(R);
      for (const auto& g : gens)
        if (!g.is_zero()) comb += g * random_form(4 - g.degree() > 0 ? 4 - g.degree() : 0, R, rng);
      comb = comb.part(4);
      EXPECT_TRUE(G.contains(comb));
      // scheduling independence: permuted generators give the same basis
      std::vector<Polynomial> rev(gens.rbegin(), gens.rend());
      EXPECT_EQ(GroebnerBasis(Ideal(R, rev)), G);
    }
  }
}

TEST(Groebner, EliminateWeighted) {
  auto R = PolyRing::make(PrimeField(7), {"w", "x", "y"}, MonomialOrder::grevlex(), {1, 2, 3});
  Ideal E = eliminate(ideal(R, {"x-w^2", "y-w^3"}), 1);
  ASSERT_EQ(E.size(), 1u);
  auto f = E.gens()[0].monic();
  auto expected = parse_polynomial(E.ring(), "x^3-y^2").monic();
  EXPECT_EQ(f, expected);
  // no elimination: the basis itself
  auto R3 = ring3(3);
  Ideal I = ideal(R3, {"x^2+y^2", "x*y"});
  EXPECT_TRUE(same_ideal(eliminate(I, 0), I));
  auto R2 = ring3(2, {"x", "y"});
  EXPECT_TRUE(eliminate(ideal(R2, {"x"}), 1).is_zero());
}

TEST(Groebner, QuotientSaturateIntersect) {
  auto R = ring3(3);
  auto I = [&](std::initializer_list<const char*> g) { return ideal(R, g); };
  EXPECT_TRUE(same_ideal(ideal_quotient(I({"x*y"}), I({"x"})), I({"y"})));
  EXPECT_TRUE(same_ideal(ideal_quotient(I({"x^2", "x*y"}), I({"x"})), I({"x", "y"})));
  EXPECT_TRUE(same_ideal(ideal_quotient(I({"x^2", "x*y"}), Ideal::unit(R)), I({"x^2", "x*y"})));
  EXPECT_TRUE(same_ideal(ideal_quotient(I({"x^2", "x*y"}), I({"x+y"})), I({"x"})));
  bool flagged = false;
  EXPECT_TRUE(GroebnerBasis(ideal_quotient(I({"x"}), Ideal(R), &flagged)).is_unit());
  EXPECT_TRUE(flagged);

  EXPECT_TRUE(GroebnerBasis(saturate(I({"x^2"}), I({"x"}))).is_unit());
  EXPECT_TRUE(same_ideal(saturate(I({"x^2*y"}), I({"y"})), I({"x^2"})));
  EXPECT_TRUE(same_ideal(saturate(I({"x*y", "x*z"}), Ideal::unit(R)), I({"x*y", "x*z"})));
  // generic (non-variable) saturation path
  EXPECT_TRUE(same_ideal(saturate(I({"x^2*y+x^2*z"}), I({"y+z"})), I({"x^2"})));

  EXPECT_TRUE(same_ideal(intersect(I({"x"}), I({"y"})), I({"x*y"})));
  EXPECT_TRUE(same_ideal(intersect(I({"x", "y"}), Ideal::unit(R)), I({"x", "y"})));
  EXPECT_TRUE(same_ideal(intersect(I({"x", "y"}), I({"x", "z"})), I({"x", "y*z"})));
}

TEST(Groebner, IntersectionRoutesAgree) {
  Rng rng(55);
  for (std::uint32_t p : {2u, 5u}) {
    auto R = PolyRing::indexed(PrimeField(p), "v", 4);
    for (int k = 0; k < 8; ++k) {
      Ideal I(R, {random_form(1, R, rng), random_form(2, R, rng)});
      Ideal J(R, {random_form(1, R, rng), random_form(2, R, rng), random_form(2, R, rng)});
      Ideal a = intersect(I, J), b = intersect_via_module(I, J);
      EXPECT_TRUE(same_ideal(a, b));
      GroebnerBasis GI(I), GJ(J);
      EXPECT_TRUE(GI.contains(a));
      EXPECT_TRUE(GJ.contains(a));
    }
  }
}

TEST(Hilbert, Examples) {
  auto R = ring3(5);
  EXPECT_EQ(hilbert_fn(Ideal(R), 2), 6);
  for (int d = 1; d < 6; ++d) EXPECT_EQ(hilbert_fn(Ideal::maximal(R), d), 0);
  EXPECT_EQ(dim_deg(ideal(R, {"x", "y"})), (DimDeg{0, 1}));
  EXPECT_EQ(dim_deg(Ideal::unit(R)), (DimDeg{-1, 0}));
  EXPECT_EQ(dim_deg(Ideal::maximal(R)), (DimDeg{-1, 1}));
  EXPECT_EQ(dim_deg(Ideal(R)), (DimDeg{2, 1}));
  // twisted cubic in P^3
  auto S = PolyRing::indexed(PrimeField(7), "a", 4);
  Ideal tc(S, {parse_polynomial(S, "a0*a2-a1^2"), parse_polynomial(S, "a0*a3-a1*a2"),
               parse_polynomial(S, "a1*a3-a2^2")});
  EXPECT_EQ(dim_deg(tc), (DimDeg{1, 3}));
  auto hs = hilbert_series(tc);
  for (int d = 0; d < 8; ++d) EXPECT_EQ(hs.polynomial(d), 3 * d + 1);
}

TEST(Hilbert, SeriesMatchesStandardMonomialCount) {
  Rng rng(77);
  for (int k = 0; k < 20; ++k) {
    auto R = PolyRing::indexed(PrimeField(3), "v", 4);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_form(1 + static_cast<int>(rng.uniform(3)), R, rng));
    GroebnerBasis G{Ideal(R, gens)};
    auto hs = hilbert_series(G);
    for (int d = 0; d <= 7; ++d) EXPECT_EQ(hs.value(d), static_cast<long long>(standard_monomials(G, d).size()));
  }
}

TEST(Hilbert, DegreeAdditiveOnDisjointPoints) {
  // random rational points in P^2 over F_101: two disjoint sets
  Rng rng(9);
  PrimeField F(101);
  auto R = PolyRing::make(F, {"x", "y", "z"});
  auto point_ideal = [&](Coeff a, Coeff b) {
    return Ideal(R, {parse_polynomial(R, "x-" + std::to_string(a) + "z"), parse_polynomial(R, "y-" + std::to_string(b) + "z")});
  };
  for (int k = 0; k < 5; ++k) {
    std::vector<Ideal> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(point_ideal(F.random(rng), F.random(rng)));
    Ideal A = intersect(intersect(pts[0], pts[1]), pts[2]);
    Ideal B = intersect(pts[3], pts[4]);
    auto da = dim_deg(A), db = dim_deg(B), du = dim_deg(intersect(A, B));
    EXPECT_EQ(da.dim, 0);
    EXPECT_EQ(du.deg, da.deg + db.deg);
  }
}

TEST(Hilbert, WeightedValues) {
  auto R = PolyRing::make(PrimeField(2), {"w", "x", "y"}, MonomialOrder::grevlex(), {1, 2, 3});
  auto hs = hilbert_series(Ideal(R));
  EXPECT_EQ(hs.value(6), 7);
  EXPECT_THROW(hs.dim_deg(), DomainError);
}
