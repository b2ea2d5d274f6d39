#include <gtest/gtest.h>

#include <sstream>

#include "cansyz/curve.hpp"
#include "cansyz/koszul.hpp"
#include "cansyz/resolution.hpp"

using namespace cansyz;

namespace {

RingPtr plane(std::uint32_t p) { return PolyRing::make(PrimeField(p), {"x", "y", "z"}); }

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Evaluate f at a rational point by brute force.
Coeff eval_at(const Polynomial& f, std::array<Coeff, 3> pt) {
  const PrimeField& F = f.ring()->field();
  Coeff s = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v = F.mul(v, pt[i]);
    s = F.add(s, v);
  }
  return s;
}

std::string dump(const CurveRecord& c) {
  std::ostringstream os;
  write_curve(os, c);
  return os.str();
}

}  // namespace

TEST(PlaneModel, Params) {
  EXPECT_EQ(plane_model_params(7), std::make_pair(7, 8));
  EXPECT_EQ(plane_model_params(4), std::make_pair(5, 2));
  EXPECT_EQ(plane_model_params(10), std::make_pair(9, 18));
  for (int g = 4; g <= 10; ++g) {
    const auto [d, delta] = plane_model_params(g);
    // Brill-Noether minimal, genus formula, nonempty system
    EXPECT_GE(3 * d - 2 * g - 6, 0);
    EXPECT_LT(3 * (d - 1) - 2 * g - 6, 0);
    EXPECT_EQ((d - 1) * (d - 2) / 2 - delta, g);
    EXPECT_GE(binom(d + 2, 2) - 3 * delta, 1);
  }
  EXPECT_THROW(plane_model_params(3), Unsupported);
  EXPECT_THROW(plane_model_params(11), Unsupported);
}

TEST(PlaneModel, GonalParams) {
  EXPECT_EQ(gonal_model_params(7, 3), (GonalParams{6, 3, 0}));
  EXPECT_EQ(gonal_model_params(8, 3), (GonalParams{7, 4, 1}));
  EXPECT_EQ(gonal_model_params(9, 4), (GonalParams{6, 2, 0}));
  EXPECT_EQ(gonal_model_params(5, 3), (GonalParams{5, 2, 0}));
  for (auto [g, k] : {std::pair{7, 3}, {8, 3}, {9, 4}, {7, 4}, {10, 5}}) {
    const GonalParams gp = gonal_model_params(g, k);
    EXPECT_EQ(gp.mult, gp.d - k);
    EXPECT_EQ((gp.d - 1) * (gp.d - 2) / 2 - binom(gp.mult, 2) - gp.delta, g);
    // minimality in d
    for (int d = k + 2; d < gp.d; ++d) {
      const int m = d - k;
      const long long delta = (d - 1) * (d - 2) / 2 - binom(m, 2) - g;
      EXPECT_TRUE(delta < 0 || binom(d + 2, 2) - binom(m + 1, 2) - 3 * delta < 1);
    }
  }
  EXPECT_THROW(gonal_model_params(7, 2), DomainError);
  EXPECT_THROW(gonal_model_params(7, 5), DomainError);
}

TEST(NodeScheme, SinglePointAndPairs) {
  const RingPtr R = plane(5);
  const PrimeField& F = R->field();
  const NodeScheme one = make_node_scheme(R, {ClosedPoint::rational(F, {0, 0, 1})});
  EXPECT_TRUE(same_ideal(one.ideal, Ideal(R, {P(R, "x"), P(R, "y")})));

  const NodeScheme two = make_node_scheme(R, {ClosedPoint::rational(F, {1, 2, 1}), ClosedPoint::rational(F, {3, 1, 0})});
  const std::vector<long long> expect{1, 2, 2, 2, 2};
  for (int d = 0; d < 5; ++d) EXPECT_EQ(hilbert_fn(two.ideal, d), expect[d]) << d;
  for (const auto& g : two.ideal.gens()) {
    EXPECT_EQ(eval_at(g, {1, 2, 1}), 0u);
    EXPECT_EQ(eval_at(g, {3, 1, 0}), 0u);
  }
  // (2:4:2) is (1:2:1)
  EXPECT_THROW(make_node_scheme(R, {ClosedPoint::rational(F, {1, 2, 1}), ClosedPoint::rational(F, {2, 4, 2})}),
               ConstructionFailure);
}

TEST(NodeScheme, OrbitsOverTinyFields) {
  const RingPtr R = plane(2);
  for (std::uint64_t s = 0; s < 6; ++s) {
    Rng rng(s);
    const NodeScheme N = random_node_scheme(8, R, 4, rng);
    EXPECT_EQ(N.degree(), 8);
    EXPECT_FALSE(N.orbit_degrees().empty());
    EXPECT_LE(N.rational_count(), 7);
    // the scheme is reduced of length 8: Hilbert function reaches 8
    EXPECT_EQ(dim_deg(N.ideal), (DimDeg{0, 8}));
    EXPECT_EQ(hilbert_fn(N.ideal, 8), 8);
  }
  Rng rng(3);
  const NodeScheme N = random_node_scheme(5, plane(101), 4, rng);
  EXPECT_EQ(N.rational_count(), 5);
  EXPECT_TRUE(N.orbit_degrees().empty());
  Rng r2(1);
  const NodeScheme A = random_node_scheme(4, plane(2), 4, r2, true);
  for (const auto& pt : A.points)
    if (pt.degree() == 1) EXPECT_FALSE(pt.coords[0].is_zero() && pt.coords[1].is_zero() && pt.chart == 2);
}

TEST(NodalSystem, Dimensions) {
  const RingPtr R = plane(2);
  const PrimeField& F = R->field();
  const NodeScheme origin = make_node_scheme(R, {ClosedPoint::rational(F, {0, 0, 1})});
  const auto conics = nodal_system(2, origin);
  ASSERT_EQ(conics.size(), 3u);
  for (const auto& q : conics) EXPECT_EQ(q.terms().front().m.e[2], 0) << q.to_string();

  const NodeScheme none = make_node_scheme(R, {});
  EXPECT_EQ(nodal_system(4, none).size(), 15u);

  // 36 - 3 * 8 once no line or conic is forced into the septic
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(s);
    const NodeScheme N = random_node_scheme(8, R, 4, rng, false, 7);
    EXPECT_FALSE(line_overloaded(N.points, F, 7));
    EXPECT_FALSE(conic_overloaded(N.points, F, 7));
    const auto sys = nodal_system(7, N);
    EXPECT_EQ(sys.size(), 12u) << s;
    for (const auto& pt : N.points) {
      if (pt.degree() != 1) continue;
      const std::array<Coeff, 3> a{pt.coords[0][0], pt.coords[1][0], pt.coords[2][0]};
      for (const auto& f : sys) {
        EXPECT_EQ(eval_at(f, a), 0u);
        for (int v = 0; v < 3; ++v) EXPECT_EQ(eval_at(derivative(f, v), a), 0u);
      }
    }
  }
}

TEST(NodeScheme, ConicOverload) {
  const PrimeField F(7);
  // the 8 points of x^2 + y^2 = z^2 over F_7
  std::vector<ClosedPoint> q;
  for (Coeff x = 0; x < 7; ++x)
    for (Coeff y = 0; y < 7; ++y)
      if (F.add(F.mul(x, x), F.mul(y, y)) == 1) q.push_back(ClosedPoint::rational(F, {x, y, 1}));
  ASSERT_EQ(q.size(), 8u);
  EXPECT_TRUE(conic_overloaded(q, F, 7));
  EXPECT_FALSE(conic_overloaded(q, F, 8));
  EXPECT_FALSE(line_overloaded(q, F, 7));
  // a septic singular at all 8 contains the conic: the system is 36 - 24 + 1
  const RingPtr R = PolyRing::make(F, {"x", "y", "z"});
  EXPECT_EQ(nodal_system(7, make_node_scheme(R, q)).size(), 13u);
  q.pop_back();
  EXPECT_FALSE(conic_overloaded(q, F, 7));
  // y z = x^2 passes through the multiple point: 2 * 5 + 5 > 2 * 7, 2 * 5 + 4 is not
  std::vector<ClosedPoint> five;
  for (Coeff t = 1; t <= 5; ++t) five.push_back(ClosedPoint::rational(F, {t, F.mul(t, t), 1}));
  EXPECT_TRUE(conic_overloaded(five, F, 7, 5));
  EXPECT_FALSE(conic_overloaded(five, F, 7, 4));
}

TEST(NodeScheme, LineOverload) {
  const PrimeField F(3);
  auto pt = [&](Coeff x, Coeff y, Coeff z) { return ClosedPoint::rational(F, {x, y, z}); };
  // four nodes on y = 0 force the line into a septic, three do not
  std::vector<ClosedPoint> four{pt(0, 0, 1), pt(1, 0, 1), pt(2, 0, 1), pt(1, 0, 0)};
  EXPECT_TRUE(line_overloaded(four, F, 7));
  four.pop_back();
  EXPECT_FALSE(line_overloaded(four, F, 7));
  // lines through the triple point: 3 + 2 + 2 > 6
  EXPECT_TRUE(line_overloaded({pt(1, 1, 1), pt(2, 2, 1)}, F, 6, 3));
  EXPECT_FALSE(line_overloaded({pt(1, 1, 1), pt(2, 1, 1)}, F, 6, 3));
  // a conjugate pair spans a rational line; with two rational points on it
  Rng rng(0);
  ClosedPoint q;
  q.modulus = uni::random_irreducible(2, F, rng);
  q.coords = {UniPoly::monomial(1), UniPoly::monomial(1), UniPoly::constant(1)};  // on x = y
  EXPECT_FALSE(line_overloaded({q, pt(1, 1, 1)}, F, 7));
  EXPECT_TRUE(line_overloaded({q, pt(1, 1, 1), pt(0, 0, 1)}, F, 7));
}

TEST(VerifyNodal, CubicExamples) {
  for (std::uint32_t p : {3u, 5u, 101u}) {
    const RingPtr R = plane(p);
    const NodeScheme origin = make_node_scheme(R, {ClosedPoint::rational(R->field(), {0, 0, 1})});
    EXPECT_TRUE(verify_nodal(P(R, "y^2*z - x^3 - x^2*z"), origin).ok()) << p;
    const Diagnostics cusp = verify_nodal(P(R, "y^2*z - x^3"), origin);
    EXPECT_TRUE(cusp.failed("node-ordinary")) << p;
    // wrong node location
    const NodeScheme elsewhere = make_node_scheme(R, {ClosedPoint::rational(R->field(), {1, 1, 1})});
    EXPECT_FALSE(verify_nodal(P(R, "y^2*z - x^3 - x^2*z"), elsewhere).ok());
  }
  // char 2: tangent cone xy is ordinary, y^2 + x^2 = (x + y)^2 is not
  const RingPtr R2 = plane(2);
  const NodeScheme o2 = make_node_scheme(R2, {ClosedPoint::rational(R2->field(), {0, 0, 1})});
  EXPECT_TRUE(verify_nodal(P(R2, "x*y*z + x^3 + y^3"), o2).ok());
  EXPECT_TRUE(verify_nodal(P(R2, "y^2*z + x^2*z + x^3"), o2).failed("node-ordinary"));
  // smooth conic, no nodes
  const RingPtr R = plane(7);
  EXPECT_TRUE(verify_nodal(P(R, "x^2 + y^2 + z^2"), make_node_scheme(R, {})).ok());
}

TEST(VerifyNodal, OrdinaryTriplePoint) {
  const RingPtr R = plane(5);
  const NodeScheme none = make_node_scheme(R, {});
  // lowest form x^3 - x*y^2 = x(x - y)(x + y)
  EXPECT_TRUE(verify_nodal(P(R, "x^3*z - x*y^2*z + x^4 + y^4"), none, 3).ok());
  EXPECT_TRUE(verify_nodal(P(R, "x^3*z + x^4 + y^4"), none, 3).failed("multiple-point"));
  EXPECT_TRUE(verify_nodal(P(R, "x^2*y*z + x^4 + y^4"), none, 3).failed("multiple-point"));
}

TEST(Canonical, GenusFourIsCompleteIntersection) {
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const CurveRecord c = random_canonical_curve(4, p, 11);
    EXPECT_TRUE(verify_canonical(c.ideal, 4).ok());
    ResolutionOptions o;
    o.method = ResolutionOptions::Method::Linear;
    o.regularity = 3;
    o.gorenstein = true;
    const BettiTable b = betti_table(free_resolution(c.ideal, 3, o));
    EXPECT_EQ(b, BettiTable::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 0)) << b.to_text();
  }
}

TEST(Canonical, GenusSevenOverTwo) {
  const CurveRecord c = random_canonical_curve(7, 2, 1);
  EXPECT_EQ(c.genus, 7);
  EXPECT_EQ(c.ideal.ring()->nvars(), 7);
  const HilbertSeries hs = hilbert_series(c.ideal);
  for (int n = 2; n < 8; ++n) EXPECT_EQ(hs.value(n), 12 * n - 6) << n;
  int quadrics = 0;
  for (const auto& f : c.ideal.gens()) quadrics += f.degree() == 2;
  EXPECT_EQ(quadrics, 10);
  // node count conservation
  int orbit = 0;
  for (int e : c.meta["orbit_degrees"]) orbit += e;
  EXPECT_EQ(c.meta["rational_nodes"].get<int>() + orbit, 8);
  EXPECT_GT(orbit, 0);
  EXPECT_TRUE(verify_canonical(c.ideal, 7).ok());
}

TEST(Canonical, BadInputsFailNamedClauses) {
  const CurveRecord c = random_canonical_curve(4, 5, 2);
  const RingPtr S = c.ideal.ring();
  // truncation keeps the scheme and breaks saturation
  std::vector<Polynomial> quartics;
  MonomialIndexer idx(4, 5);
  for (const auto& m : idx.enumerate(4)) quartics.push_back(Polynomial::monomial(S, m));
  const Ideal trunc = intersect(c.ideal, Ideal(S, quartics));
  EXPECT_TRUE(verify_canonical(trunc, 4).failed("saturation"));
  EXPECT_FALSE(verify_canonical(trunc, 4).failed("hilbert-polynomial"));
  // two quadrics: degree 4 curve
  const Ideal two(S, {P(S, "w0*w1 - w2*w3"), P(S, "w0^2 + w1^2 + w2^2 + w3^2")});
  const Diagnostics d = verify_canonical(two, 4);
  EXPECT_TRUE(d.failed("dim-deg"));
  EXPECT_TRUE(d.failed("quadrics"));
  // a linear form
  const Ideal lin(S, {P(S, "w0"), P(S, "w1^2 - w2*w3")});
  EXPECT_TRUE(verify_canonical(lin, 4).failed("nondegenerate"));
}

TEST(Canonical, Deterministic) {
  const std::string a = dump(random_canonical_curve(6, 3, 42));
  const std::string b = dump(random_canonical_curve(6, 3, 42));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, dump(random_canonical_curve(6, 3, 43)));
}

TEST(Canonical, TrigonalGenusSeven) {
  CurveOptions o;
  o.gonality = 3;
  const CurveRecord c = random_canonical_curve(7, 2, 5, o);
  EXPECT_EQ(c.meta["route"], "gonal");
  EXPECT_TRUE(verify_canonical(c.ideal, 7).ok());
  KoszulOracle k(c.ideal);
  EXPECT_EQ(k.betti(1, 2), 10);
  EXPECT_EQ(k.betti(1, 3), 4);  // g - k
}

TEST(Canonical, AttemptCap) {
  CurveOptions o;
  o.attempt_cap = 1;
  // a single attempt either succeeds or exhausts; never anything else
  try {
    const CurveRecord c = random_canonical_curve(5, 2, 9, o);
    EXPECT_EQ(c.attempts, 1);
  } catch (const ResourceExhausted&) {
  }
  EXPECT_THROW(random_canonical_curve(11, 2, 0), Unsupported);
  EXPECT_THROW(random_canonical_curve(7, 4, 0), DomainError);
}

TEST(CurveFile, RoundTripAndErrors) {
  const CurveRecord c = random_canonical_curve(5, 3, 7);
  std::istringstream in(dump(c));
  const CurveRecord r = read_curve(in);
  EXPECT_EQ(r.genus, 5);
  EXPECT_EQ(r.characteristic, 3);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_EQ(r.attempts, c.attempts);
  EXPECT_TRUE(same_ideal(r.ideal, c.ideal));
  EXPECT_EQ(dump(r), dump(c));

  auto fails_at = [](const std::string& text, int line) {
    std::istringstream is(text);
    try {
      read_curve(is);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
      return;
    }
    ADD_FAILURE() << "accepted: " << text;
  };
  fails_at("field 4\n", 1);
  fails_at("field 3\nring w0 w1 w2 w3\ngenus 5\n", 3);
  fails_at("field 3\nring w0 w1 w2 w3\ngenus 4\nw0^2 - w1\n", 4);
  fails_at("field 3\nring w0 w1 w2 w3\ngenus 4\nw0*w1 + w7^2\n", 4);
  fails_at("field 3\nring w0 w1 w2 w3\n", 2);
}
