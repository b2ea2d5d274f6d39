#include "cansyz/curve.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cansyz/budget.hpp"
#include "cansyz/linalg.hpp"

namespace cansyz {

std::pair<int, int> plane_model_params(int g) {
  if (g < 4 || g > 10)
    throw Unsupported("genus " + std::to_string(g) + " is outside 4..10; ingest an externally computed ideal instead");
  const int d = (2 * g + 6 + 2) / 3;
  return {d, (d - 1) * (d - 2) / 2 - g};
}

GonalParams gonal_model_params(int g, int k) {
  if (g < 4 || g > 10) throw Unsupported("gonal models cover genus 4..10");
  if (k <= 2 || k >= (g + 3) / 2)
    throw DomainError("gonality " + std::to_string(k) + " outside 2 < k < ceil((g+2)/2)");
  for (int d = k + 2; d <= 40; ++d) {
    const int m = d - k;
    const int delta = (d - 1) * (d - 2) / 2 - m * (m - 1) / 2 - g;
    if (delta < 0) continue;
    const int dim = (d + 2) * (d + 1) / 2 - m * (m + 1) / 2 - 3 * delta;
    if (dim >= 1) return {d, m, delta};
  }
  throw Unsupported("no feasible gonal plane model");
}

// ------------------------------------------------------------ points

namespace {

/// Arithmetic in F_p[t]/(h).
struct Ext {
  const PrimeField& F;
  const UniPoly& h;
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return uni::mulmod(F, a, b, h); }
  UniPoly add(const UniPoly& a, const UniPoly& b) const { return uni::add(F, a, b); }
  UniPoly scale(const UniPoly& a, Coeff c) const { return uni::scale(F, a, c); }
  std::vector<UniPoly> powers(const UniPoly& a, int n) const {
    std::vector<UniPoly> p{uni::rem(F, UniPoly::constant(1), h)};
    for (int i = 1; i <= n; ++i) p.push_back(mul(p.back(), a));
    return p;
  }
};

const PrimeField& field_of(const RingPtr& R) { return R->field(); }

/// Rows expressing linear conditions on the coefficients of degree-D forms
/// (columns indexed by MonomialIndexer ranks).
class Conditions {
 public:
  Conditions(const RingPtr& plane, int D) : R_(plane), D_(D), idx_(3, std::max(D, 0) + 2) {
    if (D >= 0) mons_ = idx_.enumerate(D);
  }
  const std::vector<Monomial>& monomials() const noexcept { return mons_; }
  std::size_t ncols() const noexcept { return mons_.size(); }

  /// F(P) = 0, and with `singular` also the partials off the chart.
  void vanish(const ClosedPoint& P, bool singular) {
    const PrimeField& F = field_of(R_);
    const Ext E{F, P.modulus};
    std::array<std::vector<UniPoly>, 3> pw;
    for (int c = 0; c < 3; ++c) pw[c] = E.powers(P.coords[c], D_);
    const int e = P.degree();
    auto value = [&](const std::array<int, 3>& ex) { return E.mul(E.mul(pw[0][ex[0]], pw[1][ex[1]]), pw[2][ex[2]]); };
    auto emit = [&](const std::vector<UniPoly>& vals) {
      std::vector<SparseVec> rows(e);
      for (std::size_t a = 0; a < vals.size(); ++a)
        for (int k = 0; k < e; ++k)
          if (Coeff c = vals[a][k]) rows[k].push_back({static_cast<std::uint32_t>(a), c});
      for (auto& r : rows)
        if (!r.empty()) rows_.push_back(std::move(r));
    };
    std::vector<UniPoly> vals;
    for (const auto& m : mons_) vals.push_back(value({m.e[0], m.e[1], m.e[2]}));
    emit(vals);
    if (!singular) return;
    for (int u = 0; u < 3; ++u) {
      if (u == P.chart) continue;
      vals.clear();
      for (const auto& m : mons_) {
        std::array<int, 3> ex{m.e[0], m.e[1], m.e[2]};
        const Coeff k = F.reduce(ex[u]);
        if (k == 0) {
          vals.emplace_back();
          continue;
        }
        --ex[u];
        vals.push_back(E.scale(value(ex), k));
      }
      emit(vals);
    }
  }

  /// Multiplicity >= m at (0:0:1).
  void multiplicity(int m) {
    for (std::size_t a = 0; a < mons_.size(); ++a)
      if (static_cast<int>(mons_[a].e[0] + mons_[a].e[1]) < m) rows_.push_back({{static_cast<std::uint32_t>(a), 1}});
  }

  std::size_t rank() const { return rank_of(field_of(R_), ncols(), rows_); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }

  std::vector<Polynomial> kernel() const {
    std::vector<Polynomial> out;
    if (mons_.empty()) return out;
    Echelon E(field_of(R_), ncols());
    for (const auto& r : rows_) E.insert(r);
    for (const auto& kv : E.kernel()) out.push_back(to_poly(kv));
    return out;
  }

  Polynomial to_poly(const SparseVec& v) const {
    std::vector<Term> t;
    for (const auto& [a, c] : v) t.push_back({mons_[a], c, 0});
    return Polynomial(R_, std::move(t));
  }
  SparseVec to_vec(const Polynomial& f) const {
    SparseVec v;
    for (const auto& t : f.terms()) v.push_back({static_cast<std::uint32_t>(idx_.rank(t.m)), t.c});
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  RingPtr R_;
  int D_;
  MonomialIndexer idx_;
  std::vector<Monomial> mons_;
  std::vector<SparseVec> rows_;
};

}  // namespace

ClosedPoint ClosedPoint::rational(const PrimeField& F, std::array<Coeff, 3> xyz) {
  int chart = -1;
  for (int c = 2; c >= 0; --c)
    if (xyz[c] % F.characteristic()) {
      chart = c;
      break;
    }
  if (chart < 0) throw DomainError("(0:0:0) is not a point");
  const Coeff s = F.inv(xyz[chart] % F.characteristic());
  ClosedPoint P;
  P.modulus = UniPoly::monomial(1);
  P.chart = chart;
  for (int c = 0; c < 3; ++c) P.coords[c] = UniPoly::constant(F.mul(xyz[c] % F.characteristic(), s));
  return P;
}

int NodeScheme::degree() const {
  int s = 0;
  for (const auto& p : points) s += p.degree();
  return s;
}

int NodeScheme::rational_count() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](const ClosedPoint& p) { return p.degree() == 1; }));
}

std::vector<int> NodeScheme::orbit_degrees() const {
  std::vector<int> o;
  for (const auto& p : points)
    if (p.degree() > 1) o.push_back(p.degree());
  return o;
}

NodeScheme make_node_scheme(const RingPtr& plane, std::vector<ClosedPoint> points) {
  NodeScheme S;
  S.ring = plane;
  S.points = std::move(points);
  const int total = S.degree();
  if (total == 0) {
    S.ideal = Ideal::unit(plane);
    return S;
  }
  const PrimeField& F = plane->field();
  std::vector<Polynomial> gens, prev;
  bool reached = false;
  for (int D = 1;; ++D) {
    Conditions C(plane, D);
    for (const auto& p : S.points) C.vanish(p, false);
    const std::size_t r = C.rank();
    const std::vector<Polynomial> K = C.kernel();
    Echelon V(F, C.ncols());
    for (const auto& q : prev)
      for (int v = 0; v < 3; ++v) V.insert(C.to_vec(q * Polynomial::variable(plane, v)));
    for (const auto& k : K)
      if (V.insert(C.to_vec(k))) gens.push_back(k);
    prev = K;
    if (reached) break;
    if (static_cast<int>(r) == total) reached = true;
    else if (D >= total) throw ConstructionFailure("nodes", "points are not distinct");
  }
  S.ideal = Ideal(plane, std::move(gens));
  return S;
}

namespace {

/// F_p(x, y) = F_p[t]/h: no proper power of Frobenius fixes both.
bool generates(const PrimeField& F, const UniPoly& h, const UniPoly& x, const UniPoly& y) {
  const int e = h.degree();
  std::uint64_t q = 1;
  for (int j = 1; j < e; ++j) {
    q *= F.characteristic();
    if (e % j) continue;
    if (uni::powmod(F, x, q, h) == x && uni::powmod(F, y, q, h) == y) return false;
  }
  return true;
}

std::vector<ClosedPoint> draw_points(int delta, const PrimeField& F, int max_orbit_deg, Rng& rng, bool avoid_origin) {
  const Coeff p = F.characteristic();
  std::vector<std::array<Coeff, 3>> avail;
  for (Coeff x = 0; x < p; ++x)
    for (Coeff y = 0; y < p; ++y)
      if (!(avoid_origin && x == 0 && y == 0)) avail.push_back({x, y, 1});
  for (Coeff x = 0; x < p; ++x) avail.push_back({x, 1, 0});
  avail.push_back({1, 0, 0});

  // rational nodes only when P^2(F_p) is large next to delta^2; a dense
  // rational configuration has many collinear triples and biases the moduli
  const bool scarce = static_cast<int>(avail.size()) < std::max(delta * delta, delta + 3);
  std::vector<ClosedPoint> pts;
  int remaining = delta;
  while (remaining > 0) {
    const int emax = std::min(max_orbit_deg, remaining);
    if (!avail.empty() && (!scarce || emax < 2)) {
      const std::size_t k = rng.uniform(avail.size());
      pts.push_back(ClosedPoint::rational(F, avail[k]));
      avail[k] = avail.back();
      avail.pop_back();
      remaining -= 1;
      continue;
    }
    if (emax < 2) throw ConstructionFailure("nodes", "no rational point left and orbit degree capped");
    const int e = 2 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(emax - 1)));
    ClosedPoint P;
    P.modulus = uni::random_irreducible(e, F, rng);
    P.chart = 2;
    // uniform (x, y) in F_q^2 whose Frobenius orbit has exact size e
    auto coord = [&] {
      std::vector<Coeff> c(e);
      for (auto& a : c) a = F.random(rng);
      return UniPoly(c);
    };
    UniPoly x, y;
    do {
      x = coord();
      y = coord();
    } while (!generates(F, P.modulus, x, y));
    P.coords = {x, y, UniPoly::constant(1)};
    pts.push_back(std::move(P));
    remaining -= e;
  }
  return pts;
}

}  // namespace

bool line_overloaded(const std::vector<ClosedPoint>& points, const PrimeField& F, int d, int mult) {
  const Coeff p = F.characteristic();
  std::vector<std::array<Coeff, 3>> lines;
  for (Coeff a = 0; a < p; ++a)
    for (Coeff b = 0; b < p; ++b) lines.push_back({a, b, 1});
  for (Coeff a = 0; a < p; ++a) lines.push_back({a, 1, 0});
  lines.push_back({1, 0, 0});
  for (const auto& L : lines) {
    // a line through (0:0:1) meets the multiple point with multiplicity mult
    int load = L[2] == 0 ? mult : 0;
    for (const auto& P : points) {
      const Ext E{F, P.modulus};
      UniPoly v;
      for (int c = 0; c < 3; ++c) v = E.add(v, E.scale(P.coords[c], L[c]));
      if (v.is_zero()) load += 2 * P.degree();
    }
    if (load > d) return true;
  }
  return false;
}

bool conic_overloaded(const std::vector<ClosedPoint>& points, const PrimeField& F, int d, int mult) {
  const RingPtr plane = PolyRing::make(F, {"x", "y", "z"});
  const std::size_t n = points.size();
  // conditions on conics, per closed point
  std::vector<std::vector<SparseVec>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    Conditions C(plane, 2);
    C.vanish(points[i], false);
    rows[i] = C.rows();
  }
  std::vector<SparseVec> origin;
  if (mult > 0) {
    Conditions C(plane, 2);
    C.vanish(ClosedPoint::rational(F, {0, 0, 1}), false);
    origin = C.rows();
  }
  auto on_conic = [&](std::uint64_t mask, bool through_origin) {
    std::vector<SparseVec> all = through_origin ? origin : std::vector<SparseVec>{};
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) all.insert(all.end(), rows[i].begin(), rows[i].end());
    return rank_of(F, 6, all) < 6;
  };
  // every union of closed points for small sets, the whole set otherwise
  const std::uint64_t full = (std::uint64_t{1} << std::min<std::size_t>(n, 63)) - 1;
  for (std::uint64_t mask = n <= 12 ? 1 : full; mask <= full; ++mask) {
    int load = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) load += 2 * points[i].degree();
    if (2 * d < load + mult && mult > 0 && on_conic(mask, true)) return true;
    if (2 * d < load && on_conic(mask, false)) return true;
  }
  return false;
}

NodeScheme random_node_scheme(int delta, const RingPtr& plane, int max_orbit_deg, Rng& rng, bool avoid_origin,
                              int curve_degree, int mult) {
  if (delta < 0) throw DomainError("negative node count");
  const PrimeField& F = plane->field();
  for (int tries = 0; tries < 1000; ++tries) {
    auto pts = draw_points(delta, F, max_orbit_deg, rng, avoid_origin);
    if (curve_degree > 0 && (line_overloaded(pts, F, curve_degree, mult) || conic_overloaded(pts, F, curve_degree, mult)))
      continue;
    try {
      return make_node_scheme(plane, std::move(pts));
    } catch (const ConstructionFailure&) {
      // two draws hit the same closed point
    }
  }
  throw ConstructionFailure("nodes", "no admissible node set in 1000 draws");
}

std::vector<Polynomial> nodal_system(int d, const NodeScheme& nodes, int mult) {
  Conditions C(nodes.ring, d);
  for (const auto& p : nodes.points) C.vanish(p, true);
  if (mult > 0) C.multiplicity(mult);
  return C.kernel();
}

Polynomial random_nodal_curve(int d, const NodeScheme& nodes, Rng& rng, int mult) {
  const auto basis = nodal_system(d, nodes, mult);
  if (basis.empty()) throw ConstructionFailure("curve", "empty linear system");
  const PrimeField& F = nodes.ring->field();
  while (true) {
    Polynomial f(nodes.ring);
    for (const auto& b : basis) f += b.scaled(F.random(rng));
    if (!f.is_zero()) return f;
  }
}

// --------------------------------------------------------- verification

bool Diagnostics::failed(const std::string& clause) const {
  return std::find(failures.begin(), failures.end(), clause) != failures.end();
}

namespace {

/// Second-order Taylor coefficients (A, B, C) of f at P in the chart.
std::array<UniPoly, 3> tangent_cone(const Polynomial& f, const ClosedPoint& P) {
  const PrimeField& F = f.ring()->field();
  const Ext E{F, P.modulus};
  int u = -1, v = -1;
  for (int c = 0; c < 3; ++c)
    if (c != P.chart) (u < 0 ? u : v) = c;
  const int D = std::max(f.degree(), 0);
  const auto pa = E.powers(P.coords[u], D), pb = E.powers(P.coords[v], D);
  std::array<UniPoly, 3> abc;
  for (const auto& t : f.terms()) {
    const int i = t.m.e[u], j = t.m.e[v];
    if (i >= 2) abc[0] = E.add(abc[0], E.scale(E.mul(pa[i - 2], pb[j]), F.mul(t.c, F.reduce(i * (i - 1) / 2))));
    if (i >= 1 && j >= 1) abc[1] = E.add(abc[1], E.scale(E.mul(pa[i - 1], pb[j - 1]), F.mul(t.c, F.reduce(i * j))));
    if (j >= 2) abc[2] = E.add(abc[2], E.scale(E.mul(pa[i], pb[j - 2]), F.mul(t.c, F.reduce(j * (j - 1) / 2))));
  }
  return abc;
}

bool ordinary_node(const Polynomial& f, const ClosedPoint& P) {
  const PrimeField& F = f.ring()->field();
  const Ext E{F, P.modulus};
  const auto [A, B, C] = tangent_cone(f, P);
  if (F.characteristic() == 2) return !B.is_zero();
  const UniPoly disc = uni::sub(F, E.mul(B, B), E.scale(E.mul(A, C), 4));
  return !disc.is_zero();
}

bool ordinary_multiple_point(const Polynomial& f, int mult) {
  const PrimeField& F = f.ring()->field();
  int low = -1;
  for (const auto& t : f.terms()) {
    const int s = t.m.e[0] + t.m.e[1];
    if (low < 0 || s < low) low = s;
  }
  if (low != mult) return false;
  std::vector<Coeff> c(mult + 1, 0);
  for (const auto& t : f.terms())
    if (static_cast<int>(t.m.e[0] + t.m.e[1]) == mult) c[t.m.e[0]] = t.c;
  const UniPoly u(c);  // f_m(x, 1)
  if (mult - u.degree() >= 2) return false;
  return u.degree() <= 0 || uni::is_squarefree(F, u);
}

}  // namespace

Diagnostics verify_nodal(const Polynomial& f, const NodeScheme& nodes, int mult) {
  Diagnostics dg;
  const RingPtr& R = nodes.ring;
  if (f.is_zero() || !f.is_homogeneous()) {
    dg.failures.push_back("homogeneous");
    return dg;
  }
  std::vector<Polynomial> jg{f};
  for (const auto& d : jacobian(f)) jg.push_back(d);
  const Ideal J(R, jg);
  Ideal Js = J;
  if (mult > 0) Js = intersect(saturate_by_variable(J, 0), saturate_by_variable(J, 1));
  const DimDeg dd = dim_deg(Js);
  const int delta = nodes.degree();
  const bool sing_ok = delta == 0 ? dd.dim < 0 : (dd.dim == 0 && dd.deg == delta);
  if (!sing_ok) dg.failures.push_back("singular-scheme");
  if (delta > 0) {
    const GroebnerBasis N(nodes.ideal);
    for (const auto& g : J.gens())
      if (!N.contains(g)) {
        dg.failures.push_back("node-containment");
        break;
      }
  }
  for (const auto& P : nodes.points)
    if (!ordinary_node(f, P)) {
      dg.failures.push_back("node-ordinary");
      break;
    }
  if (mult > 0 && !ordinary_multiple_point(f, mult)) dg.failures.push_back("multiple-point");
  return dg;
}

// ---------------------------------------------------------- canonical

std::vector<Polynomial> adjoint_basis(const Polynomial& f, const NodeScheme& nodes, int mult) {
  Conditions C(nodes.ring, f.degree() - 3);
  for (const auto& p : nodes.points) C.vanish(p, false);
  if (mult > 1) C.multiplicity(mult - 1);
  return C.kernel();
}

namespace {

/// Kernel of Q -> Q(A) mod (f) on forms of degree k in the w's; images[q] = Q_q(A).
std::vector<SparseVec> canonical_piece(const Polynomial& f, int k, const std::vector<Monomial>& wmons,
                                       const std::vector<Polynomial>& images) {
  const RingPtr& R = f.ring();
  const PrimeField& F = R->field();
  const int D = f.degree() - 3;
  const int T = k * D;
  Conditions target(R, T);
  Echelon fm(F, target.ncols());
  if (T - f.degree() >= 0) {
    MonomialIndexer idx(3, T + 2);
    for (const auto& mu : idx.enumerate(T - f.degree())) fm.insert(target.to_vec(f.times(mu)));
  }
  std::vector<SparseVec> trans(target.ncols());
  for (std::size_t q = 0; q < wmons.size(); ++q) {
    budget::check();
    for (const auto& [col, c] : fm.reduce(target.to_vec(images[q]))) trans[col].push_back({static_cast<std::uint32_t>(q), c});
  }
  Echelon K(F, wmons.size());
  for (const auto& r : trans)
    if (!r.empty()) K.insert(r);
  return K.kernel();
}

}  // namespace

Ideal canonical_ideal(const Polynomial& f, const NodeScheme& nodes, int g, int mult) {
  const auto A = adjoint_basis(f, nodes, mult);
  if (static_cast<int>(A.size()) != g)
    throw ConstructionFailure("adjoint", "adjoint system has dimension " + std::to_string(A.size()) + ", expected " +
                                             std::to_string(g));
  const PrimeField& F = f.ring()->field();
  const RingPtr S = PolyRing::indexed(F, "w", g);
  MonomialIndexer widx(g, 4);
  const auto w2 = widx.enumerate(2), w3 = widx.enumerate(3);

  std::vector<Polynomial> im2, im3;
  for (const auto& m : w2) {
    int i = -1, j = -1;
    for (int v = 0; v < g; ++v)
      for (int r = 0; r < m.e[v]; ++r) (i < 0 ? i : j) = v;
    im2.push_back(A[i] * A[j]);
  }
  for (const auto& m : w3) {
    int last = g - 1;
    while (m.e[last] == 0) --last;
    const Monomial rest = m / Monomial::var(last);
    im3.push_back(im2[widx.rank(rest)] * A[last]);
  }
  const auto I2 = canonical_piece(f, 2, w2, im2);
  const auto I3 = canonical_piece(f, 3, w3, im3);

  auto poly = [&](const SparseVec& v, const std::vector<Monomial>& mons) {
    std::vector<Term> t;
    for (const auto& [a, c] : v) t.push_back({mons[a], c, 0});
    return Polynomial(S, std::move(t));
  };
  std::vector<Polynomial> gens;
  for (const auto& v : I2) gens.push_back(poly(v, w2));
  Echelon span3(F, w3.size());
  for (const auto& q : I2)
    for (int v = 0; v < g; ++v) {
      SparseVec s;
      for (const auto& [a, c] : q) s.push_back({static_cast<std::uint32_t>(widx.rank(w2[a] * Monomial::var(v))), c});
      std::sort(s.begin(), s.end());
      span3.insert(s);
    }
  for (const auto& v : I3)
    if (span3.insert(v)) gens.push_back(poly(v, w3));
  return Ideal(S, std::move(gens));
}

Diagnostics verify_canonical(const Ideal& I, int g) {
  Diagnostics dg;
  const RingPtr& R = I.ring();
  if (R->nvars() != g) {
    dg.failures.push_back("ring");
    return dg;
  }
  const GroebnerBasis G(I);
  const HilbertSeries hs = hilbert_series(G);
  const DimDeg dd = dim_deg(G);
  bool hp = dd.dim == 1;
  for (int n = 0; hp && n <= 4; ++n) hp = hs.polynomial(n) == static_cast<long long>(2 * g - 2) * n - g + 1;
  if (!hp) dg.failures.push_back("hilbert-polynomial");
  if (!(dd == DimDeg{1, 2 * g - 2})) dg.failures.push_back("dim-deg");
  const long long quadrics = static_cast<long long>(g) * (g + 1) / 2 - hs.value(2);
  if (hs.value(1) != g || quadrics != static_cast<long long>(g - 2) * (g - 3) / 2) dg.failures.push_back("quadrics");
  bool saturated = true;
  for (const auto& m : G.leads())
    if (m.e[g - 1] > 0) {
      saturated = false;
      break;
    }
  if (!saturated && !G.is_unit()) {
    // I is saturated iff (I : m) = I
    Ideal Q = quotient_by_variable(I, 0);
    for (int v = 1; v < g; ++v) Q = intersect(Q, quotient_by_variable(I, v));
    saturated = same_ideal(Q, I);
  }
  if (!saturated) dg.failures.push_back("saturation");
  if (hs.value(0) != 1 || hs.value(1) != g) dg.failures.push_back("nondegenerate");
  return dg;
}

// ------------------------------------------------------------ driver

CurveRecord random_canonical_curve(int g, std::uint32_t p, std::uint64_t seed, const CurveOptions& opt) {
  const PrimeField F(p);
  int d = 0, delta = 0, mult = 0;
  if (opt.gonality) {
    const GonalParams gp = gonal_model_params(g, *opt.gonality);
    d = gp.d;
    mult = gp.mult;
    delta = gp.delta;
  } else {
    std::tie(d, delta) = plane_model_params(g);
  }
  const RingPtr plane = PolyRing::make(F, {"x", "y", "z"});
  const int cap = opt.attempt_cap > 0 ? opt.attempt_cap : static_cast<int>(10 * p * p);
  std::map<std::string, int> failures;
  for (int attempt = 0; attempt < cap; ++attempt) {
    budget::check();
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    try {
      const NodeScheme nodes = random_node_scheme(delta, plane, opt.max_orbit_degree, rng, mult > 0, d, mult);
      const Polynomial f = random_nodal_curve(d, nodes, rng, mult);
      const Diagnostics dn = verify_nodal(f, nodes, mult);
      if (!dn.ok()) {
        for (const auto& c : dn.failures) ++failures["nodal:" + c];
        continue;
      }
      Ideal I = canonical_ideal(f, nodes, g, mult);
      const Diagnostics dc = verify_canonical(I, g);
      if (!dc.ok()) {
        for (const auto& c : dc.failures) ++failures["canonical:" + c];
        continue;
      }
      CurveRecord rec;
      rec.ideal = std::move(I);
      rec.genus = g;
      rec.characteristic = static_cast<int>(p);
      rec.seed = seed;
      rec.attempts = attempt + 1;
      rec.meta = {{"route", mult > 0 ? "gonal" : "general"},
                  {"d", d},
                  {"delta", delta},
                  {"mult", mult},
                  {"gonality", opt.gonality ? *opt.gonality : 0},
                  {"rational_nodes", nodes.rational_count()},
                  {"orbit_degrees", nodes.orbit_degrees()},
                  {"failures", failures},
                  {"plane_curve", f.to_string()}};
      return rec;
    } catch (const ConstructionFailure& e) {
      ++failures[e.step()];
    }
  }
  std::string why;
  for (const auto& [k, n] : failures) why += (why.empty() ? " (" : ", ") + k + " x" + std::to_string(n);
  throw AttemptsExhausted("no canonical curve of genus " + std::to_string(g) + " over F_" + std::to_string(p) +
                              " after " + std::to_string(cap) + " attempts" + (why.empty() ? "" : why + ")"),
                          cap, failures);
}

// ------------------------------------------------------------- files

void write_curve(std::ostream& os, const CurveRecord& c) {
  const RingPtr& R = c.ideal.ring();
  os << "field " << R->field().characteristic() << "\nring";
  for (const auto& n : R->names()) os << ' ' << n;
  os << "\ngenus " << c.genus << '\n';
  nlohmann::json meta = c.meta;
  meta["seed"] = c.seed;
  meta["attempts"] = c.attempts;
  os << "meta " << meta.dump() << '\n';
  for (const auto& f : c.ideal.gens()) os << f.to_string() << '\n';
}

CurveRecord read_curve(std::istream& is) {
  std::string line;
  int lineno = 0;
  std::optional<std::uint32_t> p;
  std::vector<std::string> names;
  std::optional<int> genus;
  RingPtr R;
  std::vector<Polynomial> gens;
  CurveRecord rec;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!p) {
      long long v = 0;
      if (key != "field" || !(ls >> v)) throw ParseError("expected `field <p>`", lineno);
      if (v < 2 || v > static_cast<long long>(PrimeField::kMaxCharacteristic) || !is_prime(static_cast<std::uint32_t>(v)))
        throw ParseError("field characteristic must be a prime <= 101", lineno);
      p = static_cast<std::uint32_t>(v);
    } else if (names.empty()) {
      if (key != "ring") throw ParseError("expected `ring <variables>`", lineno);
      std::string n;
      while (ls >> n) names.push_back(n);
      if (names.empty()) throw ParseError("ring needs at least one variable", lineno);
    } else if (!genus) {
      int gv = 0;
      if (key != "genus" || !(ls >> gv)) throw ParseError("expected `genus <g>`", lineno);
      if (gv != static_cast<int>(names.size())) throw ParseError("genus " + std::to_string(gv) + " needs " + std::to_string(gv) + " variables, ring has " +
                             std::to_string(names.size()),
                         lineno);
      genus = gv;
      try {
        R = PolyRing::make(PrimeField(*p), names);
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
      }
    } else if (key == "meta" && gens.empty()) {
      try {
        rec.meta = nlohmann::json::parse(line.substr(line.find("meta") + 4));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad meta json: ") + e.what(), lineno);
      }
    } else {
      Polynomial f = parse_polynomial(R, line, lineno);
      if (!f.is_homogeneous()) throw ParseError("generator is not homogeneous", lineno);
      gens.push_back(std::move(f));
    }
  }
  if (!genus) throw ParseError("incomplete header: need field, ring and genus lines", lineno);
  rec.ideal = Ideal(R, std::move(gens));
  rec.genus = *genus;
  rec.characteristic = static_cast<int>(*p);
  if (rec.meta.contains("seed") && rec.meta["seed"].is_number_unsigned()) rec.seed = rec.meta["seed"].get<std::uint64_t>();
  if (rec.meta.contains("attempts") && rec.meta["attempts"].is_number()) rec.attempts = rec.meta["attempts"].get<int>();
  return rec;
}

CurveRecord read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_curve(in);
}

void write_curve_file(const std::string& path, const CurveRecord& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_curve(out, c);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace cansyz
