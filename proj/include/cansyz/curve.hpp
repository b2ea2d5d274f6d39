#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cansyz/groebner.hpp"
#include "json.hpp"

namespace cansyz {

/// Plane model degree and node count for the general construction,
/// d = ceil((2g+6)/3). Throws Unsupported outside 4 <= g <= 10.
std::pair<int, int> plane_model_params(int g);

struct GonalParams {
  int d = 0;
  int mult = 0;
  int delta = 0;
  friend bool operator==(const GonalParams&, const GonalParams&) = default;
};

/// Smallest d >= k + 2 whose model with a (d-k)-fold point at (0:0:1) and
/// delta nodes has genus g and a nonempty linear system.
GonalParams gonal_model_params(int g, int k);

/// Closed point of P^2 over F_p of degree e = deg(modulus). Coordinates are
/// residues mod the modulus; the chart coordinate equals 1. Rational points
/// use the modulus t.
struct ClosedPoint {
  UniPoly modulus;
  std::array<UniPoly, 3> coords;
  int chart = 2;

  int degree() const noexcept { return modulus.degree(); }
  static ClosedPoint rational(const PrimeField& F, std::array<Coeff, 3> xyz);
};

struct NodeScheme {
  RingPtr ring;  // F_p[x, y, z]
  std::vector<ClosedPoint> points;
  Ideal ideal;

  int degree() const;
  int rational_count() const;
  std::vector<int> orbit_degrees() const;
};

/// Radical ideal of the given distinct points; throws ConstructionFailure
/// when two of them coincide.
NodeScheme make_node_scheme(const RingPtr& plane, std::vector<ClosedPoint> points);

/// True when some F_p-rational line L has 2 * #(nodes on L), plus `mult` if L
/// passes through (0:0:1), above d. By Bezout every degree-d curve singular
/// there then contains L.
bool line_overloaded(const std::vector<ClosedPoint>& points, const PrimeField& F, int d, int mult = 0);

/// Same for conics: some union of the closed points (all unions up to 12
/// points, the whole set beyond) lies on a conic Q with Q.C forcing Q into
/// the curve, 2 * #nodes (+ mult when Q passes through (0:0:1)) > 2d.
bool conic_overloaded(const std::vector<ClosedPoint>& points, const PrimeField& F, int d, int mult = 0);

/// delta reduced points: distinct uniform rational points when P^2(F_p) has
/// at least max(delta^2, delta + 3) of them, otherwise uniform closed points
/// of degree 2..max_orbit_deg (a rational point fills a remainder of 1).
/// `avoid_origin` keeps (0:0:1) free for a multiple point. With
/// curve_degree > 0, node sets that overload a line or a conic are redrawn.
NodeScheme random_node_scheme(int delta, const RingPtr& plane, int max_orbit_deg, Rng& rng, bool avoid_origin = false,
                              int curve_degree = 0, int mult = 0);

/// Basis of degree-d forms singular at every node and, when mult > 0, of
/// multiplicity >= mult at (0:0:1).
std::vector<Polynomial> nodal_system(int d, const NodeScheme& nodes, int mult = 0);
/// Uniform random nonzero element of nodal_system.
Polynomial random_nodal_curve(int d, const NodeScheme& nodes, Rng& rng, int mult = 0);

/// Named failed clauses; empty when everything passed.
struct Diagnostics {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
  bool failed(const std::string& clause) const;
};

/// Singular scheme equals the node scheme (away from (0:0:1) for gonal
/// models), every node is an ordinary double point, and the multiple point
/// is ordinary of multiplicity `mult`.
Diagnostics verify_nodal(const Polynomial& f, const NodeScheme& nodes, int mult = 0);

/// Adjoint forms of degree d-3 through the nodes (multiplicity >= mult-1 at
/// (0:0:1)); throws ConstructionFailure when there are not exactly g.
std::vector<Polynomial> adjoint_basis(const Polynomial& f, const NodeScheme& nodes, int mult = 0);

/// Ideal of the canonical image in F_p[w0..w{g-1}], generated by the quadrics
/// and cubics vanishing on the curve. The degree-k piece is the kernel of
/// Q -> Q(A_0, ..., A_{g-1}) modulo multiples of f.
Ideal canonical_ideal(const Polynomial& f, const NodeScheme& nodes, int g, int mult = 0);

/// Hilbert polynomial (2g-2)n - g + 1, (dim, deg) = (1, 2g-2),
/// beta_{1,2} = (g-2)(g-3)/2, saturation, nondegeneracy.
Diagnostics verify_canonical(const Ideal& I, int g);

struct CurveRecord {
  Ideal ideal;
  int genus = 0;
  int characteristic = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
  /// Construction route and parameters, node data, failure counts.
  nlohmann::json meta = nlohmann::json::object();
};

/// The attempt cap ran out; carries the per-clause failure counts.
class AttemptsExhausted : public ResourceExhausted {
 public:
  AttemptsExhausted(const std::string& what, int attempts, std::map<std::string, int> failures)
      : ResourceExhausted(what), attempts_(attempts), failures_(std::move(failures)) {}
  int attempts() const noexcept { return attempts_; }
  const std::map<std::string, int>& failures() const noexcept { return failures_; }

 private:
  int attempts_;
  std::map<std::string, int> failures_;
};

struct CurveOptions {
  std::optional<int> gonality;
  /// 0 means 10 p^2.
  int attempt_cap = 0;
  int max_orbit_degree = 4;
};

/// Retries the construction with attempt seeds derive_seed(seed, i) until
/// every check passes. Throws ResourceExhausted at the attempt cap.
CurveRecord random_canonical_curve(int g, std::uint32_t p, std::uint64_t seed, const CurveOptions& opt = {});

/// Curve file: `field p`, `ring w0 ...`, `genus g`, optional `meta {json}`,
/// then one generator per line.
void write_curve(std::ostream& os, const CurveRecord& c);
CurveRecord read_curve(std::istream& is);
CurveRecord read_curve_file(const std::string& path);
void write_curve_file(const std::string& path, const CurveRecord& c);

}  // namespace cansyz
