#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "cansyz/module.hpp"

namespace cansyz {

struct GBOptions {
  /// Pairs and inputs above this degree are left unprocessed.
  int degree_limit = INT_MAX;
  /// Produce the reduced basis (minimal leads, reduced tails, monic).
  bool interreduce = true;
};

struct GBResult {
  /// Sorted by increasing leading term.
  std::vector<Vec> basis;
  /// minimal_input[i]: input i was not in the span of everything of lower
  /// degree and of earlier inputs of its degree.
  std::vector<char> minimal_input;
  /// False when degree_limit cut the computation short.
  bool complete = true;
};

/// Homogeneous Buchberger algorithm on a submodule of a free module,
/// processed degree by degree with the Gebauer-Moeller criteria. The
/// coprime-lead criterion is applied for rank-one modules only.
GBResult buchberger(const ModuleOrder& ord, const std::vector<Vec>& inputs, const GBOptions& opt = {});

/// Division by the leading terms of a fixed list of monic vectors.
class Reducer {
 public:
  Reducer(const ModuleOrder& ord, std::vector<Vec> basis);
  const ModuleOrder& order() const noexcept { return ord_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  /// Index of a basis element whose lead divides t, or -1.
  int find(const Term& t) const;
  Vec reduce(Vec h) const;
  /// Remainder plus quotient coefficients: h = sum q[i] * basis[i] + r, with
  /// q[i] stored as component-0 vectors.
  Vec reduce(Vec h, std::vector<Vec>& quotients) const;

 private:
  ModuleOrder ord_;
  std::vector<Vec> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// A finite list of homogeneous generators of an ideal.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(RingPtr ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  /// The ideal generated by all variables.
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis with respect to the ring's order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  explicit GroebnerBasis(const Ideal& I);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::vector<Monomial> leads() const;
  bool is_unit() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& J) const;
  Ideal ideal() const { return Ideal(ring_, basis_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::optional<Reducer> reducer_;
};

inline GroebnerBasis groebner_basis(const Ideal& I) { return GroebnerBasis(I); }

/// Minimal homogeneous generators.
Ideal mingens(const Ideal& I);
bool same_ideal(const Ideal& I, const Ideal& J);

/// I intersected with the subring of the last n-k variables, returned in a
/// ring on those variables (k = 0 returns the Groebner basis of I).
Ideal eliminate(const Ideal& I, int k);

/// (I : J). A zero J yields the unit ideal and sets *zero_divisor.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, bool* zero_divisor = nullptr);
/// (I : J^infinity), iterated until the reduced bases agree.
Ideal saturate(const Ideal& I, const Ideal& J);
/// (I : x_v) and (I : x_v^infinity) through a grevlex basis with x_v last.
Ideal quotient_by_variable(const Ideal& I, int v);
Ideal saturate_by_variable(const Ideal& I, int v);

/// I intersected with J through an auxiliary weight-0 variable t eliminated
/// from <t I, (1-t) J>.
Ideal intersect(const Ideal& I, const Ideal& J);
/// Same intersection through the submodule <(1,1,1), I e1, J e2> of S^3.
Ideal intersect_via_module(const Ideal& I, const Ideal& J);

/// Hilbert series N(t) / prod(1 - t^{w_i}) with N a Laurent polynomial.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::vector<int> weights, int low, std::vector<long long> numerator);

  int low() const noexcept { return low_; }
  const std::vector<long long>& numerator() const noexcept { return num_; }
  bool is_zero() const noexcept { return num_.empty(); }
  /// Hilbert function at degree d.
  long long value(int d) const;
  /// Projective dimension of the support (-1 if empty) and degree (the
  /// length when the support is empty). Standard grading only.
  std::pair<int, long long> dim_deg() const;
  /// Hilbert polynomial at d. Standard grading only.
  long long polynomial(long long d) const;
  /// Sum of two series over the same ring.
  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries shifted(int s) const;

 private:
  std::vector<int> weights_;
  int low_ = 0;
  std::vector<long long> num_;
};

struct DimDeg {
  int dim = -1;
  long long deg = 0;
  friend bool operator==(const DimDeg&, const DimDeg&) = default;
};

/// Numerator of the Hilbert series of S/M for a monomial ideal M.
std::vector<long long> monomial_numerator(std::vector<Monomial> gens, const std::vector<int>& weights);

HilbertSeries hilbert_series(const GroebnerBasis& G);
inline HilbertSeries hilbert_series(const Ideal& I) { return hilbert_series(GroebnerBasis(I)); }
/// dim (S/I)_d.
long long hilbert_fn(const Ideal& I, int d);
/// Unit ideal gives (-1, 0).
DimDeg dim_deg(const Ideal& I);
DimDeg dim_deg(const GroebnerBasis& G);

/// Standard monomials of degree d.
std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int d);

}  // namespace cansyz
