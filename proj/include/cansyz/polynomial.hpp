#pragma once

#include <string>
#include <vector>

#include "cansyz/ring.hpp"

namespace cansyz {

/// A coefficient times a monomial, optionally in a free-module component.
struct Term {
  Monomial m;
  Coeff c = 0;
  std::uint32_t comp = 0;
};

/// Sparse polynomial; terms are kept strictly decreasing in the ring order
/// and carry no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicates, and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Trusts that `terms` are already sorted and nonzero.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  Coeff lead_coeff() const { return terms_.front().c; }
  /// Degree of the leading term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  Polynomial monic() const;
  /// Homogeneous component of a given degree.
  Polynomial part(int d) const;

  /// Same terms re-sorted under another ring with identical variables.
  Polynomial in_ring(RingPtr other) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the text grammar: terms joined by + or -, optional integer
/// coefficient, variables from the ring, ^ for powers, * optional.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, int line = 0);

/// Uniform random form of degree d.
Polynomial random_form(int d, const RingPtr& ring, Rng& rng);

Polynomial derivative(const Polynomial& f, int var);
std::vector<Polynomial> jacobian(const Polynomial& f);

/// Substitutes images[i] for variable i; images live in `target`.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target);

/// Full reduction by leading terms of G (G elements nonzero).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
/// As normal_form, also returning quotients q with f = sum q_i G_i + r.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, std::vector<Polynomial>& quotients);

}  // namespace cansyz
