#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cansyz/rng.hpp"

namespace cansyz {

using Coeff = std::uint32_t;

/// The prime field F_p for 2 <= p <= 101. Elements are reduced residues.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 101;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept { return (a * b) % p_; }
  /// Throws DomainError on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  Coeff random(Rng& rng) const { return static_cast<Coeff>(rng.uniform(p_)); }
  Coeff random_nonzero(Rng& rng) const { return static_cast<Coeff>(1 + rng.uniform(p_ - 1)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::vector<Coeff> inverse_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Dense univariate polynomial over F_p; coeffs[i] is the coefficient of t^i.
/// Canonical form has no trailing zeros (the zero polynomial is empty).
struct UniPoly {
  std::vector<Coeff> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Coeff> c) : coeffs(std::move(c)) { trim(); }
  static UniPoly constant(Coeff c) { return UniPoly(std::vector<Coeff>{c}); }
  static UniPoly monomial(std::size_t degree, Coeff c = 1);

  bool is_zero() const noexcept { return coeffs.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Coeff leading() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }
  Coeff operator[](std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

namespace uni {

UniPoly add(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly sub(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly mul(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly scale(const PrimeField& F, const UniPoly& a, Coeff c);
/// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<UniPoly, UniPoly> divmod(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly rem(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly monic(const PrimeField& F, const UniPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const PrimeField& F, UniPoly a, UniPoly b);
UniPoly derivative(const PrimeField& F, const UniPoly& a);
Coeff evaluate(const PrimeField& F, const UniPoly& a, Coeff x);
/// base^e mod modulus.
UniPoly powmod(const PrimeField& F, UniPoly base, std::uint64_t e, const UniPoly& modulus);
UniPoly mulmod(const PrimeField& F, const UniPoly& a, const UniPoly& b, const UniPoly& modulus);

/// Ben-Or test: gcd(f, t^{p^i} - t mod f) = 1 for 1 <= i <= deg f / 2.
bool is_irreducible(const PrimeField& F, const UniPoly& f);
/// A squarefree polynomial has no repeated factor over the algebraic closure.
bool is_squarefree(const PrimeField& F, const UniPoly& f);

/// Draws monic degree-e polynomials until one is irreducible.
UniPoly random_irreducible(int e, const PrimeField& F, Rng& rng);

std::string to_string(const UniPoly& f, char var = 't');

}  // namespace uni
}  // namespace cansyz
