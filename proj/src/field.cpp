#include "cansyz/field.hpp"

#include <algorithm>

#include "cansyz/error.hpp"

namespace cansyz {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > kMaxCharacteristic)
    throw DomainError("characteristic must be a prime in [2, 101], got " + std::to_string(p));
  inverse_.assign(p, 0);
  for (Coeff a = 1; a < p; ++a)
    for (Coeff b = 1; b < p; ++b)
      if (a * b % p == 1) {
        inverse_[a] = b;
        break;
      }
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  return inverse_[a % p_];
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff r = 1 % p_;
  Coeff b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::monomial(std::size_t degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return UniPoly(std::move(v));
}

namespace uni {

UniPoly add(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  std::vector<Coeff> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a[i], b[i]);
  return UniPoly(std::move(c));
}

UniPoly sub(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  std::vector<Coeff> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a[i], b[i]);
  return UniPoly(std::move(c));
}

UniPoly mul(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  }
  return UniPoly(std::move(c));
}

UniPoly scale(const PrimeField& F, const UniPoly& a, Coeff s) {
  std::vector<Coeff> c(a.coeffs);
  for (auto& x : c) x = F.mul(x, s);
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Coeff> r = a.coeffs;
  std::vector<Coeff> q(a.coeffs.size() - b.coeffs.size() + 1, 0);
  const Coeff lead_inv = F.inv(b.leading());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Coeff c = F.mul(r[i], lead_inv);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs[j]));
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const PrimeField& F, const UniPoly& a, const UniPoly& b) { return divmod(F, a, b).second; }

UniPoly monic(const PrimeField& F, const UniPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading()));
}

UniPoly gcd(const PrimeField& F, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UniPoly derivative(const PrimeField& F, const UniPoly& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<Coeff> c(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) c[i - 1] = F.mul(F.reduce(static_cast<std::int64_t>(i)), a.coeffs[i]);
  return UniPoly(std::move(c));
}

Coeff evaluate(const PrimeField& F, const UniPoly& a, Coeff x) {
  Coeff r = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) r = F.add(F.mul(r, x), a.coeffs[i]);
  return r;
}

UniPoly mulmod(const PrimeField& F, const UniPoly& a, const UniPoly& b, const UniPoly& modulus) {
  return rem(F, mul(F, a, b), modulus);
}

UniPoly powmod(const PrimeField& F, UniPoly base, std::uint64_t e, const UniPoly& modulus) {
  UniPoly result = rem(F, UniPoly::constant(1), modulus);
  base = rem(F, base, modulus);
  while (e) {
    if (e & 1) result = mulmod(F, result, base, modulus);
    base = mulmod(F, base, base, modulus);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const PrimeField& F, const UniPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const UniPoly t = UniPoly::monomial(1);
  UniPoly frob = t;  // t^{p^i} mod f
  for (int i = 1; i <= f.degree() / 2; ++i) {
    frob = powmod(F, frob, F.characteristic(), f);
    if (gcd(F, f, sub(F, frob, t)).degree() != 0) return false;
  }
  return true;
}

bool is_squarefree(const PrimeField& F, const UniPoly& f) {
  if (f.degree() < 1) return true;
  UniPoly d = derivative(F, f);
  // f' = 0 means f is a p-th power
  if (d.is_zero()) return false;
  return gcd(F, f, d).degree() == 0;
}

UniPoly random_irreducible(int e, const PrimeField& F, Rng& rng) {
  if (e < 1) throw DomainError("irreducible polynomial degree must be >= 1");
  for (;;) {
    std::vector<Coeff> c(e + 1);
    for (int i = 0; i < e; ++i) c[i] = F.random(rng);
    c[e] = 1;
    UniPoly f(std::move(c));
    if (is_irreducible(F, f)) return f;
  }
}

std::string to_string(const UniPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    Coeff c = f.coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c != 1) s += std::to_string(c);
    if (i > 0) {
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace uni
}  // namespace cansyz
