#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "cansyz/error.hpp"

namespace cansyz {

inline constexpr int kMaxVars = 24;
inline constexpr std::uint32_t kMaxExponent = (1u << 15) - 1;

/// Exponent vector with cached total (unweighted) degree and a divisibility
/// mask: bit i means e[i] >= 1, bit 32+i means e[i] >= 2.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t tdeg = 0;
  std::uint64_t mask = 0;

  static Monomial one() { return {}; }
  static Monomial var(int i, std::uint32_t power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  std::uint32_t operator[](int i) const noexcept { return e[i]; }

  void set(int i, std::uint32_t v) {
    if (v > kMaxExponent) throw DomainError("exponent overflow");
    tdeg = tdeg - e[i] + v;
    e[i] = static_cast<std::uint16_t>(v);
    refresh_mask_bit(i);
  }

  bool is_one() const noexcept { return tdeg == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.tdeg == b.tdeg && a.mask == b.mask && a.e == b.e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      std::uint32_t v = std::uint32_t{a.e[i]} + b.e[i];
      if (v > kMaxExponent) throw DomainError("exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(v);
    }
    r.tdeg = a.tdeg + b.tdeg;
    r.rebuild_mask();
    return r;
  }

  /// Requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    r.tdeg = a.tdeg - b.tdeg;
    r.rebuild_mask();
    return r;
  }

  void rebuild_mask() noexcept {
    mask = 0;
    for (int i = 0; i < kMaxVars; ++i) refresh_mask_bit(i);
  }

 private:
  void refresh_mask_bit(int i) noexcept {
    const std::uint64_t b1 = std::uint64_t{1} << i, b2 = std::uint64_t{1} << (32 + i);
    mask = (mask & ~(b1 | b2)) | (e[i] >= 1 ? b1 : 0) | (e[i] >= 2 ? b2 : 0);
  }
};

inline bool divides(const Monomial& a, const Monomial& b) noexcept {
  if ((a.mask & ~b.mask) != 0 || a.tdeg > b.tdeg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t t = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    t += r.e[i];
  }
  r.tdeg = t;
  r.rebuild_mask();
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t t = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    t += r.e[i];
  }
  r.tdeg = t;
  r.rebuild_mask();
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) noexcept {
  return (a.mask & b.mask & 0xffffffffULL) == 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.tdeg;
    for (int i = 0; i < kMaxVars; ++i) h = (h ^ m.e[i]) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace cansyz
