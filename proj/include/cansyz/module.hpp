#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cansyz/polynomial.hpp"

namespace cansyz {

/// Graded free module S(-t_0) + ... + S(-t_{r-1}); twists[j] is the degree
/// of the j-th basis element.
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  std::size_t rank() const noexcept { return twists.size(); }
  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.ring == b.ring && a.twists == b.twists;
  }
};

/// Element of a free module: terms with components, strictly decreasing in
/// a ModuleOrder.
using Vec = std::vector<Term>;

struct SchreyerFrame;

/// Term order on a free module. TOP compares degree, then monomial, then
/// component priority; POT compares priority first. Larger priority means
/// larger position. A Schreyer order compares m*e_i with n*e_j through the
/// leading terms m*lt(g_i), n*lt(g_j) in the order of the previous module,
/// ties going to the smaller index.
struct ModuleOrder {
  RingPtr ring;
  std::vector<int> twists;
  bool pot = false;
  std::vector<int> priority;
  std::shared_ptr<const SchreyerFrame> frame;
  /// If set, this component sits below all others whatever the degree
  /// (one-component elimination block).
  int bottom = -1;

  ModuleOrder() = default;
  /// Default priorities make e_0 the largest position.
  ModuleOrder(RingPtr r, std::vector<int> tw, bool position_over_term = false, std::vector<int> prio = {});
  /// Schreyer order induced by monic generators `gens` (leading term first
  /// under `base`); twists are the generator degrees.
  static ModuleOrder schreyer(const ModuleOrder& base, const std::vector<std::vector<Term>>& gens);

  std::size_t rank() const noexcept { return twists.size(); }
  int degree(const Term& t) const { return ring->degree(t.m) + twists[t.comp]; }
  int cmp(const Term& a, const Term& b) const {
    if (frame) return schreyer_cmp(a, b);
    if (bottom >= 0 && a.comp != b.comp && (static_cast<int>(a.comp) == bottom || static_cast<int>(b.comp) == bottom))
      return static_cast<int>(a.comp) == bottom ? -1 : 1;
    if (pot && a.comp != b.comp) return priority[a.comp] < priority[b.comp] ? -1 : 1;
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (int c = ring->cmp(a.m, b.m)) return c;
    if (a.comp != b.comp) return priority[a.comp] < priority[b.comp] ? -1 : 1;
    return 0;
  }
  int schreyer_cmp(const Term& a, const Term& b) const;
};

struct SchreyerFrame {
  ModuleOrder base;
  std::vector<Term> leads;
};

namespace vec {

/// Sorts, merges and drops zero terms.
Vec normalize(const ModuleOrder& ord, Vec v);
/// a + s * b.
Vec axpy(const ModuleOrder& ord, const Vec& a, Coeff s, const Vec& b);
Vec times(const ModuleOrder& ord, const Vec& a, const Monomial& m, Coeff c);
Vec scale(const ModuleOrder& ord, const Vec& a, Coeff c);
Vec monic(const ModuleOrder& ord, const Vec& a);
bool is_homogeneous(const ModuleOrder& ord, const Vec& v);
/// Degree of the leading term; throws on zero.
int degree(const ModuleOrder& ord, const Vec& v);
/// Re-sorts terms under another order (e.g. changing POT/TOP).
Vec reorder(const ModuleOrder& ord, Vec v);

Vec from_polynomial(const Polynomial& f, std::uint32_t comp = 0);
/// Component `comp` of v as a polynomial.
Polynomial component(const RingPtr& ring, const Vec& v, std::uint32_t comp);
/// Entries of v, one polynomial per component.
std::vector<Polynomial> components(const RingPtr& ring, const Vec& v, std::size_t rank);
Vec from_components(const ModuleOrder& ord, const std::vector<Polynomial>& entries, std::uint32_t offset = 0);
std::string to_string(const RingPtr& ring, const Vec& v);

}  // namespace vec

/// Homogeneous map of graded free modules, entries[r][c] from source basis
/// element c to target basis element r.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(FreeModule source, FreeModule target);
  GradedMap(FreeModule source, FreeModule target, std::vector<std::vector<Polynomial>> entries);
  /// Builds a map from target-module columns; source twists are column degrees.
  static GradedMap from_columns(const FreeModule& target, const std::vector<Vec>& columns,
                                std::vector<int> source_twists);

  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  const RingPtr& ring() const noexcept { return target_.ring; }
  std::size_t rows() const noexcept { return target_.rank(); }
  std::size_t cols() const noexcept { return source_.rank(); }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r][c]; }
  const std::vector<std::vector<Polynomial>>& entries() const noexcept { return entries_; }

  /// Column c as a target-module vector sorted by `ord`.
  Vec column(std::size_t c, const ModuleOrder& ord) const;
  std::vector<Vec> columns(const ModuleOrder& ord) const;
  /// Entry degrees match twist differences.
  bool is_homogeneous() const;
  bool is_zero() const;
  /// True if some entry is a nonzero constant.
  bool has_unit_entry() const;
  /// this o other (other: A -> B, this: B -> C).
  GradedMap compose(const GradedMap& other) const;
  GradedMap submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  std::string to_string() const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// Default top-over-position order on a free module.
inline ModuleOrder top_order(const FreeModule& F) { return ModuleOrder(F.ring, F.twists); }

}  // namespace cansyz
