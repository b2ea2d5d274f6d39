#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cansyz/field.hpp"
#include "cansyz/monomial.hpp"

namespace cansyz {

enum class OrderKind { Grevlex, Block };

/// Grevlex, or a block order eliminating the first `block` variables:
/// block degree (unweighted) first, then grevlex inside each block.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder eliminate(int k) { return {OrderKind::Block, k}; }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  /// Weights default to 1. A weight of 0 is allowed only inside the
  /// eliminated block.
  PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order = {},
           std::vector<int> weights = {});

  static RingPtr make(PrimeField field, std::vector<std::string> names, MonomialOrder order = {},
                      std::vector<int> weights = {}) {
    return std::make_shared<const PolyRing>(std::move(field), std::move(names), order, std::move(weights));
  }
  /// Variables named prefix0 .. prefix{n-1}.
  static RingPtr indexed(const PrimeField& field, const std::string& prefix, int n,
                         MonomialOrder order = {});

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // -1 when absent
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  bool standard_grading() const noexcept { return standard_; }

  int degree(const Monomial& m) const noexcept {
    if (standard_) return static_cast<int>(m.tdeg);
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.e[i];
    return d;
  }

  /// Negative, zero, or positive as a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const noexcept;

  /// All monomials of (weighted) degree d, in decreasing order.
  std::vector<Monomial> monomials_of_degree(int d) const;

  /// Same variables and weights under another order.
  RingPtr with_order(MonomialOrder order) const;

 private:
  int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const noexcept;

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> weights_;
  bool standard_ = true;
};

/// Ranks degree-k monomials in n variables by reverse position in lex
/// enumeration; a bijection onto [0, C(n+k-1, k)).
class MonomialIndexer {
 public:
  explicit MonomialIndexer(int nvars, int max_degree = 32);
  int nvars() const noexcept { return n_; }
  std::size_t count(int degree) const;  // number of monomials of that degree
  std::size_t rank(const Monomial& m) const;
  /// All degree-k monomials, listed so that list[rank(m)] == m.
  std::vector<Monomial> enumerate(int degree) const;

 private:
  std::size_t binom(int a, int b) const;
  int n_;
  int max_;
  std::vector<std::vector<std::size_t>> table_;
};

}  // namespace cansyz
