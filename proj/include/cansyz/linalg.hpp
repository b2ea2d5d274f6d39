#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "cansyz/field.hpp"

namespace cansyz {

/// Sparse vector as (column, coefficient) pairs with distinct columns.
using SparseVec = std::vector<std::pair<std::uint32_t, Coeff>>;

/// Incremental row echelon form over F_p. Rows are kept in semi-echelon
/// form (distinct pivot columns, pivot entry 1, zero left of the pivot).
/// F_2 rows are bit-packed, F_3 rows bit-sliced into two planes, other
/// characteristics use byte residues.
class Echelon {
 public:
  Echelon(const PrimeField& field, std::size_t ncols);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  std::size_t ncols() const noexcept;
  std::size_t rank() const noexcept;

  /// Reduces v; stores it if independent. Returns true when the rank grew.
  bool insert(const SparseVec& v);
  /// Remainder of v after reduction (zero iff v lies in the row span).
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Brings the stored rows to reduced row echelon form.
  void back_substitute();
  /// Basis of the right kernel {x : r.x = 0 for every stored row}.
  std::vector<SparseVec> kernel();
  /// Pivot column of each stored row, in insertion order.
  std::vector<std::uint32_t> pivots() const;
  SparseVec row(std::size_t i) const;

  class Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

std::size_t rank_of(const PrimeField& field, std::size_t ncols, const std::vector<SparseVec>& rows);

}  // namespace cansyz
