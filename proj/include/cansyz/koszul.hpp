#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cansyz/groebner.hpp"
#include "cansyz/linalg.hpp"

namespace cansyz {

/// beta_{i,j}(S/I) as Koszul homology of Lambda^i V (x) (S/I)_{j-i}, using
/// standard monomials of a Groebner basis and exact ranks; no resolution.
class KoszulOracle {
 public:
  /// `cap` bounds the dimension of the middle space of each complex.
  explicit KoszulOracle(const Ideal& I, std::size_t cap = 400000);

  /// Empty when the middle space exceeds the cap ("oracle out of budget").
  std::optional<long long> betti(int i, int j);
  std::size_t cap() const noexcept { return cap_; }

 private:
  struct Piece {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    /// mult[a * n + k]: x_k times basis[a] in the next degree.
    std::vector<SparseVec> mult;
  };
  const Piece& piece(int d);
  std::size_t rank_of_differential(int i, int d);

  GroebnerBasis G_;
  int n_;
  std::size_t cap_;
  std::map<int, Piece> pieces_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

std::optional<long long> koszul_betti(const Ideal& I, int i, int j, std::size_t cap = 400000);

}  // namespace cansyz
