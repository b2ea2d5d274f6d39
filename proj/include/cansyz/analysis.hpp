#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cansyz/resolution.hpp"
#include "json.hpp"

namespace cansyz {

/// m = ceil((g-2)/2); the critical Betti number is beta_{m-1,m+1}.
int critical_index(int g);

/// Largest p >= 0 with beta_{i,i+2} = 0 for every 1 <= i <= p. A table with
/// beta_{1,3} != 0 gives 0.
int green_profile(const BettiTable& b);

struct StrandMap {
  /// phi_n : strand position n -> position n-1, beta_{n-1,n+1} != 0.
  int n = 0;
  GradedMap phi;
  int position() const noexcept { return n - 1; }
};

/// First nonzero position of the second linear strand together with the map
/// into it; nullopt when the strand is zero (Green vanishing maximal).
std::optional<StrandMap> first_nonzero_strand_map(const FreeResolution& res);

/// Resolution used for canonical ideals: linear route, regularity 3,
/// Gorenstein shape.
FreeResolution canonical_resolution(const Ideal& I);

struct ScrollVerdict {
  int dim = -1;
  long long deg = 0;
  bool minimal_degree = false;
  bool nondegenerate = false;
  bool acm = false;
  bool contained = false;
  bool is_scroll = false;
  /// g = 6: a plane quintic passes the same tests.
  bool plane_quintic_caveat = false;

  nlohmann::json to_json() const;
  static ScrollVerdict from_json(const nlohmann::json& j);
  friend bool operator==(const ScrollVerdict&, const ScrollVerdict&) = default;
};

/// Minimal degree (deg = codim + 1), no linear forms, ACM (projective
/// dimension of S/ann equals its codimension) and ann contained in I_C.
ScrollVerdict scroll_check(const Ideal& ann, const Ideal& curve);

struct OrderIdealCheck {
  int bound = 0;
  /// Rank of the span of the linear entries in each basis row of phi_n.
  std::vector<int> ranks;
  /// Smallest such rank over the rows searched.
  int min_rank = -1;
  /// True when every row combination up to scaling was searched.
  bool exhaustive = false;
  bool ok = false;
};

/// Some row of the first nonzero strand map (a combination of the basis rows)
/// involves at most g-1-Cliff independent linear forms, Cliff = k-2 for a
/// k-gonal curve. Combinations are enumerated while p^rows <= `search_cap`,
/// otherwise only the basis rows are tried.
OrderIdealCheck order_ideal_bound_check(const FreeResolution& res, int k, std::size_t search_cap = 1u << 16);

struct RGCReport {
  int genus = 0;
  int characteristic = 0;
  BettiTable betti;
  int m = 0;
  long long critical_betti = 0;
  int green_profile = 0;
  /// Zero when the strand vanishes.
  int phi_n = 0;
  int phi_rows = 0;
  int phi_cols = 0;

  bool finite_length = false;
  /// Hilbert function of M = coker(phi_n) from degree hilbert_start on.
  int hilbert_start = 0;
  std::vector<long long> hilbert;
  int m_dim = -1;
  long long m_deg = 0;

  /// (dim, deg) of V(Ann(M)); dim -1 and deg = length of S/Ann(M) when M has
  /// finite length.
  std::optional<int> ann_dim;
  std::optional<long long> ann_deg;
  std::optional<ScrollVerdict> scroll;
  /// deg / (codim + 1) when that is an integer >= 2.
  int multiplicity_note = 0;

  bool complete = true;
  std::string note;

  /// RGC pair (deg, dim); finite length is shown with dim 0.
  std::optional<std::pair<long long, int>> rgc_pair() const;

  nlohmann::json to_json() const;
  static RGCReport from_json(const nlohmann::json& j);
};

/// Full battery on a minimal resolution of I_C. Budget exhaustion inside the
/// annihilator or scroll steps yields complete = false with the data so far.
RGCReport analyze(const FreeResolution& res, const Ideal& curve);

}  // namespace cansyz
