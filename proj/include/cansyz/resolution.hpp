#pragma once

#include <optional>
#include <vector>

#include "cansyz/betti.hpp"
#include "cansyz/groebner.hpp"

namespace cansyz {

/// Module given as coker(relations: F -> ambient).
struct ModulePresentation {
  FreeModule ambient;
  GradedMap relations;
};

/// Chain complex of free modules; maps[i] : modules[i] -> modules[i-1] for
/// i >= 1 (maps[0] is an empty placeholder).
struct ChainComplex {
  std::vector<FreeModule> modules;
  std::vector<GradedMap> maps;

  std::size_t size() const noexcept { return modules.size(); }
  /// Every composition maps[i-1] o maps[i] vanishes.
  bool is_complex() const;
};

/// F_0 <- F_1 <- ... with maps[k] : F_{k+1} -> F_k.
struct FreeResolution {
  RingPtr ring;
  std::vector<GradedMap> maps;
  /// False when max_len stopped the computation before a zero kernel.
  bool complete = true;

  FreeModule module(std::size_t i) const;
  /// Index of the last nonzero module.
  std::size_t length() const;
  bool is_complex() const;
  /// No nonzero constant entries.
  bool is_minimal() const;
};

/// Reduced Groebner basis of a submodule.
inline GBResult module_gb(const ModuleOrder& ord, const std::vector<Vec>& gens) { return buchberger(ord, gens); }

/// Minimal homogeneous generators of ker(phi), computed from a position-over-term
/// Groebner basis of the graph {(phi(e_j), e_j)}.
GradedMap syzygies(const GradedMap& phi);

/// One Schreyer step: S-pair syzygies of a Groebner basis `gb` (monic, lead
/// first under `ord`). The result is a Groebner basis of the syzygy module
/// with respect to the returned Schreyer order.
std::vector<Vec> schreyer_syzygies(const ModuleOrder& ord, const std::vector<Vec>& gb, ModuleOrder& syz_order);

struct ResolutionOptions {
  enum class Method { Auto, Groebner, Linear };
  Method method = Method::Auto;
  /// Linear method: betti numbers satisfy j - i <= regularity. Auto picks the
  /// linear method when this is set.
  int regularity = -1;
  /// Linear method: the top row j - i = regularity is only searched once the
  /// lower rows are exhausted (Gorenstein shape, e.g. canonical curves).
  bool gorenstein = false;
  /// Groebner method: false keeps the raw Schreyer resolution.
  bool minimal = true;
};

/// Resolution of S/I up to F_{max_len}. For complete linear-method runs the
/// alternating Betti sum is checked against the Hilbert series of S/I.
FreeResolution free_resolution(const Ideal& I, int max_len, const ResolutionOptions& opt = {});

/// Cancels constant entries pairwise until none remain.
FreeResolution minimalize(const FreeResolution& res);

/// Rejects non-minimal input.
BettiTable betti_table(const FreeResolution& res);

/// Positions i hold the degree-(i + which) generators of F_i; maps are the
/// corresponding submatrices of the differentials.
ChainComplex strand(const FreeResolution& res, int which = 2);

inline ModulePresentation cokernel(const GradedMap& phi) { return {phi.target(), phi}; }

/// H_i = ker(maps[i]) / im(maps[i+1]) presented on the kernel generators.
ModulePresentation homology(const ChainComplex& cx, std::size_t i);

HilbertSeries module_hilbert_series(const ModulePresentation& M);
long long module_hilbert(const ModulePresentation& M, int d);
/// Finite length gives dim -1 and deg = length.
DimDeg module_dim_deg(const ModulePresentation& M);

/// Ann(M): intersection over ambient basis elements e_r of (im : e_r),
/// stopping once the partial intersection kills every e_r.
Ideal annihilator(const ModulePresentation& M);

}  // namespace cansyz
