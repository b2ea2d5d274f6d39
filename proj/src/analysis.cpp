#include "cansyz/analysis.hpp"

#include <algorithm>

#include "cansyz/budget.hpp"
#include "cansyz/linalg.hpp"
#include "cansyz/rng.hpp"

namespace cansyz {

int critical_index(int g) {
  if (g < 4) throw DomainError("critical index needs g >= 4");
  return (g - 2 + 1) / 2;
}

int green_profile(const BettiTable& b) {
  const int top = std::max(b.length(), 1);
  for (int i = 1; i <= top; ++i)
    if (b.at(i, i + 2) != 0) return i - 1;
  return top;
}

std::optional<StrandMap> first_nonzero_strand_map(const FreeResolution& res) {
  const ChainComplex cx = strand(res, 2);
  for (std::size_t i = 0; i < cx.size(); ++i) {
    if (cx.modules[i].rank() == 0) continue;
    StrandMap s;
    s.n = static_cast<int>(i) + 1;
    if (i + 1 < cx.size()) s.phi = cx.maps[i + 1];
    else s.phi = GradedMap(FreeModule{res.ring, {}}, cx.modules[i]);
    return s;
  }
  return std::nullopt;
}

FreeResolution canonical_resolution(const Ideal& I) {
  ResolutionOptions o;
  o.method = ResolutionOptions::Method::Linear;
  o.regularity = 3;
  o.gorenstein = true;
  return free_resolution(I, I.ring()->nvars(), o);
}

// ---------------------------------------------------------------- scroll

nlohmann::json ScrollVerdict::to_json() const {
  return {{"dim", dim},
          {"deg", deg},
          {"minimal_degree", minimal_degree},
          {"nondegenerate", nondegenerate},
          {"acm", acm},
          {"contained", contained},
          {"is_scroll", is_scroll},
          {"plane_quintic_caveat", plane_quintic_caveat}};
}

ScrollVerdict ScrollVerdict::from_json(const nlohmann::json& j) {
  ScrollVerdict v;
  v.dim = j.at("dim");
  v.deg = j.at("deg");
  v.minimal_degree = j.at("minimal_degree");
  v.nondegenerate = j.at("nondegenerate");
  v.acm = j.at("acm");
  v.contained = j.at("contained");
  v.is_scroll = j.at("is_scroll");
  v.plane_quintic_caveat = j.value("plane_quintic_caveat", false);
  return v;
}

ScrollVerdict scroll_check(const Ideal& ann, const Ideal& curve) {
  const int n = ann.ring()->nvars();
  ScrollVerdict v;
  const GroebnerBasis G(ann);
  if (G.is_unit()) return v;
  const DimDeg dd = dim_deg(G);
  v.dim = dd.dim;
  v.deg = dd.deg;
  const int codim = (n - 1) - dd.dim;
  v.minimal_degree = dd.dim >= 0 && dd.deg == codim + 1;
  v.nondegenerate = hilbert_fn(ann, 1) == n;
  if (dd.dim >= 0) {
    // K linear forms cutting S/ann to finite length: the length is >= deg,
    // with equality exactly when S/ann is Cohen-Macaulay
    const int K = dd.dim + 1;
    Rng rng(derive_seed(0x5c7011, static_cast<std::uint64_t>(n)));
    bool decided = false;
    for (int attempt = 0; attempt < 32 && !decided; ++attempt) {
      std::vector<Polynomial> gens = ann.gens();
      for (int k = 0; k < K; ++k) {
        Polynomial l(ann.ring());
        for (int x = 0; x < n; ++x)
          l += Polynomial::variable(ann.ring(), x).scaled(static_cast<Coeff>(rng.uniform(ann.ring()->field().characteristic())));
        gens.push_back(std::move(l));
      }
      const DimDeg cut = dim_deg(Ideal(ann.ring(), std::move(gens)));
      if (cut.dim < 0) {
        v.acm = cut.deg == dd.deg;
        decided = true;
      }
    }
    if (!decided) {
      const FreeResolution r = free_resolution(ann, n + 1);
      v.acm = r.complete && static_cast<int>(r.length()) == codim;
    }
  }
  const GroebnerBasis C(curve);
  v.contained = std::all_of(ann.gens().begin(), ann.gens().end(), [&](const Polynomial& f) { return C.contains(f); });
  v.is_scroll = v.minimal_degree && v.nondegenerate && v.acm && v.contained;
  v.plane_quintic_caveat = v.is_scroll && n == 6;
  return v;
}

OrderIdealCheck order_ideal_bound_check(const FreeResolution& res, int k, std::size_t search_cap) {
  const int g = res.ring->nvars();
  OrderIdealCheck c;
  c.bound = g - 1 - (k - 2);
  const auto s = first_nonzero_strand_map(res);
  if (!s || s->phi.cols() == 0) return c;
  const PrimeField& F = res.ring->field();
  const std::size_t nr = s->phi.rows(), nc = s->phi.cols();
  // lin[r][c][x]: coefficient of variable x in entry (r, c)
  std::vector<std::vector<std::vector<Coeff>>> lin(nr, std::vector<std::vector<Coeff>>(nc, std::vector<Coeff>(g, 0)));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t col = 0; col < nc; ++col)
      for (const auto& t : s->phi.at(r, col).terms()) {
        if (t.m.tdeg != 1) throw DomainError("order ideal check: strand entry is not linear");
        for (int x = 0; x < g; ++x)
          if (t.m.e[x]) lin[r][col][x] = t.c;
      }
  auto rank_of_combination = [&](const std::vector<Coeff>& lambda) {
    std::vector<SparseVec> rows;
    for (std::size_t col = 0; col < nc; ++col) {
      SparseVec v;
      for (int x = 0; x < g; ++x) {
        Coeff a = 0;
        for (std::size_t r = 0; r < nr; ++r)
          if (lambda[r]) a = F.add(a, F.mul(lambda[r], lin[r][col][x]));
        if (a) v.push_back({static_cast<std::uint32_t>(x), a});
      }
      if (!v.empty()) rows.push_back(std::move(v));
    }
    return static_cast<int>(rank_of(F, g, rows));
  };
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<Coeff> e(nr, 0);
    e[r] = 1;
    c.ranks.push_back(rank_of_combination(e));
  }
  c.min_rank = *std::min_element(c.ranks.begin(), c.ranks.end());
  const std::uint64_t p = F.characteristic();
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < nr && total <= search_cap; ++r) total *= p;
  if (total <= search_cap) {
    c.exhaustive = true;
    // projective representatives: last nonzero coordinate equal to 1
    std::vector<Coeff> lambda(nr, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
      budget::check();
      std::uint64_t v = code;
      int last = -1;
      for (std::size_t r = 0; r < nr; ++r) {
        lambda[r] = static_cast<Coeff>(v % p);
        v /= p;
        if (lambda[r]) last = static_cast<int>(r);
      }
      if (lambda[last] != 1) continue;
      c.min_rank = std::min(c.min_rank, rank_of_combination(lambda));
      if (c.min_rank <= c.bound) break;
    }
  }
  c.ok = c.min_rank >= 0 && c.min_rank <= c.bound;
  return c;
}

// ---------------------------------------------------------------- report

std::optional<std::pair<long long, int>> RGCReport::rgc_pair() const {
  if (!ann_dim || !ann_deg) return std::nullopt;
  return std::make_pair(*ann_deg, std::max(*ann_dim, 0));
}

nlohmann::json RGCReport::to_json() const {
  nlohmann::json j = betti.to_json(genus, characteristic);
  j["m"] = m;
  j["critical_betti"] = critical_betti;
  j["green_profile"] = green_profile;
  j["phi_n"] = phi_n ? nlohmann::json{{"n", phi_n}, {"rows", phi_rows}, {"cols", phi_cols}} : nlohmann::json();
  j["M"] = {{"finite_length", finite_length},
            {"hilbert_start", hilbert_start},
            {"hilbert", hilbert},
            {"dim", m_dim},
            {"deg", m_deg}};
  j["ann"] = ann_dim ? nlohmann::json{{"dim", *ann_dim}, {"deg", *ann_deg}} : nlohmann::json();
  j["scroll"] = scroll ? scroll->to_json() : nlohmann::json();
  j["multiplicity_note"] = multiplicity_note;
  j["complete"] = complete;
  if (!note.empty()) j["note"] = note;
  return j;
}

RGCReport RGCReport::from_json(const nlohmann::json& j) {
  RGCReport r;
  r.genus = j.at("genus");
  r.characteristic = j.at("char");
  r.betti = BettiTable::from_json(j);
  r.m = j.at("m");
  r.critical_betti = j.at("critical_betti");
  r.green_profile = j.at("green_profile");
  if (const auto& p = j.at("phi_n"); !p.is_null()) {
    r.phi_n = p.at("n");
    r.phi_rows = p.at("rows");
    r.phi_cols = p.at("cols");
  }
  const auto& M = j.at("M");
  r.finite_length = M.at("finite_length");
  r.hilbert_start = M.at("hilbert_start");
  r.hilbert = M.at("hilbert").get<std::vector<long long>>();
  r.m_dim = M.at("dim");
  r.m_deg = M.at("deg");
  if (const auto& a = j.at("ann"); !a.is_null()) {
    r.ann_dim = a.at("dim").get<int>();
    r.ann_deg = a.at("deg").get<long long>();
  }
  if (const auto& s = j.at("scroll"); !s.is_null()) r.scroll = ScrollVerdict::from_json(s);
  r.multiplicity_note = j.value("multiplicity_note", 0);
  r.complete = j.value("complete", true);
  r.note = j.value("note", "");
  return r;
}

RGCReport analyze(const FreeResolution& res, const Ideal& curve) {
  RGCReport r;
  const int g = res.ring->nvars();
  r.genus = g;
  r.characteristic = static_cast<int>(res.ring->field().characteristic());
  r.betti = betti_table(res);
  r.m = critical_index(g);
  r.critical_betti = r.betti.at(r.m - 1, r.m + 1);
  r.green_profile = green_profile(r.betti);

  const auto s = first_nonzero_strand_map(res);
  if (!s) {
    r.note = "second linear strand vanishes";
    return r;
  }
  r.phi_n = s->n;
  r.phi_rows = static_cast<int>(s->phi.rows());
  r.phi_cols = static_cast<int>(s->phi.cols());

  const ModulePresentation M = cokernel(s->phi);
  const HilbertSeries hs = module_hilbert_series(M);
  const auto& tw = M.ambient.twists;
  r.hilbert_start = *std::min_element(tw.begin(), tw.end());
  const int stop = *std::max_element(tw.begin(), tw.end()) + g;
  for (int d = r.hilbert_start; d <= stop; ++d) r.hilbert.push_back(hs.value(d));
  const auto [mdim, mdeg] = hs.dim_deg();
  r.m_dim = mdim;
  r.m_deg = mdeg;
  const std::size_t n = r.hilbert.size();
  const bool window_zero = n >= 3 && r.hilbert[n - 1] == 0 && r.hilbert[n - 2] == 0 && r.hilbert[n - 3] == 0;
  r.finite_length = mdim < 0 && window_zero;
  if ((mdim < 0) != window_zero) r.note = "Hilbert window and series disagree";

  try {
    const Ideal ann = annihilator(M);
    const DimDeg dd = dim_deg(ann);
    r.ann_dim = dd.dim;
    r.ann_deg = dd.deg;
    if (dd.dim >= 0) {
      const int codim = (g - 1) - dd.dim;
      if (dd.deg == codim + 1) r.scroll = scroll_check(ann, curve);
      else if (dd.deg % (codim + 1) == 0) r.multiplicity_note = static_cast<int>(dd.deg / (codim + 1));
    }
  } catch (const ResourceExhausted& e) {
    r.complete = false;
    r.note = std::string("analysis incomplete: ") + e.what();
  }
  return r;
}

}  // namespace cansyz
