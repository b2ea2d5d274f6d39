#include "cansyz/resolution.hpp"

#include <algorithm>
#include <map>

#include "cansyz/budget.hpp"
#include "cansyz/linalg.hpp"

namespace cansyz {

// ------------------------------------------------------------ complexes

bool ChainComplex::is_complex() const {
  for (std::size_t i = 2; i < maps.size(); ++i) {
    if (maps[i].cols() == 0 || maps[i - 1].cols() == 0 || maps[i - 1].rows() == 0) continue;
    if (!maps[i - 1].compose(maps[i]).is_zero()) return false;
  }
  return true;
}

FreeModule FreeResolution::module(std::size_t i) const {
  if (i == 0) return maps.empty() ? FreeModule{ring, {0}} : maps[0].target();
  if (i <= maps.size()) return maps[i - 1].source();
  return FreeModule{ring, {}};
}

std::size_t FreeResolution::length() const {
  std::size_t n = maps.size();
  while (n > 0 && maps[n - 1].cols() == 0) --n;
  return n;
}

bool FreeResolution::is_complex() const {
  for (std::size_t k = 1; k < maps.size(); ++k) {
    if (maps[k].cols() == 0 || maps[k - 1].rows() == 0) continue;
    if (!maps[k - 1].compose(maps[k]).is_zero()) return false;
  }
  return true;
}

bool FreeResolution::is_minimal() const {
  return std::none_of(maps.begin(), maps.end(), [](const GradedMap& m) { return m.has_unit_entry(); });
}

// ------------------------------------------------------------- syzygies

namespace {

Vec column_vec(const GradedMap& phi, std::size_t c, const ModuleOrder& ord, std::uint32_t offset) {
  Vec v;
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (const auto& t : phi.at(r, c).terms()) v.push_back({t.m, t.c, static_cast<std::uint32_t>(r) + offset});
  return vec::normalize(ord, std::move(v));
}

std::vector<int> degrees_of(const ModuleOrder& ord, const std::vector<Vec>& vs) {
  std::vector<int> d;
  for (const auto& v : vs) d.push_back(vec::degree(ord, v));
  return d;
}

/// Keeps the inputs that are minimal generators of the submodule they span.
std::vector<Vec> minimal_subset(const ModuleOrder& ord, std::vector<Vec> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Vec& v) { return v.empty(); }), gens.end());
  if (gens.empty()) return gens;
  std::stable_sort(gens.begin(), gens.end(),
                   [&ord](const Vec& a, const Vec& b) { return vec::degree(ord, a) < vec::degree(ord, b); });
  GBOptions opt;
  opt.interreduce = false;
  opt.degree_limit = vec::degree(ord, gens.back());
  const GBResult r = buchberger(ord, gens, opt);
  std::vector<Vec> out;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (r.minimal_input[k]) out.push_back(gens[k]);
  return out;
}

/// Position-over-term Groebner basis of the graph {(v_j, e_j)} inside
/// target + S^k; elements whose lead lies in the S^k block are syzygies.
struct Graph {
  ModuleOrder ord;
  std::size_t t = 0;
  GBResult gb;
};

Graph graph_gb(const FreeModule& target, const std::vector<Vec>& gens, const std::vector<int>& twists) {
  Graph g;
  g.t = target.rank();
  std::vector<int> tw = target.twists;
  tw.insert(tw.end(), twists.begin(), twists.end());
  g.ord = ModuleOrder(target.ring, tw, true);
  std::vector<Vec> in;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Vec v = gens[j];
    v.push_back({Monomial::one(), 1, static_cast<std::uint32_t>(g.t + j)});
    in.push_back(vec::normalize(g.ord, std::move(v)));
  }
  g.gb = buchberger(g.ord, in);
  return g;
}

std::vector<Vec> graph_syzygies(const Graph& g, const ModuleOrder& src_ord) {
  std::vector<Vec> out;
  for (const auto& v : g.gb.basis) {
    if (v.front().comp < g.t) continue;
    Vec s;
    for (const auto& t : v) s.push_back({t.m, t.c, t.comp - static_cast<std::uint32_t>(g.t)});
    out.push_back(vec::normalize(src_ord, std::move(s)));
  }
  return out;
}

}  // namespace

GradedMap syzygies(const GradedMap& phi) {
  const FreeModule& src = phi.source();
  const ModuleOrder src_ord = top_order(src);
  if (src.rank() == 0) return GradedMap(FreeModule{phi.ring(), {}}, src);
  const ModuleOrder tgt_ord = top_order(phi.target());
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < phi.cols(); ++c) cols.push_back(column_vec(phi, c, tgt_ord, 0));
  const Graph g = graph_gb(phi.target(), cols, src.twists);
  std::vector<Vec> syz = minimal_subset(src_ord, graph_syzygies(g, src_ord));
  std::vector<int> deg = degrees_of(src_ord, syz);
  return GradedMap::from_columns(src, syz, std::move(deg));
}

std::vector<Vec> schreyer_syzygies(const ModuleOrder& ord, const std::vector<Vec>& gb, ModuleOrder& syz_order) {
  syz_order = ModuleOrder::schreyer(ord, gb);
  const PrimeField& F = ord.ring->field();
  const Reducer red(ord, gb);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].front().comp != gb[j].front().comp) continue;
      budget::check();
      const Monomial m = lcm(gb[i].front().m, gb[j].front().m);
      const Monomial mi = m / gb[i].front().m, mj = m / gb[j].front().m;
      const Vec s = vec::axpy(ord, vec::times(ord, gb[i], mi, 1), F.neg(1), vec::times(ord, gb[j], mj, 1));
      std::vector<Vec> q;
      if (!red.reduce(s, q).empty()) throw Error("schreyer_syzygies: input is not a Groebner basis");
      Vec z{{mi, 1, static_cast<std::uint32_t>(i)}, {mj, F.neg(1), static_cast<std::uint32_t>(j)}};
      for (std::size_t k = 0; k < q.size(); ++k)
        for (const auto& t : q[k]) z.push_back({t.m, F.neg(t.c), static_cast<std::uint32_t>(k)});
      z = vec::normalize(syz_order, std::move(z));
      if (!z.empty()) out.push_back(vec::monic(syz_order, z));
    }
  }
  // drop elements whose lead is a multiple of another lead
  std::stable_sort(out.begin(), out.end(),
                   [&syz_order](const Vec& a, const Vec& b) { return syz_order.cmp(a.front(), b.front()) < 0; });
  std::vector<Vec> kept;
  for (auto& v : out) {
    bool redundant = false;
    for (const auto& w : kept)
      if (w.front().comp == v.front().comp && divides(w.front().m, v.front().m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(v));
  }
  return kept;
}

// ----------------------------------------------------------- resolutions

namespace {

class MonomialCache {
 public:
  explicit MonomialCache(int n) : idx_(n, 64) {}
  const std::vector<Monomial>& of(int d) {
    if (d < 0) return empty_;
    auto it = lists_.find(d);
    if (it == lists_.end()) it = lists_.emplace(d, idx_.enumerate(d)).first;
    return it->second;
  }
  std::size_t count(int d) const { return d < 0 ? 0 : idx_.count(d); }
  std::size_t rank(const Monomial& m) const { return idx_.rank(m); }

 private:
  MonomialIndexer idx_;
  std::map<int, std::vector<Monomial>> lists_;
  std::vector<Monomial> empty_;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// New minimal generators of ker(phi) in degree d: a kernel basis of the
/// degree-d piece, reduced against multiples of the generators found so far.
std::vector<Vec> kernel_generators(const GradedMap& phi, int d, const std::vector<Vec>& earlier,
                                   const std::vector<int>& earlier_deg, MonomialCache& mc) {
  const auto& src = phi.source().twists;
  const auto& tgt = phi.target().twists;
  const PrimeField& F = phi.ring()->field();
  std::vector<std::size_t> coff(src.size(), kNone);
  std::vector<std::pair<std::size_t, std::uint32_t>> starts;  // column offset -> component
  std::size_t ncols = 0;
  for (std::size_t c = 0; c < src.size(); ++c) {
    if (d - src[c] < 0) continue;
    coff[c] = ncols;
    starts.push_back({ncols, static_cast<std::uint32_t>(c)});
    ncols += mc.count(d - src[c]);
  }
  if (ncols == 0) return {};
  std::vector<std::size_t> roff(tgt.size(), kNone);
  std::size_t nrows = 0;
  for (std::size_t r = 0; r < tgt.size(); ++r) {
    if (d - tgt[r] < 0) continue;
    roff[r] = nrows;
    nrows += mc.count(d - tgt[r]);
  }
  std::vector<SparseVec> rows(nrows);
  for (std::size_t c = 0; c < src.size(); ++c) {
    if (coff[c] == kNone) continue;
    const auto& ms = mc.of(d - src[c]);
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      const Polynomial& e = phi.at(r, c);
      if (e.is_zero()) continue;
      for (std::size_t a = 0; a < ms.size(); ++a)
        for (const auto& t : e.terms())
          rows[roff[r] + mc.rank(ms[a] * t.m)].push_back({static_cast<std::uint32_t>(coff[c] + a), t.c});
    }
  }
  budget::check();
  Echelon E(F, ncols);
  for (const auto& row : rows)
    if (!row.empty()) E.insert(row);
  budget::check();
  auto ker = E.kernel();
  if (ker.empty()) return {};

  Echelon V(F, ncols);
  for (std::size_t g = 0; g < earlier.size(); ++g) {
    if (earlier_deg[g] >= d) continue;
    for (const auto& mu : mc.of(d - earlier_deg[g])) {
      SparseVec sv;
      for (const auto& t : earlier[g])
        sv.push_back({static_cast<std::uint32_t>(coff[t.comp] + mc.rank(t.m * mu)), t.c});
      std::sort(sv.begin(), sv.end());
      V.insert(sv);
    }
  }
  const ModuleOrder ord = top_order(phi.source());
  std::vector<Vec> out;
  for (const auto& kv : ker) {
    if (!V.insert(kv)) continue;
    Vec v;
    for (const auto& [col, c] : kv) {
      auto it = std::upper_bound(starts.begin(), starts.end(), std::make_pair(static_cast<std::size_t>(col), UINT32_MAX));
      --it;
      const std::uint32_t comp = it->second;
      v.push_back({mc.of(d - src[comp])[col - it->first], c, comp});
    }
    out.push_back(vec::normalize(ord, std::move(v)));
  }
  return out;
}

GradedMap first_map(const Ideal& I) {
  const RingPtr& R = I.ring();
  std::vector<Polynomial> g = mingens(I).gens();
  std::stable_sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  const FreeModule F0{R, {0}};
  std::vector<Vec> cols;
  std::vector<int> deg;
  for (const auto& f : g) {
    cols.push_back(vec::from_polynomial(f));
    deg.push_back(f.degree());
  }
  return GradedMap::from_columns(F0, cols, deg);
}

void check_against_hilbert(const Ideal& I, const FreeResolution& res) {
  BettiTable b;
  for (std::size_t i = 0; i <= res.maps.size(); ++i)
    for (int t : res.module(i).twists) b.add(static_cast<int>(i), t, 1);
  std::vector<int> w(I.ring()->nvars(), 1);
  const HilbertSeries from_betti(w, 0, b.k_polynomial());
  const HilbertSeries hs = hilbert_series(I);
  if (from_betti.low() != hs.low() || from_betti.numerator() != hs.numerator())
    throw Error("linear resolution disagrees with the Hilbert series; regularity bound too small");
}

FreeResolution linear_resolution(const Ideal& I, int max_len, int reg, bool gorenstein) {
  const RingPtr& R = I.ring();
  if (!R->standard_grading()) throw DomainError("linear resolution needs the standard grading");
  FreeResolution res;
  res.ring = R;
  if (max_len < 1 || I.is_zero()) {
    res.complete = I.is_zero();
    return res;
  }
  res.maps.push_back(first_map(I));
  for (int t : res.maps[0].source().twists)
    if (t - 1 > reg) throw DomainError("ideal has generators beyond the regularity bound");
  MonomialCache mc(R->nvars());
  while (true) {
    const GradedMap& phi = res.maps.back();
    if (phi.cols() == 0) break;
    if (res.maps.size() >= static_cast<std::size_t>(max_len)) {
      res.complete = false;
      break;
    }
    const int i = static_cast<int>(res.maps.size());
    const auto& tw = phi.source().twists;
    const int lo = *std::min_element(tw.begin(), tw.end()) + 1;
    const int hi = i + 1 + (gorenstein ? reg - 1 : reg);
    std::vector<Vec> gens;
    std::vector<int> deg;
    auto run = [&](int d) {
      auto g = kernel_generators(phi, d, gens, deg, mc);
      for (auto& v : g) {
        gens.push_back(std::move(v));
        deg.push_back(d);
      }
    };
    for (int d = lo; d <= hi; ++d) run(d);
    if (gens.empty() && gorenstein) run(i + 1 + reg);
    if (gens.empty()) break;
    res.maps.push_back(GradedMap::from_columns(phi.source(), gens, deg));
  }
  if (res.complete) check_against_hilbert(I, res);
  return res;
}

FreeResolution groebner_resolution(const Ideal& I, int max_len) {
  FreeResolution res;
  res.ring = I.ring();
  if (max_len < 1 || I.is_zero()) {
    res.complete = I.is_zero();
    return res;
  }
  res.maps.push_back(first_map(I));
  while (res.maps.back().cols() > 0) {
    if (res.maps.size() >= static_cast<std::size_t>(max_len)) {
      res.complete = false;
      break;
    }
    GradedMap next = syzygies(res.maps.back());
    if (next.cols() == 0) break;
    res.maps.push_back(std::move(next));
  }
  return res;
}

FreeResolution schreyer_resolution(const Ideal& I, int max_len) {
  const RingPtr& R = I.ring();
  FreeResolution res;
  res.ring = R;
  if (max_len < 1 || I.is_zero()) {
    res.complete = I.is_zero();
    return res;
  }
  const int n = R->nvars();
  ModuleOrder ord = top_order(FreeModule{R, {0}});
  std::vector<Vec> cur;
  const GroebnerBasis G(I);
  for (const auto& f : G.basis()) cur.push_back(vec::from_polynomial(f));
  FreeModule prev{R, {0}};
  for (int step = 0; !cur.empty(); ++step) {
    if (res.maps.size() >= static_cast<std::size_t>(max_len)) {
      res.complete = false;
      break;
    }
    // larger exponents of the step's variable first keep the Schreyer chain short
    const int v = step % n;
    std::stable_sort(cur.begin(), cur.end(), [v](const Vec& a, const Vec& b) {
      if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
      return a.front().m.e[v] > b.front().m.e[v];
    });
    res.maps.push_back(GradedMap::from_columns(prev, cur, degrees_of(ord, cur)));
    prev = res.maps.back().source();
    ModuleOrder next;
    cur = schreyer_syzygies(ord, cur, next);
    ord = std::move(next);
  }
  return res;
}

}  // namespace

FreeResolution free_resolution(const Ideal& I, int max_len, const ResolutionOptions& opt) {
  using M = ResolutionOptions::Method;
  M method = opt.method;
  if (method == M::Auto) method = opt.regularity >= 0 ? M::Linear : M::Groebner;
  if (method == M::Linear) {
    if (opt.regularity < 0) throw DomainError("linear resolution needs a regularity bound");
    return linear_resolution(I, max_len, opt.regularity, opt.gorenstein);
  }
  if (!opt.minimal) return schreyer_resolution(I, max_len);
  return groebner_resolution(I, max_len);
}

// ------------------------------------------------------------ minimalize

FreeResolution minimalize(const FreeResolution& res) {
  struct Mat {
    std::vector<int> src, tgt;
    std::vector<std::vector<Polynomial>> e;
  };
  const RingPtr& R = res.ring;
  const PrimeField& F = R->field();
  std::vector<Mat> m;
  for (const auto& g : res.maps) m.push_back({g.source().twists, g.target().twists, g.entries()});

  auto erase_col = [](Mat& a, std::size_t c) {
    a.src.erase(a.src.begin() + static_cast<std::ptrdiff_t>(c));
    for (auto& row : a.e) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  };
  auto erase_row = [](Mat& a, std::size_t r) {
    a.tgt.erase(a.tgt.begin() + static_cast<std::ptrdiff_t>(r));
    a.e.erase(a.e.begin() + static_cast<std::ptrdiff_t>(r));
  };

  for (std::size_t k = 0; k < m.size(); ++k) {
    while (true) {
      Mat& a = m[k];
      std::size_t pr = kNone, pc = kNone;
      for (std::size_t r = 0; r < a.e.size() && pr == kNone; ++r)
        for (std::size_t c = 0; c < a.e[r].size(); ++c) {
          const Polynomial& p = a.e[r][c];
          if (p.size() == 1 && p.lead_monomial().tdeg == 0) {
            pr = r;
            pc = c;
            break;
          }
        }
      if (pr == kNone) break;
      budget::check();
      const Coeff inv = F.inv(a.e[pr][pc].lead_coeff());
      for (std::size_t j = 0; j < a.src.size(); ++j) {
        if (j == pc || a.e[pr][j].is_zero()) continue;
        const Polynomial f = a.e[pr][j].scaled(inv);
        for (std::size_t r = 0; r < a.tgt.size(); ++r) {
          if (r == pr || a.e[r][pc].is_zero()) continue;
          a.e[r][j] -= a.e[r][pc] * f;
        }
      }
      erase_row(a, pr);
      erase_col(a, pc);
      if (k > 0) erase_col(m[k - 1], pr);
      if (k + 1 < m.size()) erase_row(m[k + 1], pc);
    }
  }
  FreeResolution out;
  out.ring = R;
  out.complete = res.complete;
  for (auto& a : m)
    out.maps.emplace_back(FreeModule{R, a.src}, FreeModule{R, a.tgt}, std::move(a.e));
  while (!out.maps.empty() && out.maps.back().cols() == 0) out.maps.pop_back();
  return out;
}

BettiTable betti_table(const FreeResolution& res) {
  if (!res.is_minimal()) throw DomainError("betti_table: resolution is not minimal");
  BettiTable b;
  for (std::size_t i = 0; i <= res.maps.size(); ++i)
    for (int t : res.module(i).twists) b.add(static_cast<int>(i), t, 1);
  return b;
}

ChainComplex strand(const FreeResolution& res, int which) {
  ChainComplex cx;
  const std::size_t len = res.maps.size();
  std::vector<std::vector<std::size_t>> pick(len + 1);
  for (std::size_t i = 0; i <= len; ++i) {
    const FreeModule Fi = res.module(i);
    std::vector<int> tw;
    for (std::size_t k = 0; k < Fi.rank(); ++k)
      if (Fi.twists[k] == static_cast<int>(i) + which) {
        pick[i].push_back(k);
        tw.push_back(Fi.twists[k]);
      }
    cx.modules.push_back(FreeModule{res.ring, tw});
  }
  cx.maps.emplace_back();
  for (std::size_t i = 1; i <= len; ++i) cx.maps.push_back(res.maps[i - 1].submatrix(pick[i - 1], pick[i]));
  return cx;
}

// --------------------------------------------------------------- modules

ModulePresentation homology(const ChainComplex& cx, std::size_t i) {
  if (i >= cx.modules.size()) throw DomainError("homology: position out of range");
  const FreeModule& C = cx.modules[i];
  const RingPtr& R = C.ring;
  const ModuleOrder cord = top_order(C);
  std::vector<Vec> K;
  std::vector<int> kdeg;
  if (i >= 1 && i < cx.maps.size() && cx.maps[i].rows() > 0) {
    const GradedMap z = syzygies(cx.maps[i]);
    K = z.columns(cord);
    kdeg = z.source().twists;
  } else {
    for (std::size_t r = 0; r < C.rank(); ++r) {
      K.push_back({{Monomial::one(), 1, static_cast<std::uint32_t>(r)}});
      kdeg.push_back(C.twists[r]);
    }
  }
  const FreeModule H{R, kdeg};
  if (K.empty()) return {H, GradedMap(FreeModule{R, {}}, H)};

  const Graph g = graph_gb(C, K, kdeg);
  const ModuleOrder hord = top_order(H);
  std::vector<Vec> rels = graph_syzygies(g, hord);
  if (i + 1 < cx.maps.size() && cx.maps[i + 1].cols() > 0) {
    const Reducer red(g.ord, g.gb.basis);
    const GradedMap& psi = cx.maps[i + 1];
    for (std::size_t c = 0; c < psi.cols(); ++c) {
      const Vec r = red.reduce(column_vec(psi, c, g.ord, 0));
      Vec s;
      for (const auto& t : r) {
        if (t.comp < g.t) throw Error("homology: image is not contained in the kernel");
        s.push_back({t.m, t.c, t.comp - static_cast<std::uint32_t>(g.t)});
      }
      s = vec::normalize(hord, std::move(s));
      if (!s.empty()) rels.push_back(std::move(s));
    }
  }
  rels = minimal_subset(hord, std::move(rels));
  return {H, GradedMap::from_columns(H, rels, degrees_of(hord, rels))};
}

HilbertSeries module_hilbert_series(const ModulePresentation& M) {
  const RingPtr& R = M.ambient.ring;
  std::vector<int> w(R->weights().begin(), R->weights().end());
  const ModuleOrder ord = top_order(M.ambient);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < M.relations.cols(); ++c) {
    Vec v = column_vec(M.relations, c, ord, 0);
    if (!v.empty()) cols.push_back(std::move(v));
  }
  const GBResult gb = buchberger(ord, cols);
  std::vector<std::vector<Monomial>> leads(M.ambient.rank());
  for (const auto& v : gb.basis) leads[v.front().comp].push_back(v.front().m);
  HilbertSeries hs;
  for (std::size_t r = 0; r < M.ambient.rank(); ++r)
    hs = hs + HilbertSeries(w, 0, monomial_numerator(leads[r], w)).shifted(M.ambient.twists[r]);
  return hs;
}

long long module_hilbert(const ModulePresentation& M, int d) { return module_hilbert_series(M).value(d); }

DimDeg module_dim_deg(const ModulePresentation& M) {
  auto [d, e] = module_hilbert_series(M).dim_deg();
  return {d, e};
}

Ideal annihilator(const ModulePresentation& M) {
  const RingPtr& R = M.ambient.ring;
  const std::size_t a = M.ambient.rank();
  if (a == 0) return Ideal::unit(R);
  // full support: V(Ann) is all of P^{n-1}, so Ann lies in the zero prime
  if (module_hilbert_series(M).dim_deg().first == R->nvars() - 1) return Ideal(R);
  const ModuleOrder top = top_order(M.ambient);
  std::vector<Vec> rels;
  for (std::size_t c = 0; c < M.relations.cols(); ++c) {
    Vec v = column_vec(M.relations, c, top, 0);
    if (!v.empty()) rels.push_back(std::move(v));
  }
  const Reducer N(top, buchberger(top, rels).basis);
  const auto kills = [&](const Ideal& J, std::size_t r) {
    for (const auto& f : J.gens())
      if (!N.reduce(vec::normalize(top, vec::from_polynomial(f, static_cast<std::uint32_t>(r)))).empty()) return false;
    return true;
  };
  // Ann(M) is contained in every partial intersection, so one that already
  // kills all generators is the answer. (N : e_r) comes from one GB of
  // <e_r + z> + N, z a tag component under the rest.
  std::vector<int> tw = M.ambient.twists;
  tw.push_back(0);
  std::optional<Ideal> ann;
  for (std::size_t r = 0; r < a; ++r) {
    if (ann && kills(*ann, r)) continue;
    tw.back() = tw[r];
    ModuleOrder ord(R, tw);
    ord.bottom = static_cast<int>(a);
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < M.relations.cols(); ++c) {
      Vec v = column_vec(M.relations, c, ord, 0);
      if (!v.empty()) cols.push_back(std::move(v));
    }
    const Monomial one = Monomial::one();
    cols.push_back(vec::normalize(ord, {Term{one, 1, static_cast<std::uint32_t>(r)}, Term{one, 1, static_cast<std::uint32_t>(a)}}));
    const GBResult gb = buchberger(ord, cols);
    std::vector<Polynomial> q;
    for (const auto& v : gb.basis)
      if (v.front().comp == a) q.push_back(vec::component(R, v, static_cast<std::uint32_t>(a)));
    Ideal Q(R, std::move(q));
    if (Q.is_zero()) return Ideal(R);
    ann = ann ? intersect(*ann, Q) : Q;
  }
  return mingens(*ann);
}

}  // namespace cansyz
