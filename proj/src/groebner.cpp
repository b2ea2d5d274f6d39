#include "cansyz/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cansyz/budget.hpp"

namespace cansyz {

// ---------------------------------------------------------------- Reducer

Reducer::Reducer(const ModuleOrder& ord, std::vector<Vec> basis) : ord_(ord), basis_(std::move(basis)) {
  by_comp_.resize(ord_.rank());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].empty()) throw DomainError("Reducer: zero basis element");
    basis_[i] = vec::monic(ord_, basis_[i]);
    by_comp_.at(basis_[i].front().comp).push_back(i);
  }
}

int Reducer::find(const Term& t) const {
  for (std::size_t i : by_comp_[t.comp])
    if (divides(basis_[i].front().m, t.m)) return static_cast<int>(i);
  return -1;
}

namespace {

// Sum of sorted vectors held in buckets of geometrically growing length, so
// subtracting a short multiple from a long sum does not copy the sum.
class Geobucket {
 public:
  explicit Geobucket(const ModuleOrder& ord) : ord_(ord), F_(ord.ring->field()) {}

  void add(Vec v) {
    std::size_t i = 0;
    while (cap(i) < v.size()) ++i;
    while (true) {
      if (i >= b_.size()) {
        b_.resize(i + 1);
        off_.resize(i + 1, 0);
      }
      v = merge(b_[i], off_[i], v);
      b_[i].clear();
      off_[i] = 0;
      if (v.size() <= cap(i)) {
        b_[i] = std::move(v);
        return;
      }
      ++i;
    }
  }

  /// Adds s * m * g[from..].
  void add_multiple(const Vec& g, std::size_t from, const Monomial& m, Coeff s) {
    Vec v;
    v.reserve(g.size() - from);
    for (std::size_t k = from; k < g.size(); ++k) v.push_back({g[k].m * m, F_.mul(g[k].c, s), g[k].comp});
    add(std::move(v));
  }

  /// Removes the leading term; false when the sum is zero.
  bool pop_lead(Term& t) {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < b_.size(); ++i)
        if (off_[i] < b_[i].size() && (best < 0 || ord_.cmp(b_[i][off_[i]], b_[best][off_[best]]) > 0))
          best = static_cast<int>(i);
      if (best < 0) return false;
      t = b_[best][off_[best]++];
      for (std::size_t i = 0; i < b_.size(); ++i)
        if (static_cast<int>(i) != best && off_[i] < b_[i].size() && ord_.cmp(b_[i][off_[i]], t) == 0)
          t.c = F_.add(t.c, b_[i][off_[i]++].c);
      if (t.c) return true;
    }
  }

  Vec take_all() {
    Vec out;
    for (std::size_t i = 0; i < b_.size(); ++i) out = merge(b_[i], off_[i], out);
    b_.clear();
    off_.clear();
    return out;
  }

 private:
  static std::size_t cap(std::size_t i) { return std::size_t{8} << (2 * i); }

  Vec merge(const Vec& a, std::size_t i, const Vec& b) const {
    Vec out;
    out.reserve(a.size() - i + b.size());
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      const int c = i == a.size() ? -1 : j == b.size() ? 1 : ord_.cmp(a[i], b[j]);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back(b[j++]);
      } else {
        if (Coeff v = F_.add(a[i].c, b[j].c)) out.push_back({a[i].m, v, a[i].comp});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const ModuleOrder& ord_;
  const PrimeField& F_;
  std::vector<Vec> b_;
  std::vector<std::size_t> off_;
};

// basis elements must be monic
Vec reduce_impl(const ModuleOrder& ord, const std::vector<Vec>& basis, const Reducer& R, Vec h,
                std::vector<Vec>* quotients, bool top_only) {
  const PrimeField& F = ord.ring->field();
  Geobucket B(ord);
  B.add(std::move(h));
  Vec rest;
  Term t;
  int steps = 0;
  while (B.pop_lead(t)) {
    if ((++steps & 63) == 0) budget::check();
    const int k = R.find(t);
    if (k < 0) {
      rest.push_back(t);
      if (top_only) {
        Vec tail = B.take_all();
        rest.insert(rest.end(), tail.begin(), tail.end());
        break;
      }
      continue;
    }
    const Vec& g = basis[k];
    const Monomial mult = t.m / g.front().m;
    if (quotients) (*quotients)[k].push_back({mult, t.c, 0});
    B.add_multiple(g, 1, mult, F.neg(t.c));
  }
  return rest;
}

}  // namespace

Vec Reducer::reduce(Vec h) const { return reduce_impl(ord_, basis_, *this, std::move(h), nullptr, false); }

Vec Reducer::reduce(Vec h, std::vector<Vec>& quotients) const {
  quotients.assign(basis_.size(), {});
  Vec r = reduce_impl(ord_, basis_, *this, std::move(h), &quotients, false);
  ModuleOrder scalar(ord_.ring, {0});
  for (auto& q : quotients) q = vec::normalize(scalar, std::move(q));
  return r;
}

// ------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int deg;
};

class Engine {
 public:
  Engine(const ModuleOrder& ord, const GBOptions& opt) : ord_(ord), opt_(opt) { by_comp_.resize(ord.rank()); }

  GBResult run(const std::vector<Vec>& inputs) {
    GBResult res;
    res.minimal_input.assign(inputs.size(), 0);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i].empty()) continue;
      if (!vec::is_homogeneous(ord_, inputs[i])) throw DomainError("buchberger: inhomogeneous input");
      order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return vec::degree(ord_, inputs[a]) < vec::degree(ord_, inputs[b]);
    });
    std::size_t next_input = 0;
    while (true) {
      budget::check();
      int D = INT_MAX;
      for (const auto& p : pairs_) D = std::min(D, p.deg);
      if (next_input < order.size()) D = std::min(D, vec::degree(ord_, inputs[order[next_input]]));
      if (D == INT_MAX) break;
      if (D > opt_.degree_limit) {
        res.complete = false;
        break;
      }
      // S-pairs of degree D first, so inputs are tested against everything
      // generated by lower degrees
      while (true) {
        std::vector<Pair> batch;
        std::vector<Pair> keep;
        for (auto& p : pairs_) (p.deg == D ? batch : keep).push_back(p);
        if (batch.empty()) break;
        pairs_ = std::move(keep);
        std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
          int c = ord_.cmp(Term{a.lcm, 1, a.comp}, Term{b.lcm, 1, b.comp});
          if (c) return c < 0;
          return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        for (const auto& p : batch) {
          Vec s = spoly(p);
          Vec h = top_reduce(std::move(s));
          if (!h.empty()) add(std::move(h));
        }
      }
      while (next_input < order.size() && vec::degree(ord_, inputs[order[next_input]]) == D) {
        const std::size_t idx = order[next_input++];
        Vec h = top_reduce(inputs[idx]);
        if (!h.empty()) {
          res.minimal_input[idx] = 1;
          add(std::move(h));
        }
      }
    }
    res.basis = finish();
    return res;
  }

 private:
  Vec spoly(const Pair& p) const {
    const Vec& a = g_[p.i];
    const Vec& b = g_[p.j];
    Vec sa = vec::times(ord_, a, p.lcm / a.front().m, 1);
    Vec sb = vec::times(ord_, b, p.lcm / b.front().m, 1);
    return vec::axpy(ord_, sa, ord_.ring->field().neg(1), sb);
  }

  int find(const Term& t) const {
    for (std::size_t i : by_comp_[t.comp])
      if (divides(g_[i].front().m, t.m)) return static_cast<int>(i);
    return -1;
  }

  Vec top_reduce(Vec h) const {
    const PrimeField& F = ord_.ring->field();
    Geobucket B(ord_);
    B.add(std::move(h));
    Term t;
    int steps = 0;
    while (B.pop_lead(t)) {
      if ((++steps & 63) == 0) budget::check();
      const int k = find(t);
      if (k < 0) {
        Vec out{t};
        Vec tail = B.take_all();
        out.insert(out.end(), tail.begin(), tail.end());
        return vec::monic(ord_, out);
      }
      B.add_multiple(g_[k], 1, t.m / g_[k].front().m, F.neg(t.c));
    }
    return {};
  }

  void add(Vec h) {
    const std::uint32_t k = static_cast<std::uint32_t>(g_.size());
    const Term L = h.front();
    const std::uint32_t comp = L.comp;
    // chain criterion on existing pairs
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (p.comp == comp && divides(L.m, p.lcm) && !(lcm(g_[p.i].front().m, L.m) == p.lcm) &&
          !(lcm(g_[p.j].front().m, L.m) == p.lcm))
        continue;
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    // candidate pairs with the new element
    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime_leads;
      bool dead = false;
    };
    std::vector<Cand> cands;
    for (std::size_t i : by_comp_[comp]) {
      if (!active_[i]) continue;
      const Monomial& Li = g_[i].front().m;
      cands.push_back({static_cast<std::uint32_t>(i), lcm(Li, L.m), coprime(Li, L.m)});
    }
    for (auto& a : cands)
      for (const auto& b : cands)
        if (&a != &b && divides(b.lcm, a.lcm) && !(b.lcm == a.lcm)) {
          a.dead = true;
          break;
        }
    const bool ideal_case = ord_.rank() == 1;
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (cands[x].dead) continue;
      // group of equal lcm: keep the first, unless any member is coprime
      bool any_coprime = ideal_case && cands[x].coprime_leads;
      for (std::size_t y = x + 1; y < cands.size(); ++y)
        if (!cands[y].dead && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || (ideal_case && cands[y].coprime_leads);
          cands[y].dead = true;
        }
      if (any_coprime) continue;
      pairs_.push_back({cands[x].i, k, cands[x].lcm, comp, ord_.degree(Term{cands[x].lcm, 1, comp})});
    }
    for (std::size_t i : by_comp_[comp])
      if (active_[i] && divides(L.m, g_[i].front().m)) active_[i] = 0;
    g_.push_back(std::move(h));
    active_.push_back(1);
    by_comp_[comp].push_back(k);
  }

  std::vector<Vec> finish() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < g_.size() && !redundant; ++j)
        if (j != i && g_[j].front().comp == g_[i].front().comp && divides(g_[j].front().m, g_[i].front().m) &&
            (!(g_[j].front().m == g_[i].front().m) || j < i))
          redundant = true;
      if (!redundant) keep.push_back(i);
    }
    std::vector<Vec> out;
    for (auto i : keep) out.push_back(g_[i]);
    if (opt_.interreduce) {
      // reduce tails against the minimal basis
      for (std::size_t i = 0; i < out.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < out.size(); ++j)
          if (j != i) others.push_back(out[j]);
        Reducer R(ord_, others);
        Vec tail(out[i].begin() + 1, out[i].end());
        Vec r = R.reduce(std::move(tail));
        r.insert(r.begin(), out[i].front());
        out[i] = vec::monic(ord_, r);
      }
    }
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return ord_.cmp(a.front(), b.front()) < 0; });
    return out;
  }

  ModuleOrder ord_;
  GBOptions opt_;
  std::vector<Vec> g_;
  std::vector<char> active_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
};

}  // namespace

GBResult buchberger(const ModuleOrder& ord, const std::vector<Vec>& inputs, const GBOptions& opt) {
  Engine e(ord, opt);
  return e.run(inputs);
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring()->names() != ring_->names()) throw DomainError("Ideal: generator from another ring");
    if (!g.is_homogeneous()) throw DomainError("Ideal: generators must be homogeneous");
    gens_.push_back(g.ring() == ring_ ? std::move(g) : g.in_ring(ring_));
  }
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> g;
  for (int i = 0; i < ring->nvars(); ++i) g.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(g));
}

namespace {
ModuleOrder scalar_order(const RingPtr& R) { return ModuleOrder(R, {0}); }

std::vector<Vec> as_vecs(const std::vector<Polynomial>& ps) {
  std::vector<Vec> out;
  for (const auto& p : ps) out.push_back(vec::from_polynomial(p));
  return out;
}
}  // namespace

GroebnerBasis::GroebnerBasis(const Ideal& I) : ring_(I.ring()) {
  ModuleOrder ord = scalar_order(ring_);
  GBResult r = buchberger(ord, as_vecs(I.gens()));
  for (auto& v : r.basis) basis_.push_back(Polynomial::from_sorted(ring_, std::move(v)));
  reducer_.emplace(ord, as_vecs(basis_));
}

std::vector<Monomial> GroebnerBasis::leads() const {
  std::vector<Monomial> out;
  for (const auto& b : basis_) out.push_back(b.lead_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().lead_monomial().is_one();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.is_zero() || basis_.empty()) return f.ring() == ring_ ? f : f.in_ring(ring_);
  Vec r = reducer_->reduce(vec::from_polynomial(f.ring() == ring_ ? f : f.in_ring(ring_)));
  return Polynomial::from_sorted(ring_, std::move(r));
}

bool GroebnerBasis::contains(const Ideal& J) const {
  for (const auto& g : J.gens())
    if (!contains(g)) return false;
  return true;
}

Ideal mingens(const Ideal& I) {
  ModuleOrder ord = scalar_order(I.ring());
  GBOptions opt;
  int maxdeg = 0;
  for (const auto& g : I.gens()) maxdeg = std::max(maxdeg, g.degree());
  opt.degree_limit = maxdeg;
  opt.interreduce = false;
  GBResult r = buchberger(ord, as_vecs(I.gens()), opt);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < I.gens().size(); ++i)
    if (r.minimal_input[i]) out.push_back(I.gens()[i]);
  return Ideal(I.ring(), std::move(out));
}

bool same_ideal(const Ideal& I, const Ideal& J) { return GroebnerBasis(I) == GroebnerBasis(J); }

// ------------------------------------------------------ ring manipulation

namespace {

// Moves monomial exponents by `offset` positions (positive = toward the end).
Polynomial shift_vars(const Polynomial& f, const RingPtr& target, int offset, int drop_below = 0) {
  std::vector<Term> t;
  for (const auto& x : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      if (i < drop_below) {
        if (x.m.e[i]) throw DomainError("shift_vars: dropped variable occurs");
        continue;
      }
      if (x.m.e[i]) m.set(i + offset, x.m.e[i]);
    }
    t.push_back({m, x.c, 0});
  }
  return Polynomial(target, std::move(t));
}

// perm[i] = new position of variable i
Polynomial permute_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& perm) {
  std::vector<Term> t;
  for (const auto& x : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars(); ++i)
      if (x.m.e[i]) m.set(perm[i], x.m.e[i]);
    t.push_back({m, x.c, 0});
  }
  return Polynomial(target, std::move(t));
}

std::string fresh_name(const PolyRing& R, const std::string& base) {
  std::string n = base;
  while (R.index_of(n) >= 0) n += "_";
  return n;
}

}  // namespace

Ideal eliminate(const Ideal& I, int k) {
  const RingPtr& R = I.ring();
  if (k < 0 || k >= R->nvars()) throw DomainError("eliminate: need 0 <= k < number of variables");
  if (k == 0) return GroebnerBasis(I).ideal();
  RingPtr B = R->with_order(MonomialOrder::eliminate(k));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.in_ring(B));
  GroebnerBasis G(Ideal(B, gens));
  std::vector<std::string> names(R->names().begin() + k, R->names().end());
  std::vector<int> weights(R->weights().begin() + k, R->weights().end());
  RingPtr sub = PolyRing::make(R->field(), names, MonomialOrder::grevlex(), weights);
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    bool free = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < k; ++i)
        if (t.m.e[i]) free = false;
    if (free) out.push_back(shift_vars(g, sub, -k, k));
  }
  return Ideal(sub, std::move(out));
}

Ideal quotient_by_variable(const Ideal& I, int v) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  std::vector<int> perm(n), inv(n);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0, pos = 0; i < n; ++i)
    if (i != v) perm[i] = pos++;
  perm[v] = n - 1;
  names.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    names[perm[i]] = R->name(i);
    weights[perm[i]] = R->weights()[i];
    inv[perm[i]] = i;
  }
  RingPtr P = PolyRing::make(R->field(), names, MonomialOrder::grevlex(), weights);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(permute_vars(g, P, perm));
  GroebnerBasis G(Ideal(P, gens));
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    std::uint32_t lowest = kMaxExponent;
    for (const auto& t : g.terms()) lowest = std::min<std::uint32_t>(lowest, t.m.e[n - 1]);
    Monomial d = lowest ? Monomial::var(n - 1, 1) : Monomial::one();
    std::vector<Term> t;
    for (const auto& x : g.terms()) t.push_back({x.m / d, x.c, 0});
    out.push_back(permute_vars(Polynomial::from_sorted(P, std::move(t)), R, inv));
  }
  return Ideal(R, std::move(out));
}

Ideal saturate_by_variable(const Ideal& I, int v) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  std::vector<int> perm(n), inv(n);
  std::vector<std::string> names(n);
  std::vector<int> weights(n);
  for (int i = 0, pos = 0; i < n; ++i)
    if (i != v) perm[i] = pos++;
  perm[v] = n - 1;
  for (int i = 0; i < n; ++i) {
    names[perm[i]] = R->name(i);
    weights[perm[i]] = R->weights()[i];
    inv[perm[i]] = i;
  }
  RingPtr P = PolyRing::make(R->field(), names, MonomialOrder::grevlex(), weights);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(permute_vars(g, P, perm));
  GroebnerBasis G(Ideal(P, gens));
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    std::uint32_t lowest = kMaxExponent;
    for (const auto& t : g.terms()) lowest = std::min<std::uint32_t>(lowest, t.m.e[n - 1]);
    Monomial d = Monomial::var(n - 1, lowest);
    std::vector<Term> t;
    for (const auto& x : g.terms()) t.push_back({x.m / d, x.c, 0});
    out.push_back(permute_vars(Polynomial::from_sorted(P, std::move(t)), R, inv));
  }
  return GroebnerBasis(Ideal(R, std::move(out))).ideal();
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R);
  const int n = R->nvars();
  std::vector<std::string> names{fresh_name(*R, "t")};
  names.insert(names.end(), R->names().begin(), R->names().end());
  std::vector<int> weights{0};
  weights.insert(weights.end(), R->weights().begin(), R->weights().end());
  RingPtr T = PolyRing::make(R->field(), names, MonomialOrder::eliminate(1), weights);
  const Polynomial t = Polynomial::variable(T, 0);
  const Polynomial one_minus_t = Polynomial::constant(T, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(t * shift_vars(f, T, 1));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * shift_vars(g, T, 1));
  GroebnerBasis G(Ideal(T, gens));
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    bool free = true;
    for (const auto& x : g.terms()) free = free && x.m.e[0] == 0;
    if (free) out.push_back(shift_vars(g, R, -1, 1));
  }
  (void)n;
  return GroebnerBasis(Ideal(R, std::move(out))).ideal();
}

Ideal intersect_via_module(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R);
  // components: 0 and 1 carry I and J, component 2 (lowest priority) records f
  ModuleOrder ord(R, {0, 0, 0}, true, {3, 2, 1});
  std::vector<Vec> gens;
  Vec diag;
  for (std::uint32_t c = 0; c < 3; ++c) diag.push_back({Monomial::one(), 1, c});
  gens.push_back(vec::normalize(ord, diag));
  for (const auto& f : I.gens()) gens.push_back(vec::reorder(ord, vec::from_polynomial(f, 0)));
  for (const auto& g : J.gens()) gens.push_back(vec::reorder(ord, vec::from_polynomial(g, 1)));
  GBResult r = buchberger(ord, gens);
  std::vector<Polynomial> out;
  for (const auto& v : r.basis)
    if (v.front().comp == 2) out.push_back(vec::component(R, v, 2));
  return GroebnerBasis(Ideal(R, std::move(out))).ideal();
}

namespace {
bool generated_by_variables(const Ideal& J, std::vector<int>& vars) {
  vars.clear();
  for (const auto& g : J.gens()) {
    if (g.size() != 1 || g.lead_monomial().tdeg != 1) return false;
    for (int i = 0; i < g.ring()->nvars(); ++i)
      if (g.lead_monomial().e[i]) vars.push_back(i);
  }
  return !vars.empty();
}

Ideal exact_divide(const Ideal& K, const Polynomial& g) {
  std::vector<Polynomial> out;
  for (const auto& f : K.gens()) {
    std::vector<Polynomial> q;
    Polynomial r = normal_form(f, {g}, q);
    if (!r.is_zero()) throw VerificationError("ideal_quotient: intersection element not divisible");
    out.push_back(q[0]);
  }
  return Ideal(K.ring(), std::move(out));
}
}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J, bool* zero_divisor) {
  const RingPtr& R = I.ring();
  if (zero_divisor) *zero_divisor = false;
  if (J.is_zero()) {
    if (zero_divisor) *zero_divisor = true;
    return Ideal::unit(R);
  }
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    Ideal q(R);
    if (g.lead_monomial().is_one()) {
      q = I;
    } else if (g.size() == 1 && g.lead_monomial().tdeg == 1) {
      int v = 0;
      while (!g.lead_monomial().e[v]) ++v;
      q = quotient_by_variable(I, v);
    } else {
      q = exact_divide(intersect(I, Ideal(R, {g})), g);
    }
    acc = acc ? intersect(*acc, q) : q;
  }
  return GroebnerBasis(*acc).ideal();
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  std::vector<int> vars;
  if (generated_by_variables(J, vars)) {
    std::optional<Ideal> acc;
    for (int v : vars) {
      Ideal s = saturate_by_variable(I, v);
      acc = acc ? intersect(*acc, s) : s;
    }
    return GroebnerBasis(*acc).ideal();
  }
  GroebnerBasis cur(I);
  while (true) {
    Ideal next = ideal_quotient(cur.ideal(), J);
    GroebnerBasis G(next);
    if (G == cur) return G.ideal();
    cur = std::move(G);
  }
  (void)R;
}

// --------------------------------------------------------- Hilbert series

namespace {

using Poly1 = std::vector<long long>;

void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 add(Poly1 a, const Poly1& b, int shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

int wdeg(const Monomial& m, const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m.e[i];
  return d;
}

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.tdeg < b.tdeg; });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& k : out)
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  g = std::move(out);
}

Poly1 numerator_rec(std::vector<Monomial> g, const std::vector<int>& w) {
  budget::check();
  minimalize(g);
  if (g.empty()) return {1};
  for (const auto& m : g)
    if (m.is_one()) return {};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < g.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!coprime(g[i], g[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Poly1 r{1};
    for (const auto& m : g) {
      Poly1 f(wdeg(m, w) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      r = mul(r, f);
    }
    return r;
  }
  // pivot on the variable occurring in most non-coprime generators
  const int n = static_cast<int>(w.size());
  int best = -1, best_count = 0;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    for (const auto& m : g) c += m.e[v] > 0;
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  std::vector<std::uint32_t> exps;
  for (const auto& m : g)
    if (m.e[best]) exps.push_back(m.e[best]);
  std::sort(exps.begin(), exps.end());
  const std::uint32_t e = exps[(exps.size() - 1) / 2];
  const Monomial p = Monomial::var(best, e);
  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& m : g) colon.push_back(m / gcd(m, p));
  Poly1 a = numerator_rec(std::move(plus), w);
  Poly1 b = numerator_rec(std::move(colon), w);
  return add(a, b, wdeg(p, w));
}

long long binom_poly(long long x, int k) {
  // C(x + k, k) as a polynomial in x, exact for all integers x
  if (k == 0) return 1;
  __int128 num = 1;
  for (int i = 1; i <= k; ++i) num *= (x + i);
  __int128 den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return static_cast<long long>(num / den);
}

}  // namespace

std::vector<long long> monomial_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
  return numerator_rec(std::move(gens), weights);
}

HilbertSeries::HilbertSeries(std::vector<int> weights, int low, std::vector<long long> numerator)
    : weights_(std::move(weights)), low_(low), num_(std::move(numerator)) {
  trim(num_);
  while (!num_.empty() && num_.front() == 0) {
    num_.erase(num_.begin());
    ++low_;
  }
}

long long HilbertSeries::value(int d) const {
  if (num_.empty()) return 0;
  const int top = d - low_;
  if (top < 0) return 0;
  // number of monomials of each weighted degree up to top
  std::vector<long long> count(top + 1, 0);
  count[0] = 1;
  for (int w : weights_) {
    if (w <= 0) throw DomainError("Hilbert function needs positive weights");
    for (int k = w; k <= top; ++k) count[k] += count[k - w];
  }
  long long v = 0;
  for (std::size_t k = 0; k < num_.size() && static_cast<int>(k) <= top; ++k) v += num_[k] * count[top - k];
  return v;
}

std::pair<int, long long> HilbertSeries::dim_deg() const {
  for (int w : weights_)
    if (w != 1) throw DomainError("dim_deg requires the standard grading");
  if (num_.empty()) return {-1, 0};
  Poly1 q = num_;
  int c = 0;
  while (true) {
    long long at1 = std::accumulate(q.begin(), q.end(), 0LL);
    if (at1 != 0) break;
    // divide by (1 - t): coefficients of the quotient are partial sums
    Poly1 r(q.size() - 1);
    long long s = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      s += q[i];
      r[i] = s;
    }
    q = std::move(r);
    trim(q);
    ++c;
  }
  const int D = static_cast<int>(weights_.size()) - c;
  const long long deg = std::accumulate(q.begin(), q.end(), 0LL);
  return {D - 1, deg};
}

long long HilbertSeries::polynomial(long long d) const {
  for (int w : weights_)
    if (w != 1) throw DomainError("Hilbert polynomial requires the standard grading");
  if (num_.empty()) return 0;
  const int n = static_cast<int>(weights_.size());
  // HS = sum_k num_k t^{low+k} / (1-t)^n, coefficient at d is
  // sum_k num_k C(d-low-k+n-1, n-1) read as a polynomial in d
  long long v = 0;
  for (std::size_t k = 0; k < num_.size(); ++k) v += num_[k] * binom_poly(d - low_ - static_cast<long long>(k), n - 1);
  return v;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (num_.empty()) return o;
  if (o.num_.empty()) return *this;
  const int lo = std::min(low_, o.low_);
  Poly1 a = add(Poly1(), num_, low_ - lo);
  a = add(a, o.num_, o.low_ - lo);
  return HilbertSeries(weights_, lo, a);
}

HilbertSeries HilbertSeries::shifted(int s) const { return HilbertSeries(weights_, low_ + s, num_); }

HilbertSeries hilbert_series(const GroebnerBasis& G) {
  std::vector<int> w(G.ring()->weights().begin(), G.ring()->weights().end());
  return HilbertSeries(w, 0, monomial_numerator(G.leads(), w));
}

long long hilbert_fn(const Ideal& I, int d) { return hilbert_series(I).value(d); }

DimDeg dim_deg(const GroebnerBasis& G) {
  auto [d, e] = hilbert_series(G).dim_deg();
  return {d, e};
}

DimDeg dim_deg(const Ideal& I) { return dim_deg(GroebnerBasis(I)); }

std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int d) {
  std::vector<Monomial> out;
  const auto leads = G.leads();
  for (const auto& m : G.ring()->monomials_of_degree(d)) {
    bool standard = true;
    for (const auto& l : leads)
      if (divides(l, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

}  // namespace cansyz
