#include "cansyz/module.hpp"

#include <algorithm>

namespace cansyz {

ModuleOrder::ModuleOrder(RingPtr r, std::vector<int> tw, bool position_over_term, std::vector<int> prio)
    : ring(std::move(r)), twists(std::move(tw)), pot(position_over_term), priority(std::move(prio)) {
  if (priority.empty()) {
    priority.resize(twists.size());
    for (std::size_t i = 0; i < twists.size(); ++i) priority[i] = static_cast<int>(twists.size() - i);
  }
  if (priority.size() != twists.size()) throw DomainError("priority count differs from rank");
}

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& base, const std::vector<std::vector<Term>>& gens) {
  auto fr = std::make_shared<SchreyerFrame>();
  fr->base = base;
  std::vector<int> tw;
  for (const auto& g : gens) {
    if (g.empty()) throw DomainError("Schreyer order: zero generator");
    fr->leads.push_back(g.front());
    tw.push_back(base.degree(g.front()));
  }
  ModuleOrder o(base.ring, std::move(tw));
  o.frame = std::move(fr);
  return o;
}

int ModuleOrder::schreyer_cmp(const Term& a, const Term& b) const {
  const Term& la = frame->leads[a.comp];
  const Term& lb = frame->leads[b.comp];
  const Term ta{a.m * la.m, 1, la.comp};
  const Term tb{b.m * lb.m, 1, lb.comp};
  if (int c = frame->base.cmp(ta, tb)) return c;
  if (a.comp == b.comp) return 0;
  return a.comp < b.comp ? 1 : -1;
}

namespace vec {

Vec normalize(const ModuleOrder& ord, Vec v) {
  const PrimeField& F = ord.ring->field();
  std::sort(v.begin(), v.end(), [&ord](const Term& a, const Term& b) { return ord.cmp(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (t.comp >= ord.rank()) throw DomainError("component out of range");
    t.c %= F.characteristic();
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c) {
      out.push_back(t);
    }
  }
  return out;
}

Vec axpy(const ModuleOrder& ord, const Vec& a, Coeff s, const Vec& b) {
  const PrimeField& F = ord.ring->field();
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ord.cmp(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      t.c = F.mul(t.c, s);
      if (t.c) out.push_back(t);
    } else {
      Coeff v = F.add(a[i].c, F.mul(s, b[j].c));
      if (v) out.push_back({a[i].m, v, a[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

Vec times(const ModuleOrder& ord, const Vec& a, const Monomial& m, Coeff c) {
  const PrimeField& F = ord.ring->field();
  c %= F.characteristic();
  if (c == 0) return {};
  Vec out = a;
  for (auto& t : out) {
    t.m = t.m * m;
    t.c = F.mul(t.c, c);
  }
  return out;
}

Vec scale(const ModuleOrder& ord, const Vec& a, Coeff c) { return times(ord, a, Monomial::one(), c); }

Vec monic(const ModuleOrder& ord, const Vec& a) {
  if (a.empty() || a.front().c == 1) return a;
  return scale(ord, a, ord.ring->field().inv(a.front().c));
}

bool is_homogeneous(const ModuleOrder& ord, const Vec& v) {
  for (const auto& t : v)
    if (ord.degree(t) != ord.degree(v.front())) return false;
  return true;
}

int degree(const ModuleOrder& ord, const Vec& v) {
  if (v.empty()) throw DomainError("degree of zero vector");
  return ord.degree(v.front());
}

Vec reorder(const ModuleOrder& ord, Vec v) {
  std::sort(v.begin(), v.end(), [&ord](const Term& a, const Term& b) { return ord.cmp(a, b) > 0; });
  return v;
}

Vec from_polynomial(const Polynomial& f, std::uint32_t comp) {
  Vec v = f.terms();
  for (auto& t : v) t.comp = comp;
  return v;
}

Polynomial component(const RingPtr& ring, const Vec& v, std::uint32_t comp) {
  std::vector<Term> t;
  for (const auto& x : v)
    if (x.comp == comp) t.push_back({x.m, x.c, 0});
  return Polynomial(ring, std::move(t));
}

std::vector<Polynomial> components(const RingPtr& ring, const Vec& v, std::size_t rank) {
  std::vector<std::vector<Term>> buckets(rank);
  for (const auto& x : v) buckets.at(x.comp).push_back({x.m, x.c, 0});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& b : buckets) out.emplace_back(ring, std::move(b));
  return out;
}

Vec from_components(const ModuleOrder& ord, const std::vector<Polynomial>& entries, std::uint32_t offset) {
  Vec v;
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& t : entries[r].terms()) v.push_back({t.m, t.c, static_cast<std::uint32_t>(r) + offset});
  return normalize(ord, std::move(v));
}

std::string to_string(const RingPtr& ring, const Vec& v) {
  std::uint32_t rank = 0;
  for (const auto& t : v) rank = std::max(rank, t.comp + 1);
  auto parts = components(ring, v, rank);
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].to_string();
  return s + ")";
}

}  // namespace vec

GradedMap::GradedMap(FreeModule source, FreeModule target)
    : source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(target_.rank(), std::vector<Polynomial>(source_.rank(), Polynomial(target_.ring)));
}

GradedMap::GradedMap(FreeModule source, FreeModule target, std::vector<std::vector<Polynomial>> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != target_.rank()) throw DomainError("GradedMap: row count differs from target rank");
  for (auto& row : entries_) {
    if (row.size() != source_.rank()) throw DomainError("GradedMap: column count differs from source rank");
    for (auto& e : row)
      if (!e.ring()) e = Polynomial(target_.ring);
  }
}

GradedMap GradedMap::from_columns(const FreeModule& target, const std::vector<Vec>& columns,
                                  std::vector<int> source_twists) {
  if (source_twists.size() != columns.size()) throw DomainError("from_columns: twist count mismatch");
  GradedMap m(FreeModule{target.ring, std::move(source_twists)}, target);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto parts = vec::components(target.ring, columns[c], target.rank());
    for (std::size_t r = 0; r < target.rank(); ++r) m.entries_[r][c] = std::move(parts[r]);
  }
  return m;
}

Vec GradedMap::column(std::size_t c, const ModuleOrder& ord) const {
  Vec v;
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& t : entries_[r][c].terms()) v.push_back({t.m, t.c, static_cast<std::uint32_t>(r)});
  return vec::reorder(ord, std::move(v));
}

std::vector<Vec> GradedMap::columns(const ModuleOrder& ord) const {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < cols(); ++c) out.push_back(column(c, ord));
  return out;
}

bool GradedMap::is_homogeneous() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto& e = entries_[r][c];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != source_.twists[c] - target_.twists[r]) return false;
    }
  return true;
}

bool GradedMap::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

bool GradedMap::has_unit_entry() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero() && e.lead_monomial().is_one()) return true;
  return false;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  if (other.target_.rank() != source_.rank()) throw DomainError("compose: incompatible modules");
  GradedMap out(other.source_, target_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < other.cols(); ++c) {
      Polynomial acc(ring());
      for (std::size_t k = 0; k < cols(); ++k) {
        if (entries_[r][k].is_zero() || other.entries_[k][c].is_zero()) continue;
        acc += entries_[r][k] * other.entries_[k][c];
      }
      out.entries_[r][c] = std::move(acc);
    }
  return out;
}

GradedMap GradedMap::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  FreeModule src{ring(), {}}, tgt{ring(), {}};
  for (auto c : cs) src.twists.push_back(source_.twists.at(c));
  for (auto r : rs) tgt.twists.push_back(target_.twists.at(r));
  GradedMap out(src, tgt);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out.entries_[i][j] = entries_[rs[i]][cs[j]];
  return out;
}

std::string GradedMap::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows(); ++r) {
    s += "[";
    for (std::size_t c = 0; c < cols(); ++c) s += (c ? ", " : "") + entries_[r][c].to_string();
    s += "]\n";
  }
  return s;
}

}  // namespace cansyz
