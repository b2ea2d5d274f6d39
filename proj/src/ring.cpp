#include "cansyz/ring.hpp"

#include <algorithm>
#include <unordered_set>

namespace cansyz {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order,
                   std::vector<int> weights)
    : field_(std::move(field)), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (names_.empty()) throw DomainError("ring needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw Unsupported("at most " + std::to_string(kMaxVars) + " variables");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) throw DomainError("variable names must be unique and nonempty");
  }
  if (order_.kind == OrderKind::Block && (order_.block <= 0 || order_.block >= nvars()))
    throw DomainError("block size must lie in [1, nvars)");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw DomainError("weight count differs from variable count");
  for (int i = 0; i < nvars(); ++i) {
    if (weights_[i] < 0) throw DomainError("negative weight");
    if (weights_[i] == 0 && !(order_.kind == OrderKind::Block && i < order_.block))
      throw DomainError("weight 0 only allowed for eliminated variables");
    if (weights_[i] != 1) standard_ = false;
  }
}

RingPtr PolyRing::indexed(const PrimeField& field, const std::string& prefix, int n, MonomialOrder order) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make(field, std::move(names), order);
}

int PolyRing::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int PolyRing::grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const noexcept {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += weights_[i] * a.e[i];
    db += weights_[i] * b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

int PolyRing::cmp(const Monomial& a, const Monomial& b) const noexcept {
  if (order_.kind == OrderKind::Grevlex) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (int i = nvars() - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  const int k = order_.block;
  int ba = 0, bb = 0;
  for (int i = 0; i < k; ++i) {
    ba += a.e[i];
    bb += b.e[i];
  }
  if (ba != bb) return ba < bb ? -1 : 1;
  if (int c = grevlex_range(a, b, 0, k)) return c;
  return grevlex_range(a, b, k, nvars());
}

namespace {
void enumerate_weighted(const PolyRing& R, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == R.nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = R.weights()[var];
  for (int a = 0; a * w <= remaining; ++a) {
    cur.set(var, a);
    enumerate_weighted(R, var + 1, remaining - a * w, cur, out);
  }
  cur.set(var, 0);
}
}  // namespace

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  for (int w : weights_)
    if (w == 0) throw DomainError("graded pieces are infinite with a weight-0 variable");
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  enumerate_weighted(*this, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; });
  return out;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(field_, names_, order, weights_);
}

MonomialIndexer::MonomialIndexer(int nvars, int max_degree) : n_(nvars), max_(max_degree) {
  const int N = nvars + max_degree + 1;
  table_.assign(N + 1, std::vector<std::size_t>(N + 1, 0));
  for (int a = 0; a <= N; ++a) {
    table_[a][0] = 1;
    for (int b = 1; b <= a; ++b) table_[a][b] = table_[a - 1][b - 1] + table_[a - 1][b];
  }
}

std::size_t MonomialIndexer::binom(int a, int b) const {
  if (b < 0 || a < b || a < 0) return 0;
  return table_.at(a).at(b);
}

std::size_t MonomialIndexer::count(int degree) const {
  if (degree < 0) return 0;
  return binom(degree + n_ - 1, n_ - 1);
}

std::size_t MonomialIndexer::rank(const Monomial& m) const {
  // monomials preceding m in lex order (larger exponent first at the first
  // differing position)
  std::size_t r = 0;
  int remaining = static_cast<int>(m.tdeg);
  for (int i = 0; i + 1 < n_; ++i) {
    const int a = m.e[i];
    if (remaining - a - 1 >= 0) r += binom(remaining - a - 1 + n_ - i - 1, n_ - i - 1);
    remaining -= a;
  }
  return r;
}

std::vector<Monomial> MonomialIndexer::enumerate(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  out.reserve(count(degree));
  Monomial cur;
  // lex-descending enumeration matches rank order
  std::vector<int> e(n_, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n_ - 1) {
      e[i] = rem;
      Monomial m;
      for (int k = 0; k < n_; ++k) m.e[k] = static_cast<std::uint16_t>(e[k]);
      m.tdeg = degree;
      m.rebuild_mask();
      out.push_back(m);
      return;
    }
    for (int a = rem; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, rem - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace cansyz
