#include "cansyz/koszul.hpp"

#include <algorithm>
#include <bit>

#include "cansyz/budget.hpp"

namespace cansyz {

namespace {

std::vector<std::uint32_t> subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == k) out.push_back(s);
  return out;
}

}  // namespace

KoszulOracle::KoszulOracle(const Ideal& I, std::size_t cap) : G_(I), n_(I.ring()->nvars()), cap_(cap) {
  if (!I.ring()->standard_grading()) throw DomainError("Koszul oracle needs the standard grading");
}

const KoszulOracle::Piece& KoszulOracle::piece(int d) {
  auto it = pieces_.find(d);
  if (it != pieces_.end()) return it->second;
  Piece p;
  if (d >= 0) p.basis = standard_monomials(G_, d);
  for (std::uint32_t a = 0; a < p.basis.size(); ++a) p.index.emplace(p.basis[a], a);
  return pieces_.emplace(d, std::move(p)).first->second;
}

// rank of Lambda^i V (x) A_d -> Lambda^{i-1} V (x) A_{d+1}
std::size_t KoszulOracle::rank_of_differential(int i, int d) {
  if (i <= 0 || i > n_ || d < 0) return 0;
  if (auto it = ranks_.find({i, d}); it != ranks_.end()) return it->second;
  const Piece& src = piece(d);
  const Piece& dst = piece(d + 1);
  if (src.basis.empty() || dst.basis.empty()) return ranks_[{i, d}] = 0;
  Piece& s = pieces_.at(d);
  if (s.mult.empty()) {
    const RingPtr& R = G_.ring();
    s.mult.resize(s.basis.size() * n_);
    for (std::size_t a = 0; a < s.basis.size(); ++a)
      for (int k = 0; k < n_; ++k) {
        const Polynomial nf = G_.normal_form(Polynomial::monomial(R, s.basis[a] * Monomial::var(k, 1)));
        SparseVec v;
        for (const auto& t : nf.terms()) v.push_back({dst.index.at(t.m), t.c});
        std::sort(v.begin(), v.end());
        s.mult[a * n_ + k] = std::move(v);
      }
  }
  const auto top = subsets(n_, i);
  const auto low = subsets(n_, i - 1);
  const PrimeField& F = G_.ring()->field();
  const std::size_t bd = dst.basis.size();
  std::vector<SparseVec> rows;
  rows.reserve(top.size() * s.basis.size());
  for (std::uint32_t S : top) {
    budget::check();
    for (std::size_t a = 0; a < s.basis.size(); ++a) {
      SparseVec row;
      int pos = 0;
      for (int k = 0; k < n_; ++k) {
        if (!(S >> k & 1u)) continue;
        const std::uint32_t T = S & ~(1u << k);
        const std::size_t ti = static_cast<std::size_t>(std::lower_bound(low.begin(), low.end(), T) - low.begin());
        const bool neg = pos % 2 == 1;
        for (const auto& [col, c] : s.mult[a * n_ + k])
          row.push_back({static_cast<std::uint32_t>(ti * bd + col), neg ? F.neg(c) : c});
        ++pos;
      }
      std::sort(row.begin(), row.end());
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  const std::size_t r = rank_of(F, low.size() * bd, rows);
  return ranks_[{i, d}] = r;
}

std::optional<long long> KoszulOracle::betti(int i, int j) {
  if (i < 0 || j < i) throw DomainError("koszul_betti needs 0 <= i <= j");
  if (i > n_) return 0;
  const int d = j - i;
  const auto& mid = piece(d);
  std::size_t choose = subsets(n_, i).size();
  const std::size_t middle = choose * mid.basis.size();
  if (middle > cap_) return std::nullopt;
  if (middle == 0) return 0;
  const std::size_t out = rank_of_differential(i, d);
  const std::size_t in = rank_of_differential(i + 1, d - 1);
  return static_cast<long long>(middle - out - in);
}

std::optional<long long> koszul_betti(const Ideal& I, int i, int j, std::size_t cap) {
  KoszulOracle k(I, cap);
  return k.betti(i, j);
}

}  // namespace cansyz
