#include "cansyz/linalg.hpp"

#include <algorithm>
#include <bit>

#include "cansyz/budget.hpp"
#include "cansyz/error.hpp"

namespace cansyz {

class Echelon::Impl {
 public:
  virtual ~Impl() = default;
  virtual std::size_t ncols() const = 0;
  virtual std::size_t rank() const = 0;
  virtual bool insert(const SparseVec& v) = 0;
  virtual SparseVec reduce(const SparseVec& v) const = 0;
  virtual void back_substitute() = 0;
  virtual std::vector<SparseVec> kernel() = 0;
  virtual std::vector<std::uint32_t> pivots() const = 0;
  virtual SparseVec row(std::size_t i) const = 0;
};

namespace {

// F_2: one bit per column.
struct Gf2 {
  using Row = std::vector<std::uint64_t>;
  std::size_t words;
  explicit Gf2(std::size_t n, std::uint32_t) : words((n + 63) / 64) {}
  Row zero() const { return Row(words, 0); }
  void set(Row& r, std::uint32_t j, Coeff c) const {
    const std::uint64_t b = std::uint64_t{1} << (j & 63);
    r[j >> 6] = c & 1 ? (r[j >> 6] | b) : (r[j >> 6] & ~b);
  }
  Coeff get(const Row& r, std::uint32_t j) const { return (r[j >> 6] >> (j & 63)) & 1; }
  std::uint64_t nonzero(const Row& r, std::size_t k) const { return r[k]; }
  // v -= c * r, from word k on
  void submul(Row& v, Coeff, const Row& r, std::size_t k) const {
    for (; k < words; ++k) v[k] ^= r[k];
  }
  void scale(Row&, Coeff) const {}
};

// F_3: plane P holds value 1, plane N holds value 2.
struct Gf3 {
  using Row = std::vector<std::uint64_t>;  // [P words | N words]
  std::size_t words;
  explicit Gf3(std::size_t n, std::uint32_t) : words((n + 63) / 64) {}
  Row zero() const { return Row(2 * words, 0); }
  void set(Row& r, std::uint32_t j, Coeff c) const {
    const std::uint64_t b = std::uint64_t{1} << (j & 63);
    std::uint64_t& P = r[j >> 6];
    std::uint64_t& N = r[words + (j >> 6)];
    P &= ~b;
    N &= ~b;
    if (c % 3 == 1) P |= b;
    if (c % 3 == 2) N |= b;
  }
  Coeff get(const Row& r, std::uint32_t j) const {
    if ((r[j >> 6] >> (j & 63)) & 1) return 1;
    if ((r[words + (j >> 6)] >> (j & 63)) & 1) return 2;
    return 0;
  }
  std::uint64_t nonzero(const Row& r, std::size_t k) const { return r[k] | r[words + k]; }
  static void add_planes(std::uint64_t& P1, std::uint64_t& N1, std::uint64_t P2, std::uint64_t N2) {
    const std::uint64_t Z1 = ~(P1 | N1), Z2 = ~(P2 | N2);
    const std::uint64_t P = (P1 & Z2) | (P2 & Z1) | (N1 & N2);
    const std::uint64_t N = (N1 & Z2) | (N2 & Z1) | (P1 & P2);
    P1 = P;
    N1 = N;
  }
  void submul(Row& v, Coeff c, const Row& r, std::size_t k) const {
    // v - r = v + (-r): swap planes; v - 2r = v + r
    const bool swap = c % 3 == 1;
    std::uint64_t* P = v.data();
    std::uint64_t* N = v.data() + words;
    const std::uint64_t* rp = r.data() + (swap ? words : 0);
    const std::uint64_t* rn = r.data() + (swap ? 0 : words);
    for (; k < words; ++k) add_planes(P[k], N[k], rp[k], rn[k]);
  }
  void scale(Row& r, Coeff c) const {
    if (c % 3 == 2)
      for (std::size_t k = 0; k < words; ++k) std::swap(r[k], r[words + k]);
  }
};

// Generic p <= 101: one byte per column.
struct GfP {
  using Row = std::vector<std::uint8_t>;
  std::size_t n;
  std::uint32_t p;
  std::size_t words;
  GfP(std::size_t ncols, std::uint32_t prime) : n(ncols), p(prime), words((ncols + 63) / 64) {}
  Row zero() const { return Row(words * 64, 0); }
  void set(Row& r, std::uint32_t j, Coeff c) const { r[j] = static_cast<std::uint8_t>(c % p); }
  Coeff get(const Row& r, std::uint32_t j) const { return r[j]; }
  std::uint64_t nonzero(const Row& r, std::size_t k) const {
    std::uint64_t m = 0;
    const std::uint8_t* b = r.data() + 64 * k;
    for (int i = 0; i < 64; ++i) m |= std::uint64_t{b[i] != 0} << i;
    return m;
  }
  void submul(Row& v, Coeff c, const Row& r, std::size_t k) const {
    const std::uint32_t s = p - c % p;  // v + s*r
    for (std::size_t j = 64 * k; j < v.size(); ++j)
      if (r[j]) v[j] = static_cast<std::uint8_t>((v[j] + s * r[j]) % p);
  }
  void scale(Row& r, Coeff c) const {
    for (auto& x : r)
      if (x) x = static_cast<std::uint8_t>((x * c) % p);
  }
};

template <class B>
class EchelonT final : public Echelon::Impl {
 public:
  EchelonT(const PrimeField& F, std::size_t ncols)
      : F_(F), n_(ncols), b_(ncols, F.characteristic()), pivot_row_(ncols, -1), pivmask_(b_.words, 0) {}

  std::size_t ncols() const override { return n_; }
  std::size_t rank() const override { return rows_.size(); }

  bool insert(const SparseVec& v) override {
    budget::check();
    auto r = to_row(v);
    reduce_row(r);
    std::int64_t lead = first_nonzero(r);
    if (lead < 0) return false;
    const Coeff lc = b_.get(r, static_cast<std::uint32_t>(lead));
    if (lc != 1) b_.scale(r, F_.inv(lc));
    pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
    pivmask_[lead >> 6] |= std::uint64_t{1} << (lead & 63);
    pivots_.push_back(static_cast<std::uint32_t>(lead));
    rows_.push_back(std::move(r));
    rref_ = false;
    return true;
  }

  SparseVec reduce(const SparseVec& v) const override {
    auto r = to_row(v);
    reduce_row(r);
    return to_sparse(r);
  }

  void back_substitute() override {
    // process rows by decreasing pivot; each row is cleared at higher pivots
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t idx : order) {
      budget::check();
      auto& r = rows_[idx];
      const std::uint32_t own = pivots_[idx];
      for (std::size_t k = own >> 6; k < b_.words; ++k) {
        std::uint64_t w = b_.nonzero(r, k) & pivmask_[k];
        if (k == (own >> 6)) w &= ~((std::uint64_t{2} << (own & 63)) - 1);
        while (w) {
          const std::uint32_t j = static_cast<std::uint32_t>(64 * k + std::countr_zero(w));
          const Coeff c = b_.get(r, j);
          b_.submul(r, c, rows_[pivot_row_[j]], k);
          w = b_.nonzero(r, k) & pivmask_[k] & ~((std::uint64_t{2} << (j & 63)) - 1);
        }
      }
    }
    rref_ = true;
  }

  std::vector<SparseVec> kernel() override {
    if (!rref_) back_substitute();
    std::vector<SparseVec> out;
    for (std::uint32_t f = 0; f < n_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      SparseVec x;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Coeff c = b_.get(rows_[i], f);
        if (c) x.emplace_back(pivots_[i], F_.neg(c));
      }
      x.emplace_back(f, 1);
      std::sort(x.begin(), x.end());
      out.push_back(std::move(x));
    }
    return out;
  }

  std::vector<std::uint32_t> pivots() const override { return pivots_; }
  SparseVec row(std::size_t i) const override { return to_sparse(rows_.at(i)); }

 private:
  typename B::Row to_row(const SparseVec& v) const {
    auto r = b_.zero();
    for (const auto& [j, c] : v) {
      if (j >= n_) throw DomainError("sparse vector column out of range");
      b_.set(r, j, F_.add(b_.get(r, j), c % F_.characteristic()));
    }
    return r;
  }

  SparseVec to_sparse(const typename B::Row& r) const {
    SparseVec out;
    for (std::size_t k = 0; k < b_.words; ++k) {
      std::uint64_t w = b_.nonzero(r, k);
      while (w) {
        const std::uint32_t j = static_cast<std::uint32_t>(64 * k + std::countr_zero(w));
        out.emplace_back(j, b_.get(r, j));
        w &= w - 1;
      }
    }
    return out;
  }

  void reduce_row(typename B::Row& r) const {
    for (std::size_t k = 0; k < b_.words; ++k) {
      std::uint64_t w = b_.nonzero(r, k) & pivmask_[k];
      while (w) {
        const std::uint32_t j = static_cast<std::uint32_t>(64 * k + std::countr_zero(w));
        b_.submul(r, b_.get(r, j), rows_[pivot_row_[j]], k);
        w = b_.nonzero(r, k) & pivmask_[k];
      }
    }
  }

  std::int64_t first_nonzero(const typename B::Row& r) const {
    for (std::size_t k = 0; k < b_.words; ++k) {
      std::uint64_t w = b_.nonzero(r, k);
      if (w) return static_cast<std::int64_t>(64 * k + std::countr_zero(w));
    }
    return -1;
  }

  PrimeField F_;
  std::size_t n_;
  B b_;
  std::vector<typename B::Row> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<std::uint64_t> pivmask_;
  bool rref_ = false;
};

}  // namespace

Echelon::Echelon(const PrimeField& field, std::size_t ncols) {
  switch (field.characteristic()) {
    case 2:
      impl_ = std::make_unique<EchelonT<Gf2>>(field, ncols);
      break;
    case 3:
      impl_ = std::make_unique<EchelonT<Gf3>>(field, ncols);
      break;
    default:
      impl_ = std::make_unique<EchelonT<GfP>>(field, ncols);
  }
}

Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

std::size_t Echelon::ncols() const noexcept { return impl_->ncols(); }
std::size_t Echelon::rank() const noexcept { return impl_->rank(); }
bool Echelon::insert(const SparseVec& v) { return impl_->insert(v); }
SparseVec Echelon::reduce(const SparseVec& v) const { return impl_->reduce(v); }
void Echelon::back_substitute() { impl_->back_substitute(); }
std::vector<SparseVec> Echelon::kernel() { return impl_->kernel(); }
std::vector<std::uint32_t> Echelon::pivots() const { return impl_->pivots(); }
SparseVec Echelon::row(std::size_t i) const { return impl_->row(i); }

std::size_t rank_of(const PrimeField& field, std::size_t ncols, const std::vector<SparseVec>& rows) {
  Echelon e(field, ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace cansyz
