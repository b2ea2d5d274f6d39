#include "cansyz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace cansyz {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() &&
      (a.ring()->names() != b.ring()->names() || !(a.ring()->field() == b.ring()->field())))
    throw DomainError("polynomials from different rings");
}

const RingPtr& pick_ring(const Polynomial& a, const Polynomial& b) { return a.ring() ? a.ring() : b.ring(); }

// a + s*b for sorted term lists.
std::vector<Term> axpy(const PolyRing& R, const std::vector<Term>& a, Coeff s, const std::vector<Term>& b) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : R.cmp(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      t.c = F.mul(t.c, s);
      out.push_back(t);
    } else {
      Coeff v = F.add(a[i].c, F.mul(s, b[j].c));
      if (v) out.push_back({a[i].m, v, 0});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const PolyRing& R = *ring_;
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
  for (auto& t : terms) {
    t.comp = 0;
    t.c %= R.field().characteristic();
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c = R.field().add(terms_.back().c, t.c);
      if (terms_.back().c == 0) terms_.pop_back();
    } else if (t.c) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) { return monomial(std::move(ring), Monomial::one(), c); }

Polynomial Polynomial::variable(RingPtr ring, int i) { return monomial(std::move(ring), Monomial::var(i), 1); }

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->field().characteristic();
  if (c) p.terms_.push_back({m, c, 0});
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : ring_->degree(terms_.front().m); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& t : terms_)
    if (ring_->degree(t.m) != d) return false;
  return true;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

Polynomial Polynomial::operator-() const { return scaled(ring_ ? ring_->field().neg(1) : 0); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return Polynomial::from_sorted(a.ring(), axpy(*a.ring(), a.terms(), 1, b.terms()));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return a;
  const RingPtr& R = pick_ring(a, b);
  return Polynomial::from_sorted(R, axpy(*R, a.terms(), R->field().neg(1), b.terms()));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const RingPtr& R = pick_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(R);
  const PrimeField& F = R->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Coeff& slot = acc[s.m * t.m];
      slot = F.add(slot, F.mul(s.c, t.c));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, c, 0});
  return Polynomial(R, std::move(terms));
}

Polynomial Polynomial::scaled(Coeff c) const {
  if (!ring_) return *this;
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.c = ring_->field().mul(x.c, c);
  return from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  if (!ring_) return *this;
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) {
    x.m = x.m * m;
    x.c = ring_->field().mul(x.c, c);
  }
  return from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::part(int d) const {
  std::vector<Term> t;
  for (const auto& x : terms_)
    if (ring_->degree(x.m) == d) t.push_back(x);
  return from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (ring_ && other->names() != ring_->names()) throw DomainError("in_ring: variable lists differ");
  return Polynomial(std::move(other), terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].c != b.terms_[i].c || !(a.terms_[i].m == b.terms_[i].m)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const std::uint32_t p = ring_->field().characteristic();
  std::string s;
  for (const auto& t : terms_) {
    bool negative = p > 2 && t.c > p / 2;
    Coeff mag = negative ? p - t.c : t.c;
    if (negative)
      s += '-';
    else if (!s.empty())
      s += '+';
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->name(i);
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty())
      s += std::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += std::to_string(mag) + "*" + mono;
  }
  return s;
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, int line) {
  const PrimeField& F = ring->field();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Polynomial {
    throw ParseError(why + " at column " + std::to_string(pos + 1) + " in '" + text + "'", line);
  };
  auto read_int = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (1ULL << 40)) fail("integer too large");
      ++pos;
    }
    if (pos == start) fail("expected integer");
    return v;
  };
  auto read_var = [&]() -> int {
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < ring->nvars(); ++i) {
      const std::string& n = ring->name(i);
      if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
        best = i;
        best_len = n.size();
      }
    }
    if (best < 0) fail("unknown variable");
    pos += best_len;
    if (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("unknown variable");
    return best;
  };

  std::vector<Term> terms;
  skip();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Coeff c = 1;
    Monomial m;
    bool any = false;
    while (true) {
      skip();
      if (pos == text.size()) break;
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = F.mul(c, F.reduce(static_cast<std::int64_t>(read_int())));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        int v = read_var();
        std::uint64_t power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          power = read_int();
        }
        if (power + m.e[v] > kMaxExponent) fail("exponent overflow");
        m.set(v, m.e[v] + static_cast<std::uint32_t>(power));
        any = true;
      } else if (ch == '*') {
        if (!any) fail("dangling *");
        ++pos;
        continue;
      } else {
        break;
      }
    }
    if (!any) fail("expected a term");
    if (negative) c = F.neg(c);
    terms.push_back({m, c, 0});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial random_form(int d, const RingPtr& ring, Rng& rng) {
  if (d < 0) throw DomainError("random_form: negative degree");
  std::vector<Term> terms;
  for (const auto& m : ring->monomials_of_degree(d)) {
    Coeff c = ring->field().random(rng);
    if (c) terms.push_back({m, c, 0});
  }
  return Polynomial::from_sorted(ring, std::move(terms));
}

Polynomial derivative(const Polynomial& f, int var) {
  const PrimeField& F = f.ring()->field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.m.e[var];
    Coeff c = F.mul(t.c, F.reduce(e));
    if (c == 0) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    terms.push_back({m, c, 0});
  }
  return Polynomial(f.ring(), std::move(terms));
}

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (int i = 0; i < f.ring()->nvars(); ++i) out.push_back(derivative(f, i));
  return out;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
  if (static_cast<int>(images.size()) != f.ring()->nvars()) throw DomainError("substitute: wrong image count");
  Polynomial result(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.c);
    for (int v = 0; v < f.ring()->nvars(); ++v)
      if (t.m.e[v]) term = term * power(v, t.m.e[v]);
    result += term;
  }
  return result;
}

namespace {
Polynomial nf_impl(const Polynomial& f, const std::vector<Polynomial>& G, std::vector<Polynomial>* quotients) {
  const RingPtr& R = f.ring();
  const PrimeField& F = R->field();
  if (quotients) quotients->assign(G.size(), Polynomial(R));
  std::vector<Term> rest;
  std::vector<Term> h = f.terms();
  std::vector<std::vector<Term>> q(G.size());
  std::size_t start = 0;
  while (start < h.size()) {
    const Term t = h[start];
    std::size_t k = 0;
    for (; k < G.size(); ++k)
      if (divides(G[k].lead_monomial(), t.m)) break;
    if (k == G.size()) {
      rest.push_back(t);
      ++start;
      continue;
    }
    const Monomial mult = t.m / G[k].lead_monomial();
    const Coeff c = F.div(t.c, G[k].lead_coeff());
    if (quotients) q[k].push_back({mult, c, 0});
    std::vector<Term> shifted;
    shifted.reserve(G[k].size());
    for (const auto& g : G[k].terms()) shifted.push_back({g.m * mult, g.c, 0});
    std::vector<Term> tail(h.begin() + static_cast<std::ptrdiff_t>(start), h.end());
    h = axpy(*R, tail, F.neg(c), shifted);
    start = 0;
  }
  if (quotients)
    for (std::size_t k = 0; k < G.size(); ++k) (*quotients)[k] = Polynomial(R, std::move(q[k]));
  return Polynomial::from_sorted(R, std::move(rest));
}
}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) { return nf_impl(f, G, nullptr); }

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, std::vector<Polynomial>& quotients) {
  return nf_impl(f, G, &quotients);
}

}  // namespace cansyz
