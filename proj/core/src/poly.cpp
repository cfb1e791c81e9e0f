#include "g2t/poly.hpp"

#include <algorithm>
#include <map>

#include "g2t/intutil.hpp"
#include "g2t/rng.hpp"
#include "detail.hpp"

namespace g2t {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_ints(Field k, const std::vector<int64_t>& c) {
  std::vector<Fe> v;
  v.reserve(c.size());
  for (int64_t x : c) v.push_back(k->from_int(x));
  return Poly(k, std::move(v));
}

Poly Poly::x(Field k) { return from_ints(k, {0, 1}); }

Fe Poly::lc() const {
  G2T_CHECK(!c_.empty(), "lc of zero polynomial");
  return c_.back();
}

Fe Poly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return k_->zero();
  return c_[size_t(i)];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), k_->zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
  return Poly(k_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), k_->zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
  return Poly(k_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Fe> r(c_);
  for (auto& x : r) x = -x;
  return Poly(k_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(k_);
  std::vector<Fe> r(c_.size() + o.c_.size() - 1, k_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return Poly(k_, std::move(r));
}

Poly Poly::scaled(const Fe& c) const {
  std::vector<Fe> r(c_);
  for (auto& x : r) x = x * c;
  return Poly(k_, std::move(r));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  G2T_CHECK(k >= 0, "negative shift");
  std::vector<Fe> r(c_.size() + size_t(k), k_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i + size_t(k)] = c_[i];
  return Poly(k_, std::move(r));
}

Poly Poly::monic() const {
  G2T_CHECK(!is_zero(), "monic of zero polynomial");
  if (lc().is_one()) return *this;
  return scaled(lc().inv());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(Err::DivideByZero, "polynomial division by zero");
  Poly r = *this;
  if (r.deg() < d.deg()) return {Poly(k_), r};
  Fe ilc = d.lc().inv();
  std::vector<Fe> q(size_t(r.deg() - d.deg() + 1), k_->zero());
  while (r.deg() >= d.deg()) {
    int sh = r.deg() - d.deg();
    Fe c = r.lc() * ilc;
    q[size_t(sh)] = c;
    r = r - d.scaled(c).shifted(sh);
  }
  return {Poly(k_, std::move(q)), r};
}

Poly Poly::operator/(const Poly& d) const { return divmod(d).first; }
Poly Poly::operator%(const Poly& d) const { return divmod(d).second; }

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  G2T_CHECK(r.is_zero(), "exact_div: nonzero remainder");
  return q;
}

Fe Poly::eval(const Fe& x) const {
  Fe acc = k_->zero();
  for (int i = deg(); i >= 0; --i) acc = acc * x + c_[size_t(i)];
  return acc;
}

Poly Poly::derivative() const {
  if (deg() < 1) return Poly(k_);
  std::vector<Fe> r(c_.size() - 1, k_->zero());
  for (size_t i = 1; i < c_.size(); ++i) {
    r[i - 1] = c_[i] * k_->from_int(int64_t(i));
  }
  return Poly(k_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (int i = 0; i <= a.deg(); ++i) {
    const Fe &x = a.c_[size_t(i)], &y = b.c_[size_t(i)];
    if (x < y) return -1;
    if (y < x) return 1;
  }
  return 0;
}

Poly Poly::gcd(Poly a, Poly b) {
  G2T_CHECK(!(a.is_zero() && b.is_zero()), "gcd(0, 0)");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::egcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
  Field k = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::from_ints(k, {1}), u1 = Poly(k);
  Poly v0 = Poly(k), v1 = Poly::from_ints(k, {1});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  G2T_CHECK(!r0.is_zero(), "egcd(0, 0)");
  Fe s = r0.lc().inv();
  u = u0.scaled(s);
  v = v0.scaled(s);
  return r0.scaled(s);
}

Poly Poly::powmod(Poly base, uint64_t e, const Poly& mod) {
  Poly acc = Poly::from_ints(mod.field(), {1});
  base = base % mod;
  while (e) {
    if (e & 1) acc = (acc * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return acc;
}

Poly Poly::frobmod(Poly base, uint32_t j, const Poly& mod) {
  Poly cur = base % mod;
  for (uint32_t i = 0; i < j; ++i) cur = powmod(cur, mod.field()->q(), mod);
  return cur;
}

bool Poly::is_squarefree() const {
  if (deg() <= 0) return !is_zero();
  Poly d = derivative();
  if (d.is_zero()) return false;  // p-th power
  return gcd(*this, d).deg() == 0;
}

bool Poly::is_irreducible() const {
  int n = deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  Poly f = monic();
  Poly xp = Poly::x(k_);
  auto frob_tower = [&](uint32_t j) { return frobmod(xp, j, f); };
  for (auto [r, e] : factor64(uint64_t(n))) {
    (void)e;
    Poly h = frob_tower(uint32_t(n / r)) - xp;
    if (h.is_zero()) return false;
    if (gcd(f, h).deg() != 0) return false;
  }
  return (frob_tower(uint32_t(n)) - xp).is_zero();
}

std::vector<std::pair<int, Poly>> Poly::distinct_degree_factors() const {
  if (deg() < 1) fail(Err::InvalidArgument, "ddf: degree must be positive");
  Poly f = monic();
  if (!f.is_squarefree()) fail(Err::NotSquarefree, "ddf: input must be squarefree");
  std::vector<std::pair<int, Poly>> out;
  Poly h = Poly::x(k_);
  Poly xp = h;
  int d = 0;
  while (f.deg() > 0) {
    ++d;
    if (2 * d > f.deg()) {
      out.emplace_back(f.deg(), f);
      break;
    }
    h = powmod(h, k_->q(), f);
    Poly g = gcd(f, h - xp);
    if (g.deg() > 0) {
      out.emplace_back(d, g);
      f = f.exact_div(g);
      h = h % f;
    }
  }
  return out;
}

namespace {

// Equal-degree splitting of a squarefree monic product of degree-d
// irreducibles, odd characteristic.  Deterministic: fixed-seed randomness and
// canonically sorted output.
void edf_split(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  Field k = g.field();
  unsigned __int128 qd = 1;
  for (int i = 0; i < d; ++i) {
    qd *= k->q();
    if (qd > ((unsigned __int128)1 << 62))
      fail(Err::ExceedsCap, "equal-degree splitting: field power too large");
  }
  uint64_t e = (uint64_t(qd) - 1) / 2;
  for (;;) {
    std::vector<Fe> rc(size_t(g.deg()), k->zero());
    for (auto& c : rc) c = k->element_at(rng.below(k->q()));
    Poly r(k, std::move(rc));
    if (r.deg() < 1) continue;
    Poly s = Poly::powmod(r, e, g) - Poly::from_ints(k, {1});
    if (s.is_zero()) continue;
    Poly h = Poly::gcd(g, s);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      edf_split(h, d, rng, out);
      edf_split(g.exact_div(h), d, rng, out);
      return;
    }
  }
}

// p-th root of a polynomial whose only nonzero terms are at exponents
// divisible by p.  Coefficient roots are Frobenius preimages.
Poly pth_root(const Poly& f) {
  Field k = f.field();
  uint64_t p = k->p();
  std::vector<Fe> r;
  for (int i = 0; i <= f.deg(); i += int(p)) {
    G2T_CHECK(i % int(p) == 0, "pth_root: bad support");
    r.push_back(f.coeff(i).frob(k->a() - 1));
  }
  for (int i = 0; i <= f.deg(); ++i)
    G2T_CHECK(i % int(p) == 0 || f.coeff(i).is_zero(), "pth_root: bad support");
  return Poly(k, std::move(r));
}

void squarefree_parts(const Poly& f, int mult,
                      std::vector<std::pair<Poly, int>>& parts) {
  Field k = f.field();
  if (f.deg() < 1) return;
  Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree_parts(pth_root(f), mult * int(k->p()), parts);
    return;
  }
  Poly c = Poly::gcd(f, df);
  Poly w = f.exact_div(c);
  int i = 1;
  while (w.deg() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly z = w.exact_div(y);
    if (z.deg() > 0) parts.emplace_back(z, mult * i);
    w = std::move(y);
    c = c.exact_div(w);
    ++i;
  }
  if (c.deg() > 0) squarefree_parts(pth_root(c), mult * int(k->p()), parts);
}

}  // namespace

std::vector<std::pair<Poly, int>> Poly::factor() const {
  G2T_CHECK(deg() >= 0, "factor of zero polynomial");
  if (k_->p() == 2 && deg() > 1)
    fail(Err::Unimplemented, "factorization in characteristic 2");
  std::vector<std::pair<Poly, int>> out;
  if (deg() < 1) return out;
  Poly f = monic();
  std::vector<std::pair<Poly, int>> parts;
  squarefree_parts(f, 1, parts);
  Rng rng(0x5eed5eedULL);
  for (auto& [part, mult] : parts) {
    for (auto& [d, block] : part.distinct_degree_factors()) {
      std::vector<Poly> irr;
      edf_split(block, d, rng, irr);
      for (auto& g : irr) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return Poly::cmp(a.first, b.first) < 0;
  });
  return out;
}

std::vector<std::pair<Fe, int>> Poly::roots() const {
  if (k_->q() > (uint64_t(1) << 20))
    fail(Err::FieldTooLarge, "exhaustive root scan capped at 2^20 elements");
  G2T_CHECK(!is_zero(), "roots of zero polynomial");
  std::vector<std::pair<Fe, int>> out;
  Poly f = *this;
  for (uint64_t idx = 0; idx < k_->q(); ++idx) {
    Fe r = k_->element_at(idx);
    if (!eval(r).is_zero()) continue;
    int m = 0;
    Poly lin = Poly(k_, {-r, k_->one()});
    for (;;) {
      auto [q, rem] = f.divmod(lin);
      if (!rem.is_zero()) break;
      f = q;
      ++m;
    }
    out.emplace_back(r, m);
  }
  return out;
}

std::vector<Fe> Poly::roots_any_size() const {
  G2T_CHECK(deg() >= 0, "roots of zero polynomial");
  if (k_->p() == 2) fail(Err::Unimplemented, "root splitting in characteristic 2");
  Poly f = monic();
  // Linear-factor part: gcd(f, x^q - x).
  Poly xp = Poly::x(k_);
  Poly xq = frobmod(xp, 1, f);
  Poly lin = f.deg() > 0 ? gcd(f, xq - xp) : Poly::from_ints(k_, {1});
  std::vector<Fe> out;
  if (lin.deg() < 1) return out;
  std::vector<Poly> factors;
  Rng rng(0x5eed0001ULL);
  edf_split(lin, 1, rng, factors);
  for (auto& g : factors) out.push_back(-g.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t Poly::order_of_x() const {
  G2T_CHECK(deg() >= 1 && !coeff(0).is_zero(), "order_of_x: x must be a unit");
  unsigned __int128 qd = 1;
  for (int i = 0; i < deg(); ++i) {
    qd *= k_->q();
    if (qd > ((unsigned __int128)1 << 62))
      fail(Err::ExceedsCap, "order_of_x: group order too large");
  }
  uint64_t n = uint64_t(qd) - 1;
  Poly f = monic();
  Poly one = Poly::from_ints(k_, {1});
  Poly xp = Poly::x(k_);
  uint64_t e = n;
  for (auto [pr, ex] : factor64(n)) {
    (void)ex;
    while (e % pr == 0 && powmod(xp, e / pr, f) == one) e /= pr;
  }
  G2T_CHECK(powmod(xp, e, f) == one, "order_of_x: not an order");
  return e;
}

namespace detail {

std::vector<Fe> roots_in_field(const std::vector<uint32_t>& poly, Field K) {
  std::vector<Fe> c;
  c.reserve(poly.size());
  for (uint32_t v : poly) c.push_back(K->from_int(int64_t(v)));
  return Poly(K, std::move(c)).roots_any_size();
}

}  // namespace detail

}  // namespace g2t
