#include "g2t/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "g2t/intutil.hpp"
#include "detail.hpp"

namespace g2t {

// ---------------------------------------------------------------------------
// Dense polynomials over F_p on raw uint32 vectors.  Only used to find the
// canonical modulus; element arithmetic below works on fixed arrays instead.

namespace {

using PV = std::vector<uint32_t>;

int pv_deg(const PV& f) {
  int d = int(f.size()) - 1;
  while (d >= 0 && f[d] == 0) --d;
  return d;
}

PV pv_mul(const PV& f, const PV& g, uint64_t p) {
  if (f.empty() || g.empty()) return {};
  PV r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      r[i + j] = uint32_t((r[i + j] + uint64_t(f[i]) * g[j]) % p);
    }
  }
  return r;
}

// f mod m, m monic.
PV pv_mod(PV f, const PV& m, uint64_t p) {
  int dm = pv_deg(m);
  for (int d = pv_deg(f); d >= dm; d = pv_deg(f)) {
    uint64_t c = f[d];
    f[d] = 0;
    for (int i = 0; i < dm; ++i) {
      f[d - dm + i] =
          uint32_t((f[d - dm + i] + (p - m[i]) % p * c) % p);
    }
  }
  return f;
}

PV pv_powmod(PV base, uint64_t e, const PV& m, uint64_t p) {
  PV acc{1};
  base = pv_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) acc = pv_mod(pv_mul(acc, base, p), m, p);
    base = pv_mod(pv_mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

PV pv_gcd(PV f, PV g, uint64_t p) {
  while (pv_deg(g) >= 0) {
    // Scale g monic so pv_mod applies.
    int dg = pv_deg(g);
    uint64_t lc = g[dg];
    if (lc != 1) {
      uint64_t ilc = powmod64(lc, p - 2, p);
      for (auto& c : g) c = uint32_t(c * ilc % p);
    }
    PV r = pv_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Rabin irreducibility: monic f of degree a over F_p is irreducible iff
// x^(p^a) = x mod f and gcd(x^(p^(a/r)) - x, f) = 1 for every prime r | a.
bool pv_irreducible(const PV& f, uint64_t p) {
  int a = pv_deg(f);
  if (a == 1) return true;
  PV x{0, 1};
  // x^(p^k) by iterating k single-p powers keeps exponents inside uint64.
  auto frob_iter = [&](int k) {
    PV cur = x;
    for (int i = 0; i < k; ++i) cur = pv_powmod(cur, p, f, p);
    return cur;
  };
  for (auto [r, e] : factor64(uint64_t(a))) {
    (void)e;
    PV h = frob_iter(int(a / r));
    if (h.size() < 2) h.resize(2, 0);
    h[1] = uint32_t((h[1] + p - 1) % p);
    if (pv_deg(pv_gcd(f, h, p)) != 0) return false;
  }
  PV h = frob_iter(a);
  if (h.size() < 2) h.resize(2, 0);
  h[1] = uint32_t((h[1] + p - 1) % p);
  return pv_deg(h) < 0;
}

std::mutex g_registry_mutex;
std::map<std::pair<uint64_t, uint32_t>, std::unique_ptr<FieldCtx>>& registry() {
  static std::map<std::pair<uint64_t, uint32_t>, std::unique_ptr<FieldCtx>> r;
  return r;
}

std::map<std::pair<Field, Field>, Fe>& embed_registry() {
  static std::map<std::pair<Field, Field>, Fe> r;
  return r;
}

}  // namespace

FieldCtx::FieldCtx(uint64_t p, uint32_t a) : p_(p), a_(a) {
  q_ = 1;
  for (uint32_t i = 0; i < a; ++i) q_ *= p;
  if (a == 1) {
    mod_ = {0, 1};
  } else {
    // Odometer over (c0..c_{a-1}), c_{a-1} fastest, i.e. lexicographic order
    // on tuples with c0 most significant.  First irreducible wins.
    PV f(a + 1, 0);
    f[a] = 1;
    std::vector<uint32_t> tup(a, 0);
    for (;;) {
      for (uint32_t i = 0; i < a; ++i) f[i] = tup[i];
      if (f[0] != 0 && pv_irreducible(f, p)) break;
      int i = int(a) - 1;
      while (i >= 0 && tup[i] == p - 1) tup[i--] = 0;
      G2T_CHECK(i >= 0, "no irreducible polynomial found");
      tup[i]++;
    }
    mod_.assign(f.begin(), f.end());
  }
  uint64_t t = q_ - 1;
  two_val_ = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++two_val_;
  }
  odd_part_ = t;
}

Field FieldCtx::get(uint64_t p, uint32_t a) {
  if (a < 1 || a > kMaxFieldDeg)
    fail(Err::InvalidArgument, "field degree out of range");
  if (!is_prime64(p)) fail(Err::InvalidArgument, "field characteristic not prime");
  // Overflow-safe size cap check.
  long double est = 1.0L;
  for (uint32_t i = 0; i < a; ++i) est *= (long double)p;
  if (est >= (long double)kMaxFieldSize)
    fail(Err::FieldTooLarge, "field size cap is 2^31");
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, a);
  auto it = registry().find(key);
  if (it == registry().end())
    it = registry().emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, a))).first;
  return it->second.get();
}

Fe FieldCtx::zero() const {
  std::array<uint32_t, kMaxFieldDeg> c{};
  return Fe(this, c);
}

Fe FieldCtx::one() const { return from_int(1); }

Fe FieldCtx::from_int(int64_t v) const {
  std::array<uint32_t, kMaxFieldDeg> c{};
  int64_t r = v % int64_t(p_);
  if (r < 0) r += int64_t(p_);
  c[0] = uint32_t(r);
  return Fe(this, c);
}

Fe FieldCtx::from_coeffs(const std::vector<uint32_t>& v) const {
  if (v.size() > a_) fail(Err::InvalidArgument, "too many coefficients");
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= p_) fail(Err::InvalidArgument, "coefficient out of range");
    c[i] = v[i];
  }
  return Fe(this, c);
}

Fe FieldCtx::gen() const {
  std::array<uint32_t, kMaxFieldDeg> c{};
  if (a_ >= 2) c[1] = 1;
  return Fe(this, c);
}

Fe FieldCtx::element_at(uint64_t idx) const {
  G2T_CHECK(idx < q_, "element index out of range");
  std::array<uint32_t, kMaxFieldDeg> c{};
  for (int i = int(a_) - 1; i >= 0; --i) {
    c[i] = uint32_t(idx % p_);
    idx /= p_;
  }
  return Fe(this, c);
}

uint64_t Fe::index() const {
  uint64_t idx = 0;
  for (uint32_t i = 0; i < k_->a(); ++i) idx = idx * k_->p() + c_[i];
  return idx;
}

Fe FieldCtx::nonresidue() const {
  if (p_ == 2) fail(Err::Unimplemented, "non-residue undefined in characteristic 2");
  if (!nonres_ready_) {
    for (uint64_t idx = 1; idx < q_; ++idx) {
      Fe e = element_at(idx);
      if (e.legendre() == -1) {
        nonres_ = e.c_;
        nonres_ready_ = true;
        break;
      }
    }
    G2T_CHECK(nonres_ready_, "no quadratic non-residue found");
  }
  return Fe(this, nonres_);
}

bool FieldCtx::is_subfield_of(Field big) const {
  return big->p() == p_ && big->a() % a_ == 0;
}

Fe FieldCtx::embed(const Fe& x, Field big) const {
  G2T_CHECK(x.field() == this, "embed: element from another field");
  if (big == this) return x;
  if (!is_subfield_of(big)) fail(Err::NoSubfield, "no subfield embedding");
  if (a_ == 1) return big->from_int(int64_t(x.coeff(0)));
  Fe gamma;
  {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = embed_registry().find({this, big});
    if (it != embed_registry().end()) gamma = it->second;
  }
  if (gamma.field() == nullptr) {
    auto roots = detail::roots_in_field(mod_, big);
    G2T_CHECK(roots.size() == a_, "modulus must split in the extension");
    gamma = *std::min_element(roots.begin(), roots.end());
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    embed_registry().emplace(std::make_pair(this, big), gamma);
  }
  // Horner over the big field.
  Fe acc = big->zero();
  for (int i = int(a_) - 1; i >= 0; --i)
    acc = acc * gamma + big->from_int(int64_t(x.coeff(i)));
  return acc;
}

// ---------------------------------------------------------------------------
// Element arithmetic.

bool Fe::is_zero() const {
  for (uint32_t i = 0; i < k_->a(); ++i)
    if (c_[i]) return false;
  return true;
}

bool Fe::is_one() const {
  if (c_[0] != 1) return false;
  for (uint32_t i = 1; i < k_->a(); ++i)
    if (c_[i]) return false;
  return true;
}

Fe Fe::operator+(const Fe& o) const {
  G2T_CHECK(k_ == o.k_, "field mismatch");
  Fe r(k_, c_);
  uint64_t p = k_->p();
  for (uint32_t i = 0; i < k_->a(); ++i) r.c_[i] = uint32_t((uint64_t(c_[i]) + o.c_[i]) % p);
  return r;
}

Fe Fe::operator-(const Fe& o) const {
  G2T_CHECK(k_ == o.k_, "field mismatch");
  Fe r(k_, c_);
  uint64_t p = k_->p();
  for (uint32_t i = 0; i < k_->a(); ++i)
    r.c_[i] = uint32_t((uint64_t(c_[i]) + p - o.c_[i]) % p);
  return r;
}

Fe Fe::operator-() const {
  Fe r(k_, c_);
  uint64_t p = k_->p();
  for (uint32_t i = 0; i < k_->a(); ++i) r.c_[i] = uint32_t((p - c_[i]) % p);
  return r;
}

Fe Fe::operator*(const Fe& o) const {
  G2T_CHECK(k_ == o.k_, "field mismatch");
  uint64_t p = k_->p();
  uint32_t a = k_->a();
  if (a == 1) {
    Fe r(k_, {});
    r.c_.fill(0);
    r.c_[0] = uint32_t(uint64_t(c_[0]) * o.c_[0] % p);
    return r;
  }
  // Schoolbook product then reduction by the monic modulus.  Products are
  // reduced per term, so sums of at most 2a terms stay far below 2^64.
  std::array<uint64_t, 2 * kMaxFieldDeg> t{};
  for (uint32_t i = 0; i < a; ++i) {
    if (!c_[i]) continue;
    for (uint32_t j = 0; j < a; ++j) {
      t[i + j] += uint64_t(c_[i]) * o.c_[j] % p;
    }
  }
  const auto& m = k_->modulus();
  for (int d = int(2 * a) - 2; d >= int(a); --d) {
    uint64_t cc = t[d] % p;
    if (!cc) continue;
    t[d] = 0;
    for (uint32_t i = 0; i < a; ++i) {
      t[d - a + i] += (p - m[i]) % p * cc % p;
    }
  }
  Fe r(k_, {});
  r.c_.fill(0);
  for (uint32_t i = 0; i < a; ++i) r.c_[i] = uint32_t(t[i] % p);
  return r;
}

Fe Fe::inv() const {
  if (is_zero()) fail(Err::DivideByZero, "inverse of zero");
  uint64_t p = k_->p();
  uint32_t a = k_->a();
  if (a == 1) {
    Fe r = *this;
    r.c_[0] = uint32_t(powmod64(c_[0], p - 2, p));
    return r;
  }
  // Extended Euclid in F_p[x] against the modulus.
  PV u(c_.begin(), c_.begin() + a);
  PV v(k_->modulus());
  PV x1{1}, x2{};
  auto scaled_sub = [&](PV& f, const PV& g, uint64_t c, int shift) {
    // f -= c * x^shift * g
    if (f.size() < g.size() + shift) f.resize(g.size() + shift, 0);
    for (size_t i = 0; i < g.size(); ++i) {
      f[i + shift] = uint32_t((f[i + shift] + (p - g[i] % p) % p * c) % p);
    }
  };
  while (true) {
    int du = pv_deg(u);
    G2T_CHECK(du >= 0, "inv: gcd hit zero");
    if (du == 0) break;
    int dv = pv_deg(v);
    if (du < dv) {
      std::swap(u, v);
      std::swap(x1, x2);
      continue;
    }
    uint64_t c = uint64_t(u[du]) * powmod64(v[dv], p - 2, p) % p;
    scaled_sub(u, v, c, du - dv);
    scaled_sub(x1, x2, c, du - dv);
  }
  uint64_t ic = powmod64(u[0], p - 2, p);
  Fe r(k_, {});
  r.c_.fill(0);
  x1.resize(a, 0);
  PV red = pv_mod(std::move(x1), k_->modulus(), p);
  red.resize(a, 0);
  for (uint32_t i = 0; i < a; ++i) r.c_[i] = uint32_t(uint64_t(red[i]) * ic % p);
  G2T_CHECK((r * *this).is_one(), "inv: verification failed");
  return r;
}

Fe Fe::pow(uint64_t e) const {
  Fe acc = k_->one();
  Fe b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Fe Fe::frob(uint32_t j) const {
  Fe r = *this;
  for (uint32_t i = 0; i < j; ++i) r = r.pow(k_->p());
  return r;
}

int Fe::legendre() const {
  if (is_zero()) return 0;
  Fe t = pow((k_->q() - 1) / 2);
  if (t.is_one()) return 1;
  G2T_CHECK((t + k_->one()).is_zero(), "legendre: unexpected value");
  return -1;
}

bool Fe::sqrt(Fe& out) const {
  if (k_->p() == 2) fail(Err::Unimplemented, "sqrt in characteristic 2");
  if (is_zero()) {
    out = *this;
    return true;
  }
  if (legendre() != 1) return false;
  uint64_t s = k_->two_val_;
  uint64_t t = k_->odd_part_;
  if (s == 1) {
    out = pow((k_->q() + 1) / 4);
  } else {
    Fe z = k_->nonresidue().pow(t);
    Fe x = pow((t + 1) / 2);
    Fe b = pow(t);
    uint64_t m = s;
    while (!b.is_one()) {
      Fe bb = b;
      uint64_t i = 0;
      while (!bb.is_one()) {
        bb = bb * bb;
        ++i;
        G2T_CHECK(i < m, "sqrt: element is not a residue");
      }
      Fe e = z;
      for (uint64_t j = 0; j + i + 1 < m; ++j) e = e * e;
      x = x * e;
      z = e * e;
      b = b * z;
      m = i;
    }
    out = x;
  }
  G2T_CHECK((out * out) == *this, "sqrt: verification failed");
  return true;
}

bool Fe::operator<(const Fe& o) const {
  G2T_CHECK(k_ == o.k_, "field mismatch");
  for (uint32_t i = 0; i < k_->a(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::vector<uint32_t> Fe::coeffs() const {
  return std::vector<uint32_t>(c_.begin(), c_.begin() + k_->a());
}

size_t Fe::hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (uint32_t i = 0; i < k_->a(); ++i) {
    h ^= c_[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return size_t(h);
}

}  // namespace g2t
