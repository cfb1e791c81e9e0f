#include "g2t/jacobian.hpp"

#include <algorithm>

#include "g2t/intutil.hpp"

namespace g2t {

namespace {

Poly map_coeffs(const Poly& g, Field k, uint32_t j) {
  std::vector<Fe> cc;
  cc.reserve(size_t(g.deg()) + 1);
  for (int i = 0; i <= g.deg(); ++i) cc.push_back(g.coeff(i).frob(j));
  return Poly(k, std::move(cc));
}

}  // namespace

size_t DivHash::operator()(const Div& d) const {
  size_t h = 0x9e3779b97f4a7c15ull ^ size_t(d.n + 1);
  for (int i = 0; i <= d.u.deg(); ++i) h = h * 0x100000001b3ull ^ d.u.coeff(i).hash();
  h ^= 0xdeadbeefcafef00dull;
  for (int i = 0; i <= d.v.deg(); ++i) h = h * 0x100000001b3ull ^ d.v.coeff(i).hash();
  return h;
}

JacCtx::JacCtx(const Curve& c) : c_(c) {
  Field k = c_.k;
  if (c_.model == Curve::Model::quintic) {
    model_ = Model::quintic;
    return;
  }
  if (sextic_is_split(c_)) {
    model_ = Model::split;
    // h+ is the cube-degree branch of sqrt(f): match coefficients of x^6..x^3.
    Fe s3;
    bool ok = c_.f.coeff(6).sqrt(s3);
    G2T_CHECK(ok, "split model leading coefficient has no square root");
    if ((-s3) < s3) s3 = -s3;  // pin the branch for run-to-run determinism
    Fe i2s3 = (k->from_int(2) * s3).inv();
    Fe s2 = c_.f.coeff(5) * i2s3;
    Fe s1 = (c_.f.coeff(4) - s2 * s2) * i2s3;
    Fe s0 = (c_.f.coeff(3) - k->from_int(2) * s2 * s1) * i2s3;
    hp_ = Poly(k, {s0, s1, s2, s3});
    fr_ = c_.f - hp_ * hp_;
    G2T_CHECK(!fr_.is_zero() && fr_.deg() <= 2, "h+ construction failed");
    return;
  }
  model_ = Model::inert;
  if (2 * k->a() > kMaxFieldDeg)
    fail(Err::FieldTooLarge, "inert model needs a quadratic extension within the degree cap");
  Field E = FieldCtx::get(k->p(), 2 * k->a());
  engine_ = make(base_change(c_, E));
  G2T_CHECK(engine_->model_ == Model::split, "sextic must split over the quadratic extension");
  for (uint64_t i = 0; i < k->q(); ++i)
    descend_[k->embed(k->element_at(i), E).index()] = i;
}

Jac JacCtx::make(const Curve& c) { return Jac(new JacCtx(c)); }

const Poly& JacCtx::hplus() const {
  if (model_ != Model::split)
    fail(Err::ModelUnsupported, "h+ exists on the split model only");
  return hp_;
}

Div JacCtx::identity() const {
  Poly one = Poly::from_ints(c_.k, {1});
  return Div{one, Poly(c_.k), model_ == Model::split ? 1 : 0};
}

bool JacCtx::is_identity(const Div& d) const {
  return d.u.deg() == 0 && (model_ != Model::split || d.n == 1);
}

bool JacCtx::on_jacobian(const Poly& u, const Poly& v, int n) const {
  if (u.field() != c_.k || v.field() != c_.k) return false;
  if (u.is_zero() || !u.lc().is_one()) return false;
  int du = u.deg();
  if (du > 2 || v.deg() >= du) return false;
  if (!((c_.f - v * v) % u).is_zero()) return false;
  switch (model_) {
    case Model::quintic:
      return n == 0;
    case Model::split:
      return 0 <= n && n <= 2 - du;
    case Model::inert:
      return n == 0 && du != 1;
  }
  return false;
}

Div JacCtx::make_div(const Poly& u, const Poly& v, int n) const {
  if (!on_jacobian(u, v, n)) fail(Err::NotOnJacobian, "not a reduced divisor class");
  return Div{u, v, n};
}

int JacCtx::eplus(const Poly& vt) const {
  if (vt == hp_) return 3 - fr_.deg();
  return -(hp_ - vt).deg();
}

Div JacCtx::reduce(Poly u, Poly v, int n_abs, AddTrace* tr) const {
  G2T_CHECK(model_ != Model::inert, "reduce runs on the engine model");
  const Poly& f = c_.f;
  bool bal = (model_ == Model::split);
  auto plus_lift = [&](const Poly& uu, const Poly& vv) { return hp_ - ((hp_ - vv) % uu); };
  auto minus_lift = [&](const Poly& uu, const Poly& vv) {
    return (-hp_) - (((-hp_) - vv) % uu);
  };
  for (int iter = 0;; ++iter) {
    G2T_CHECK(iter < 32, "reduction did not terminate");
    int du = u.deg();
    Poly vt;
    if (bal) {
      // Balanced band for n_abs is [-1, 1 - deg u]; unique landing spot.
      if (du <= 2 && -1 <= n_abs && n_abs <= 1 - du) break;
      if (du >= 3)
        vt = (n_abs <= -2) ? minus_lift(u, v) : plus_lift(u, v);
      else
        vt = (n_abs < -1) ? minus_lift(u, v) : plus_lift(u, v);
      n_abs -= eplus(vt);
    } else {
      if (du <= 2) break;
      vt = v;
    }
    Poly uh = (f - vt * vt).exact_div(u).monic();
    Poly vh = (-vt) % uh;
    n_abs -= uh.deg();
    if (tr) tr->steps.push_back({std::move(vt), uh});
    u = std::move(uh);
    v = std::move(vh);
  }
  return Div{std::move(u), std::move(v), bal ? n_abs + 1 : 0};
}

Div JacCtx::cantor(const Div& A, const Div& B, AddTrace* tr) const {
  const Poly& f = c_.f;
  Poly e1, e2;
  Poly d1 = Poly::egcd(A.u, B.u, e1, e2);
  Poly c1, c2;
  Poly d = Poly::egcd(d1, A.v + B.v, c1, c2);
  Poly s1 = c1 * e1;
  Poly s2 = c1 * e2;
  Poly u = (A.u * B.u).exact_div(d * d);
  Poly v = (s1 * A.u * B.v + s2 * B.u * A.v + c2 * (A.v * B.v + f)).exact_div(d) % u;
  G2T_CHECK(u.lc().is_one(), "composition lost monicity");
  G2T_CHECK(((f - v * v) % u).is_zero(), "composition invariant violated");
  if (tr) tr->d = d;
  int n_abs = (model_ == Model::quintic) ? 0 : (A.n - 1) + (B.n - 1) + d.deg();
  return reduce(std::move(u), std::move(v), n_abs, tr);
}

Div JacCtx::add(const Div& a, const Div& b) const {
  if (model_ == Model::inert)
    return descend_div(engine_->add(embed_div(a), embed_div(b)));
  return cantor(a, b, nullptr);
}

Div JacCtx::add_traced(const Div& a, const Div& b, AddTrace& tr) const {
  if (model_ == Model::inert)
    fail(Err::ModelUnsupported, "traces on rational classes of an inert model are not supported");
  tr.d = Poly::from_ints(c_.k, {1});
  tr.steps.clear();
  return cantor(a, b, &tr);
}

Div JacCtx::neg(const Div& a) const {
  Poly nv = (-a.v) % a.u;
  int n = (model_ == Model::split) ? 2 - a.u.deg() - a.n : 0;
  return Div{a.u, std::move(nv), n};
}

Div JacCtx::sub(const Div& a, const Div& b) const { return add(a, neg(b)); }

Div JacCtx::mul(const Div& a, const mpz_class& e) const {
  if (model_ == Model::inert) return descend_div(engine_->mul(embed_div(a), e));
  mpz_class m = e;
  Div base = a;
  if (m < 0) {
    base = neg(base);
    m = -m;
  }
  Div acc = identity();
  if (m == 0) return acc;
  size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(m.get_mpz_t(), i)) acc = add(acc, base);
    if (i + 1 < bits) base = add(base, base);
  }
  return acc;
}

mpz_class JacCtx::order(const Div& a, const mpz_class& multiple) const {
  G2T_CHECK(multiple > 0, "order needs a positive multiple");
  if (mpz_sizeinbase(multiple.get_mpz_t(), 2) > 62)
    fail(Err::ExceedsCap, "order: multiple exceeds the 64-bit cap");
  uint64_t m = mpz_get_ui(multiple.get_mpz_t());
  uint64_t ord = order_dividing(
      a, m, [&](const Div& x, const Div& y) { return add(x, y); },
      [&](const Div& x) { return is_identity(x); }, identity());
  return mpz_class(ord);
}

Div JacCtx::frobenius(const Div& d, uint32_t j) const {
  for (int i = 0; i <= c_.f.deg(); ++i)
    if (c_.f.coeff(i).frob(j) != c_.f.coeff(i))
      fail(Err::InvalidArgument, "Frobenius power does not fix the curve");
  Div out{map_coeffs(d.u, c_.k, j), map_coeffs(d.v, c_.k, j), d.n};
  // The labels of the two infinite points swap exactly when h+ moves.
  if (model_ == Model::split && hp_.lc().frob(j) != hp_.lc())
    out.n = 2 - out.u.deg() - out.n;
  return out;
}

std::vector<Poly> JacCtx::mumford_v_solutions(const Poly& u) const {
  Field k = c_.k;
  if (u.field() != k || u.is_zero() || !u.lc().is_one())
    fail(Err::InvalidArgument, "mumford_v_solutions needs a monic polynomial over the base field");
  const Poly& f = c_.f;
  std::vector<Poly> out;
  if (u.deg() == 1) {
    Fe y2 = f.eval(-u.coeff(0));
    Fe y;
    if (y2.is_zero()) {
      out.push_back(Poly(k));
    } else if (y2.sqrt(y)) {
      out.push_back(Poly(k, {y}));
      out.push_back(Poly(k, {-y}));
    }
  } else if (u.deg() == 2) {
    Fe u1 = u.coeff(1), u0 = u.coeff(0);
    Poly r = f % u;
    Fe r1 = r.coeff(1), r0 = r.coeff(0);
    Fe two = k->from_int(2), four = k->from_int(4);
    if (r1.is_zero()) {
      // v = v0 constant: v0^2 = r0.
      Fe v0;
      if (r0.is_zero())
        out.push_back(Poly(k));
      else if (r0.sqrt(v0)) {
        out.push_back(Poly(k, {v0}));
        out.push_back(Poly(k, {-v0}));
      }
    }
    // v = v1 x + v0 with v1 != 0: w = v1^2 solves A w^2 + B w + C = 0.
    Fe A = u1 * u1 - four * u0;
    Fe B = two * r1 * u1 - four * r0;
    Fe C = r1 * r1;
    G2T_CHECK(!(A.is_zero() && B.is_zero() && r1.is_zero() && r0.is_zero()),
              "squarefree f cannot be divisible by a square");
    std::vector<Fe> ws;
    if (A.is_zero()) {
      if (!B.is_zero()) ws.push_back(-C * B.inv());
    } else {
      Fe disc = B * B - four * A * C;
      Fe sd;
      if (disc.is_zero())
        ws.push_back(-B * (two * A).inv());
      else if (disc.sqrt(sd)) {
        Fe i2a = (two * A).inv();
        ws.push_back((-B + sd) * i2a);
        ws.push_back((-B - sd) * i2a);
      }
    }
    for (const Fe& w : ws) {
      if (w.is_zero()) continue;  // v1 = 0 is the constant branch above
      Fe s;
      if (!w.sqrt(s)) continue;
      for (Fe v1 : {s, -s}) {
        Fe v0 = (r1 + u1 * w) * (two * v1).inv();
        out.push_back(Poly(k, {v0, v1}));
      }
    }
  } else {
    fail(Err::InvalidArgument, "mumford_v_solutions handles degree 1 and 2 only");
  }
  for (const Poly& v : out)
    G2T_CHECK(((f - v * v) % u).is_zero(), "mumford solution check failed");
  std::sort(out.begin(), out.end(),
            [](const Poly& x, const Poly& y) { return Poly::cmp(x, y) < 0; });
  for (size_t i = 1; i < out.size(); ++i)
    G2T_CHECK(out[i - 1] != out[i], "mumford solutions must be distinct");
  return out;
}

std::vector<Div> JacCtx::enumerate() const {
  Field k = c_.k;
  uint64_t q = k->q();
  if (q > kEnumCap) fail(Err::EnumerationTooLarge, "enumeration cap is q <= 256");
  std::vector<Div> out;
  Poly one = Poly::from_ints(k, {1});
  Poly zero(k);
  if (model_ == Model::split) {
    for (int n = 0; n <= 2; ++n) out.push_back(Div{one, zero, n});
  } else {
    out.push_back(identity());
  }
  if (model_ != Model::inert) {
    for (uint64_t i = 0; i < q; ++i) {
      Poly u(k, {k->element_at(i), k->one()});
      for (const Poly& v : mumford_v_solutions(u)) {
        out.push_back(Div{u, v, 0});
        if (model_ == Model::split) out.push_back(Div{u, v, 1});
      }
    }
  }
  for (uint64_t i0 = 0; i0 < q; ++i0)
    for (uint64_t i1 = 0; i1 < q; ++i1) {
      Poly u(k, {k->element_at(i0), k->element_at(i1), k->one()});
      for (const Poly& v : mumford_v_solutions(u)) out.push_back(Div{u, v, 0});
    }
  return out;
}

Div JacCtx::random(Rng& rng) const {
  Field k = c_.k;
  uint64_t q = k->q();
  bool inert = (model_ == Model::inert);
  bool split = (model_ == Model::split);
  // One grid slot per class: strata are {point at infinity stratum} + degree-1
  // monics (skipped on inert models) + degree-2 monics, 4 sub-slots each.
  uint64_t strata = inert ? q * q + 1 : q * q + q + 1;
  for (int tries = 0; tries < 200000; ++tries) {
    uint64_t r = rng.below(4 * strata);
    uint64_t st = r / 4;
    int slot = int(r % 4);
    if (st == 0) {
      if (split) {
        if (slot <= 2) return Div{Poly::from_ints(k, {1}), Poly(k), slot};
      } else if (slot == 0) {
        return identity();
      }
      continue;
    }
    st -= 1;
    if (!inert && st < q) {
      Poly u(k, {k->element_at(st), k->one()});
      auto vs = mumford_v_solutions(u);
      if (split) {
        if (slot < int(2 * vs.size())) return Div{u, vs[size_t(slot / 2)], slot % 2};
      } else if (slot < int(vs.size())) {
        return Div{u, vs[size_t(slot)], 0};
      }
      continue;
    }
    if (!inert) st -= q;
    Poly u(k, {k->element_at(st / q), k->element_at(st % q), k->one()});
    auto vs = mumford_v_solutions(u);
    if (slot < int(vs.size())) return Div{u, vs[size_t(slot)], 0};
  }
  fail(Err::SamplingFailed, "random class rejection loop exhausted");
}

Div JacCtx::embed_div(const Div& d) const {
  Field E = engine_->field();
  if (is_identity(d)) return engine_->identity();
  auto up = [&](const Poly& g) {
    std::vector<Fe> cc;
    cc.reserve(size_t(g.deg()) + 1);
    for (int i = 0; i <= g.deg(); ++i) cc.push_back(c_.k->embed(g.coeff(i), E));
    return Poly(E, std::move(cc));
  };
  return Div{up(d.u), up(d.v), 0};
}

Div JacCtx::descend_div(const Div& d) const {
  if (engine_->is_identity(d)) return identity();
  G2T_CHECK(d.u.deg() == 2 && d.n == 0, "engine result is not a rational class");
  auto down = [&](const Poly& g) {
    std::vector<Fe> cc;
    cc.reserve(size_t(g.deg()) + 1);
    for (int i = 0; i <= g.deg(); ++i) {
      auto it = descend_.find(g.coeff(i).index());
      G2T_CHECK(it != descend_.end(), "engine result has irrational coefficients");
      cc.push_back(c_.k->element_at(it->second));
    }
    return Poly(c_.k, std::move(cc));
  };
  return Div{down(d.u), down(d.v), 0};
}

}  // namespace g2t
