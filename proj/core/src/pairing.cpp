#include "g2t/pairing.hpp"

#include <bit>
#include <optional>

#include "g2t/errors.hpp"
#include "g2t/intutil.hpp"

namespace g2t {

namespace {

// Evaluates x-polynomials and (y - vt) factors on a divisor with a degree-2
// affine part A(u, v).  With u = x^2 + u1 x + u0 and w reduced to a x + b
// mod u, the product of w over the two points is b^2 - a b u1 + a^2 u0.
struct EvalAt {
  const Div* d;

  Fe poly(const Poly& w) const {
    Poly r = w % d->u;
    Fe a = r.coeff(1), b = r.coeff(0);
    Fe u1 = d->u.coeff(1), u0 = d->u.coeff(0);
    return b * b - a * b * u1 + a * a * u0;
  }
  // On A(u, v) the curve's y equals v(x), so (y - vt) evaluates to v - vt.
  Fe yminus(const Poly& vt) const { return poly(d->v - vt); }
};

struct Frac {
  Fe num, den;
};

// Multiplies the trace's function d(x) * prod (y - vt_i)/uh_i, evaluated at
// A(S) - A(R), into F.  False when any factor hits a zero or a pole there.
bool acc_trace(const AddTrace& tr, const EvalAt& S, const EvalAt& R, Frac& F) {
  Fe ds = S.poly(tr.d), dr = R.poly(tr.d);
  if (ds.is_zero() || dr.is_zero()) return false;
  F.num = F.num * ds;
  F.den = F.den * dr;
  for (const auto& st : tr.steps) {
    Fe ns = S.yminus(st.vt), nr = R.yminus(st.vt);
    Fe us = S.poly(st.uh), ur = R.poly(st.uh);
    if (ns.is_zero() || nr.is_zero() || us.is_zero() || ur.is_zero()) return false;
    F.num = F.num * ns * ur;
    F.den = F.den * nr * us;
  }
  return true;
}

// f_x evaluated at A(S) - A(R), where div f_x = ell * x as divisors.
std::optional<Fe> miller_ratio(const Jac& J, const Div& x, uint64_t ell,
                               const Div& S, const Div& R) {
  EvalAt ES{&S}, ER{&R};
  Frac F{J->field()->one(), J->field()->one()};
  Div T = x;
  AddTrace tr;
  int hi = 63 - std::countl_zero(ell);
  for (int i = hi - 1; i >= 0; --i) {
    Div t2 = J->add_traced(T, T, tr);
    F.num = F.num * F.num;
    F.den = F.den * F.den;
    if (!acc_trace(tr, ES, ER, F)) return std::nullopt;
    T = std::move(t2);
    if ((ell >> i) & 1) {
      Div t3 = J->add_traced(T, x, tr);
      if (!acc_trace(tr, ES, ER, F)) return std::nullopt;
      T = std::move(t3);
    }
  }
  G2T_CHECK(J->is_identity(T), "Miller ladder must annihilate an ell-torsion class");
  return F.num * F.den.inv();
}

void check_ell(uint64_t ell) {
  if (ell < 3 || ell % 2 == 0 || !is_prime64(ell))
    fail(Err::InvalidArgument, "ell must be an odd prime");
}

}  // namespace

Fe tate_pairing(const Jac& J, const Div& x, const Div& y, uint64_t ell, Rng& rng) {
  check_ell(ell);
  Field K = J->field();
  uint64_t q = K->q();
  if ((q - 1) % ell != 0)
    fail(Err::PreconditionViolated, "reduced pairing needs ell | q - 1");

  if (J->model() == JacCtx::Model::inert) {
    Field E = FieldCtx::get(uint32_t(K->p()), 2 * K->a());
    Jac JE = JacCtx::make(base_change(J->curve(), E));
    auto lift = [&](const Div& d) {
      if (J->is_identity(d)) return JE->identity();
      std::vector<Fe> uc, vc;
      for (int i = 0; i <= d.u.deg(); ++i) uc.push_back(K->embed(d.u.coeff(i), E));
      for (int i = 0; i <= d.v.deg(); ++i) vc.push_back(K->embed(d.v.coeff(i), E));
      return JE->make_div(Poly(E, uc), Poly(E, vc), 0);
    };
    Fe z = tate_pairing(JE, lift(x), lift(y), ell, rng);
    // The value lies in mu_ell, rational over the base; walk the base copy.
    Fe g = mu_generator(K, ell);
    Fe cur = K->one();
    Fe curE = K->embed(cur, E);
    Fe gE = K->embed(g, E);
    for (uint64_t e = 0; e < ell; ++e) {
      if (curE == z) return cur;
      cur = cur * g;
      curE = curE * gE;
    }
    fail(Err::Internal, "pairing value did not descend to the base field");
  }

  if (!J->is_identity(J->mul(x, mpz_class(ell))))
    fail(Err::InvalidArgument, "left pairing argument must be ell-torsion");
  if (J->is_identity(x) || J->is_identity(y)) return K->one();

  for (int tries = 0; tries < 16; ++tries) {
    Div R;
    int rt = 0;
    do {
      R = J->random(rng);
      if (++rt > 4096) fail(Err::SamplingFailed, "no degree-2 class sampled");
    } while (R.u.deg() != 2);
    Div S = J->add(y, R);
    if (S.u.deg() != 2) continue;
    auto v = miller_ratio(J, x, ell, S, R);
    if (!v) continue;
    return v->pow((q - 1) / ell);
  }
  fail(Err::SupportCollision, "could not separate the pairing supports");
}

Fe weil_pairing(const Jac& J, const Div& x, const Div& y, uint64_t ell, Rng& rng) {
  check_ell(ell);
  uint64_t q = J->field()->q();
  if ((q - 1) % ell != 0)
    fail(Err::PreconditionViolated, "reduced pairing needs ell | q - 1");
  if (((q - 1) / ell) % ell == 0)
    fail(Err::PreconditionViolated,
         "weil pairing needs ell^2 not dividing q - 1 (the exponent would kill mu_ell)");
  if (!J->is_identity(J->mul(y, mpz_class(ell))))
    fail(Err::InvalidArgument, "right pairing argument must be ell-torsion");
  Fe a = tate_pairing(J, x, J->neg(y), ell, rng);
  Fe b = tate_pairing(J, y, J->neg(x), ell, rng);
  return a * b.inv();
}

Fe mu_generator(Field K, uint64_t ell) {
  if (ell < 2 || !is_prime64(ell)) fail(Err::InvalidArgument, "ell must be prime");
  if ((K->q() - 1) % ell != 0)
    fail(Err::PreconditionViolated, "mu_ell is not rational over this field");
  uint64_t N = (K->q() - 1) / ell;
  for (uint64_t i = 1; i < K->q(); ++i) {
    Fe z = K->element_at(i);
    if (z.is_zero()) continue;
    Fe g = z.pow(N);
    if (!g.is_one()) return g;
  }
  fail(Err::Internal, "mu generator scan found nothing");
}

uint64_t mu_dlog(const Fe& gen, const Fe& v, uint64_t ell) {
  Fe acc = gen.field()->one();
  for (uint64_t e = 0; e < ell; ++e) {
    if (acc == v) return e;
    acc = acc * gen;
  }
  fail(Err::InvalidArgument, "value is outside mu_ell");
}

bool pairing_nondegenerate_exhaustive(const Jac& J, const TorsionBasis& B,
                                      uint64_t ell, PairKind kind, Rng& rng) {
  if (B.span.size() > kPairingEnumCap)
    fail(Err::ExceedsCap, "span too large for the exhaustive check");
  Fe one = J->field()->one();
  for (const auto& x : B.span) {
    if (J->is_identity(x)) continue;
    bool hit = false;
    for (const auto& y : B.span) {
      if (J->is_identity(y)) continue;
      Fe v = (kind == PairKind::weil) ? weil_pairing(J, x, y, ell, rng)
                                      : tate_pairing(J, x, y, ell, rng);
      if (!(v == one)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

GramInfo pairing_gram(const Jac& J, const TorsionBasis& B, uint64_t ell,
                      PairKind kind, Rng& rng) {
  GramInfo g;
  int r = B.rank();
  g.gram.assign(size_t(r) * size_t(r), 0);
  Fe gen = mu_generator(J->field(), ell);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Fe v = (kind == PairKind::weil)
                 ? weil_pairing(J, B.basis[size_t(i)], B.basis[size_t(j)], ell, rng)
                 : tate_pairing(J, B.basis[size_t(i)], B.basis[size_t(j)], ell, rng);
      g.gram[size_t(i) * size_t(r) + size_t(j)] = mu_dlog(gen, v, ell);
    }
  // Rank over F_ell by Gaussian elimination.
  std::vector<uint64_t> a = g.gram;
  int rank = 0;
  for (int col = 0; col < r && rank < r; ++col) {
    int piv = -1;
    for (int row = rank; row < r; ++row)
      if (a[size_t(row) * size_t(r) + size_t(col)] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < r; ++c)
      std::swap(a[size_t(piv) * size_t(r) + size_t(c)],
                a[size_t(rank) * size_t(r) + size_t(c)]);
    uint64_t inv = powmod64(a[size_t(rank) * size_t(r) + size_t(col)], ell - 2, ell);
    for (int row = rank + 1; row < r; ++row) {
      uint64_t fct = mulmod64(a[size_t(row) * size_t(r) + size_t(col)], inv, ell);
      if (fct == 0) continue;
      for (int c = 0; c < r; ++c) {
        uint64_t sub = mulmod64(fct, a[size_t(rank) * size_t(r) + size_t(c)], ell);
        uint64_t& dst = a[size_t(row) * size_t(r) + size_t(c)];
        dst = (dst + ell - sub) % ell;
      }
    }
    ++rank;
  }
  g.rank = rank;
  return g;
}

}  // namespace g2t
