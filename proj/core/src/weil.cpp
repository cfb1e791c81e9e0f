#include "g2t/weil.hpp"

#include <algorithm>
#include <numeric>

#include "g2t/errors.hpp"
#include "g2t/intutil.hpp"

namespace g2t {

bool weil_shape_ok(const Weil& w) {
  // Roots of g(X) = X^2 + sX + (t - 2Q) are the alpha + Q/alpha sums; the
  // polynomial comes from an abelian surface only if both are real with
  // absolute value at most 2 sqrt(Q).  All checks are exact integer work.
  mpz_class disc = w.s * w.s - 4 * (w.t - 2 * w.Q);
  if (disc < 0) return false;
  if (w.s * w.s > 16 * w.Q) return false;  // vertex inside the interval
  mpz_class A = 2 * w.Q + w.t;
  if (cmp_int_vs_sqrt(A, -2 * w.s, w.Q) < 0) return false;  // g(+2 sqrt Q) >= 0
  if (cmp_int_vs_sqrt(A, 2 * w.s, w.Q) < 0) return false;   // g(-2 sqrt Q) >= 0
  return true;
}

Weil weil_make(uint64_t p, uint32_t a, const mpz_class& s, const mpz_class& t) {
  if (!is_prime64(p)) fail(Err::InvalidArgument, "p must be prime");
  if (a < 1 || a > kMaxFieldDeg) fail(Err::InvalidArgument, "a out of range");
  Weil w;
  w.p = p;
  w.a = a;
  w.m = 1;
  mpz_ui_pow_ui(w.Q.get_mpz_t(), p, a);
  w.s = s;
  w.t = t;
  if (!weil_shape_ok(w)) fail(Err::InvalidWeil, "pair (s, t) fails the Weil screen");
  return w;
}

Weil weil_from_counts(const mpz_class& M1, const mpz_class& M2, uint64_t p,
                      uint32_t a) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, a);
  mpz_class s = M1 - (q + 1);
  mpz_class tnum = M2 - (q * q + 1) + s * s;
  if (mpz_odd_p(tnum.get_mpz_t()))
    fail(Err::InvalidWeil, "counts have inconsistent parity");
  return weil_make(p, a, s, tnum / 2);
}

mpz_class jac_order(const Weil& w) {
  return 1 + w.s + w.t + w.s * w.Q + w.Q * w.Q;
}

mpz_class curve_count(const Weil& w) { return w.Q + 1 + w.s; }

mpz_class four_tau(const Weil& w) { return 8 * w.Q + w.s * w.s - 4 * w.t; }

mpz_class two_sigma(const Weil& w) { return w.s; }

ZPoly weil_zpoly(const Weil& w) {
  return ZPoly({w.Q * w.Q, w.s * w.Q, w.t, w.s, mpz_class(1)});
}

Weil frobenius_power(const Weil& w, uint32_t j) {
  G2T_CHECK(j >= 1, "frobenius_power: j must be positive");
  if (j == 1) return w;
  // Newton power sums of the four Frobenius roots, p_k = sum alpha_i^k:
  //   p_1 = -s, p_2 = s^2 - 2t, p_3 = -s^3 + 3st - 3sQ,
  //   p_k = -(s p_{k-1} + t p_{k-2} + sQ p_{k-3} + Q^2 p_{k-4})  for k >= 4.
  // Then s_j = -p_j and t_j = (p_j^2 - p_{2j}) / 2.
  std::vector<mpz_class> ps(size_t(2 * j + 1));
  ps[0] = 4;
  ps[1] = -w.s;
  if (j >= 1) ps[2] = w.s * w.s - 2 * w.t;
  if (2 * j >= 3) ps[3] = -w.s * w.s * w.s + 3 * w.s * w.t - 3 * w.s * w.Q;
  mpz_class sQ = w.s * w.Q, Q2 = w.Q * w.Q;
  for (size_t k = 4; k <= size_t(2 * j); ++k)
    ps[k] = -(w.s * ps[k - 1] + w.t * ps[k - 2] + sQ * ps[k - 3] + Q2 * ps[k - 4]);
  Weil r;
  r.p = w.p;
  r.a = w.a;
  r.m = w.m * j;
  mpz_pow_ui(r.Q.get_mpz_t(), w.Q.get_mpz_t(), j);
  r.s = -ps[j];
  mpz_class tnum = ps[j] * ps[j] - ps[2 * j];
  G2T_CHECK(mpz_even_p(tnum.get_mpz_t()), "frobenius_power: parity failure");
  r.t = tnum / 2;
  G2T_CHECK(weil_shape_ok(r), "frobenius_power: result fails the Weil screen");
  return r;
}

WeilMod reduce_and_factor_mod(const Weil& w, uint64_t ell) {
  if (ell < 3 || !is_prime64(ell))
    fail(Err::PreconditionViolated, "ell must be an odd prime");
  Field k = FieldCtx::get(ell, 1);
  auto red = [&](const mpz_class& v) {
    return k->from_int(int64_t(mpz_fdiv_ui(v.get_mpz_t(), ell)));
  };
  Poly pb(k, {red(w.Q * w.Q), red(w.s * w.Q), red(w.t), red(w.s), k->one()});
  WeilMod out;
  for (auto& [g, mult] : pb.factor()) {
    if (g.deg() == 1) {
      Fe root = -g.coeff(0);
      out.roots.emplace_back(root.index(), mult);
    } else {
      out.nonlinear.emplace_back(g, mult);
    }
    if (mult > 1) out.squarefree = false;
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::vector<NumberField> rational_factorization(const Weil& w) {
  ZPoly P = weil_zpoly(w);
  std::vector<NumberField> out;
  // Rational roots must divide Q^2, so they are +-p^i.
  std::vector<mpz_class> linear;
  {
    mpz_class cand = 1;
    std::vector<mpz_class> divs;
    mpz_class Q2 = w.Q * w.Q;
    while (cand <= Q2) {
      divs.push_back(cand);
      divs.push_back(-cand);
      if (!mpz_divisible_p(Q2.get_mpz_t(), mpz_class(cand * w.p).get_mpz_t()))
        break;
      cand *= w.p;
    }
    for (const auto& r : divs) {
      ZPoly lin({-r, mpz_class(1)});
      while (P.deg() >= 1 && P.eval(r) == 0) {
        P = P.exact_div(lin);
        linear.push_back(r);
      }
    }
  }
  std::sort(linear.begin(), linear.end());
  for (size_t i = 0; i < linear.size();) {
    size_t j = i;
    while (j < linear.size() && linear[j] == linear[i]) ++j;
    out.push_back({ZPoly({-linear[i], mpz_class(1)}), int(j - i)});
    i = j;
  }
  G2T_CHECK(P.deg() % 2 == 0, "rational_factorization: odd residual degree");
  if (P.deg() == 2) {
    out.push_back({P, 1});
    P = ZPoly({mpz_class(1)});
  } else if (P.deg() == 4) {
    // Quadratic factors X^2 + aX + b have b = +-p^i dividing Q^2 and
    // |a| <= 2 sqrt(Q) (roots are Weil numbers of modulus sqrt(Q)).
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), w.Q.get_mpz_t());
    bound = 2 * (bound + 1);
    if (bound > (1 << 26)) fail(Err::ExceedsCap, "rational_factorization: Q too large");
    bool split = false;
    mpz_class Q2 = w.Q * w.Q;
    std::vector<mpz_class> bs;
    for (mpz_class b = 1; b <= Q2; b *= w.p) {
      bs.push_back(b);
      bs.push_back(-b);
      if (!mpz_divisible_p(Q2.get_mpz_t(), mpz_class(b * w.p).get_mpz_t())) break;
    }
    std::sort(bs.begin(), bs.end(), [](const mpz_class& x, const mpz_class& y) {
      return ::cmp(x, y) < 0;
    });
    for (const auto& b : bs) {
      if (split) break;
      for (mpz_class aa = -bound; aa <= bound; ++aa) {
        ZPoly quad({b, aa, mpz_class(1)});
        if (quad.divides_into(P)) {
          ZPoly rest = P.exact_div(quad);
          if (rest == quad) {
            out.push_back({quad, 2});
          } else {
            out.push_back({quad, 1});
            out.push_back({rest, 1});
          }
          split = true;
          break;
        }
      }
    }
    if (!split) out.push_back({P, 1});
    P = ZPoly({mpz_class(1)});
  }
  std::sort(out.begin(), out.end(), [](const NumberField& x, const NumberField& y) {
    return ZPoly::cmp(x.minpoly, y.minpoly) < 0;
  });
  int total = 0;
  for (auto& nf : out) total += nf.minpoly.deg() * nf.mult;
  G2T_CHECK(total == 4, "rational_factorization: degrees do not sum to 4");
  for (auto& nf : out)
    if (nf.minpoly.deg() == 3)
      fail(Err::Reducible, "degree-3 factor cannot occur for a Weil quartic");
  return out;
}

Tri unramified_at(const ZPoly& minpoly, uint64_t ell) {
  int d = minpoly.deg();
  G2T_CHECK(d >= 1, "unramified_at: constant polynomial");
  if (d == 1) return Tri::yes;
  if (d == 2) {
    // Exact via the field discriminant of Q(sqrt(d0)).
    mpz_class a = minpoly.coeff(1), b = minpoly.coeff(0);
    G2T_CHECK(minpoly.coeff(2) == 1, "unramified_at: quadratic must be monic");
    mpz_class d0 = a * a - 4 * b;
    G2T_CHECK(d0 != 0, "unramified_at: square quadratic");
    mpz_class d1;
    try {
      d1 = squarefree_kernel(d0);
    } catch (const Error& e) {
      if (e.code() == Err::ExceedsCap) return Tri::inconclusive;
      throw;
    }
    mpz_class D = (mpz_fdiv_ui(d1.get_mpz_t(), 4) == 1) ? d1 : 4 * d1;
    return mpz_divisible_ui_p(D.get_mpz_t(), ell) ? Tri::no : Tri::yes;
  }
  mpz_class disc = minpoly.discriminant();
  G2T_CHECK(disc != 0, "unramified_at: zero discriminant for irreducible input");
  return mpz_divisible_ui_p(disc.get_mpz_t(), ell) ? Tri::inconclusive : Tri::yes;
}

uint64_t embedding_degree(const Weil& w, uint64_t ell) {
  if (!is_prime64(ell)) fail(Err::PreconditionViolated, "ell must be prime");
  uint64_t r = mpz_fdiv_ui(w.Q.get_mpz_t(), ell);
  if (r == 0) fail(Err::PreconditionViolated, "ell divides the field size");
  return mult_order64(r, ell);
}

KappaInfo symbolic_full_embedding_degree(const Weil& w, uint64_t ell) {
  if (ell < 3 || !is_prime64(ell))
    fail(Err::PreconditionViolated, "ell must be an odd prime");
  uint64_t k = embedding_degree(w, ell);
  WeilMod fm = reduce_and_factor_mod(w, ell);
  uint64_t kappa0 = 1;
  int max_mult = 1;
  for (auto [r, mult] : fm.roots) {
    kappa0 = std::lcm(kappa0, mult_order64(r, ell));
    max_mult = std::max(max_mult, mult);
  }
  for (auto& [h, mult] : fm.nonlinear) {
    kappa0 = std::lcm(kappa0, h.order_of_x());
    max_mult = std::max(max_mult, mult);
  }
  G2T_CHECK(kappa0 % k == 0, "kappa0 must be a multiple of the embedding degree");
  KappaInfo out;
  if (fm.squarefree) {
    out.exact = true;
    out.kappa = kappa0;
    out.candidates = {kappa0};
    return out;
  }
  // Trace-degenerate exact case: ell divides the group order and 4 tau but
  // not Q - 1, and every Frobenius number field is unramified at ell.  Then
  // kappa equals ord(Q mod ell) exactly.
  mpz_class qm1 = w.Q - 1;
  if (!mpz_divisible_ui_p(qm1.get_mpz_t(), ell) &&
      mpz_divisible_ui_p(jac_order(w).get_mpz_t(), ell) &&
      mpz_divisible_ui_p(four_tau(w).get_mpz_t(), ell)) {
    bool all_yes = true;
    for (auto& nf : rational_factorization(w)) {
      if (unramified_at(nf.minpoly, ell) != Tri::yes) {
        all_yes = false;
        break;
      }
    }
    if (all_yes) {
      out.exact = true;
      out.kappa = k;
      out.candidates = {k};
      return out;
    }
  }
  // Jordan blocks of size b need an extra ell^ceil(log_ell b) in the order.
  out.exact = false;
  out.kappa = kappa0;
  out.candidates.push_back(kappa0);
  uint64_t step = kappa0;
  uint64_t need = 1;
  int emax = 0;
  while (int(need) < max_mult) {
    need *= ell;
    ++emax;
  }
  for (int e = 0; e < emax; ++e) {
    step *= ell;
    out.candidates.push_back(step);
  }
  return out;
}

}  // namespace g2t
