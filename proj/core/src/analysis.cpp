#include "g2t/analysis.hpp"

#include <numeric>

#include "g2t/errors.hpp"
#include "g2t/intutil.hpp"

namespace g2t {

TorsionReport classify_torsion(const Weil& base, uint32_t m, uint64_t ell) {
  if (base.m != 1)
    fail(Err::InvalidArgument, "classification starts from base-level Weil data");
  if (m == 0) fail(Err::InvalidArgument, "extension level must be positive");
  if (ell < 3 || ell % 2 == 0 || !is_prime64(ell) || ell == base.p)
    fail(Err::InvalidArgument,
         "ell must be an odd prime different from the characteristic");

  TorsionReport r;
  r.ell = ell;
  r.m = m;
  Weil wm = frobenius_power(base, m);
  r.order = jac_order(wm);
  r.k = embedding_degree(base, ell);
  r.kappa = symbolic_full_embedding_degree(base, ell);
  if (!r.kappa.exact)
    r.warnings.push_back("full-torsion field degree is a candidate list, not exact");

  if (!mpz_divisible_ui_p(r.order.get_mpz_t(), ell)) {
    r.rank = 0;
    r.theorem = "none";
    return r;
  }

  // The eigenvalue dichotomies below assume ell does not divide q - 1 at the
  // base; otherwise only the oracle can separate the shapes.
  mpz_class qm1 = base.Q - 1;
  if (mpz_divisible_ui_p(qm1.get_mpz_t(), ell)) {
    r.oracle_needed = true;
    r.theorem = "none";
    r.warnings.push_back("ell divides q-1: symbolic dichotomy unavailable");
    return r;
  }

  mpz_class Qm1 = wm.Q - 1;
  bool full_mu = mpz_divisible_ui_p(Qm1.get_mpz_t(), ell) != 0;

  mpz_class tau4 = four_tau(wm);
  if (!mpz_divisible_ui_p(tau4.get_mpz_t(), ell)) {
    r.rank = full_mu ? 2 : 1;
    r.theorem = full_mu ? "nondegenerate-bicyclic" : "nondegenerate-cyclic";
    return r;
  }

  // Trace-degenerate route: needs every Frobenius field unramified at ell.
  for (const auto& nf : rational_factorization(wm)) {
    if (unramified_at(nf.minpoly, ell) != Tri::yes) {
      r.oracle_needed = true;
      r.theorem = "none";
      r.warnings.push_back("ramification at ell undetermined along the degenerate route");
      return r;
    }
  }
  r.rank = full_mu ? 4 : 2;
  r.theorem = full_mu ? "degenerate-full" : "degenerate-bicyclic";
  return r;
}

uint32_t two_torsion_field_degree(const Curve& c) {
  uint32_t d = 1;
  for (const auto& [deg, prod] : c.f.distinct_degree_factors())
    d = std::lcm(d, uint32_t(deg));
  return d;
}

uint32_t two_torsion_field_bound(const Weil& base, uint32_t m) {
  if (base.p == 2) fail(Err::EvenCharacteristic, "two-torsion bound needs odd characteristic");
  if (base.m != 1) fail(Err::InvalidArgument, "base Weil data must be at level m=1");
  if (m == 0) fail(Err::InvalidArgument, "extension degree must be positive");
  Weil wm = m == 1 ? base : frobenius_power(base, m);
  mpz_class n = jac_order(wm);
  if (mpz_odd_p(n.get_mpz_t()))
    fail(Err::OrderOdd, "group order at this level is odd: no rational two-torsion");
  return (base.s % 2 == 0) ? 4 * m : 6 * m;
}

NondegCert pairing_nondegeneracy_applicable(const Weil& w, uint64_t ell) {
  NondegCert out;
  if (ell < 3 || ell % 2 == 0 || !is_prime64(ell)) return out;
  if (w.p == ell) return out;
  mpz_class p1 = jac_order(w);
  if (!mpz_divisible_ui_p(p1.get_mpz_t(), ell)) return out;
  mpz_class qm1 = w.Q - 1;
  if (mpz_divisible_ui_p(qm1.get_mpz_t(), ell)) return out;
  out.applicable = true;
  out.k = embedding_degree(w, ell);
  return out;
}

}  // namespace g2t
