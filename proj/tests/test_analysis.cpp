#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "g2t/analysis.hpp"
#include "g2t/curve.hpp"
#include "g2t/errors.hpp"
#include "g2t/field.hpp"
#include "g2t/poly.hpp"
#include "g2t/weil.hpp"

using namespace g2t;

TEST_CASE("classification along the (2,7) tower at ell = 5") {
  Weil w = weil_make(3, 1, 2, 7);
  // 4*tau = 0, so every level takes the trace-degenerate route
  for (uint32_t m : {1u, 2u, 3u}) {
    TorsionReport r = classify_torsion(w, m, 5);
    CHECK(!r.oracle_needed);
    CHECK(r.rank == 2);
    CHECK(r.theorem == "degenerate-bicyclic");
    CHECK(r.k == 4);
    CHECK(r.kappa.exact);
    CHECK(r.kappa.kappa == 4);
  }
  TorsionReport r4 = classify_torsion(w, 4, 5);
  CHECK(r4.rank == 4);
  CHECK(r4.theorem == "degenerate-full");
  CHECK(r4.order == 5625);
  // the rank jumps to 4 exactly at m = kappa and multiples
  TorsionReport r8 = classify_torsion(w, 8, 5);
  CHECK(r8.rank == 4);
  TorsionReport r6 = classify_torsion(w, 6, 5);
  CHECK(r6.rank == 2);
}

TEST_CASE("nondegenerate routes") {
  // (0,3) over F3 at ell = 13: squarefree, bicyclic exactly when 13 | q^m - 1
  Weil w = weil_make(3, 1, 0, 3);
  TorsionReport r3 = classify_torsion(w, 3, 13);
  CHECK(r3.rank == 2);
  CHECK(r3.theorem == "nondegenerate-bicyclic");
  CHECK(r3.kappa.exact);
  CHECK(r3.kappa.kappa == 6);

  // (1,-1) over F3: 13 | P(1) = 13, rank 1 at the base level
  Weil v = weil_make(3, 1, 1, -1);
  TorsionReport s1 = classify_torsion(v, 1, 13);
  CHECK(s1.rank == 1);
  CHECK(s1.theorem == "nondegenerate-cyclic");
  // 13 still divides |J(F9)| = P(1) P(-1) = 13 * 5, and 13 does not divide
  // q^2 - 1 = 8, so level 2 stays cyclic
  TorsionReport s2 = classify_torsion(v, 2, 13);
  CHECK(s2.rank == 1);
  CHECK(s2.theorem == "nondegenerate-cyclic");
  TorsionReport s3 = classify_torsion(v, 3, 13);
  CHECK(s3.rank == 2);
  CHECK(s3.theorem == "nondegenerate-bicyclic");
}

TEST_CASE("no torsion when ell does not divide the order") {
  Weil w = weil_make(3, 1, 2, 7);
  TorsionReport r = classify_torsion(w, 1, 7);
  CHECK(r.rank == 0);
  CHECK(r.theorem == "none");
  CHECK(!r.oracle_needed);
}

TEST_CASE("ell dividing q-1 defers to the oracle") {
  // q = 11, ell = 5 | q - 1: the symbolic dichotomy is unavailable
  Weil w = weil_make(11, 1, 1, 1);
  if (jac_order(w) % 5 == 0) {
    TorsionReport r = classify_torsion(w, 1, 5);
    CHECK(r.oracle_needed);
    CHECK(r.rank == -1);
    bool warned = false;
    for (auto& s : r.warnings)
      if (s.find("q-1") != std::string::npos) warned = true;
    CHECK(warned);
  }
}

TEST_CASE("classify_torsion rejects bad arguments") {
  Weil w = weil_make(3, 1, 2, 7);
  CHECK_THROWS_AS((void)classify_torsion(w, 1, 3), Error);   // ell == p
  CHECK_THROWS_AS((void)classify_torsion(w, 1, 4), Error);   // not prime
  CHECK_THROWS_AS((void)classify_torsion(w, 0, 5), Error);   // level 0
  Weil w2 = frobenius_power(w, 2);
  CHECK_THROWS_AS((void)classify_torsion(w2, 1, 5), Error);  // base.m != 1
}

TEST_CASE("two-torsion field degree, exact and bounded") {
  Field F3 = FieldCtx::get(3, 1);
  // x^5 + 1 = (x+1) * (irreducible quartic): splitting degree lcm(1,4) = 4
  Curve c = curve_make(F3, Poly::from_ints(F3, {1, 0, 0, 0, 0, 1}));
  CHECK(two_torsion_field_degree(c) == 4);
  Weil w = weil_from_curve(c);
  CHECK(w.s == 0);
  CHECK(jac_order(w) == 10);
  // s even: bound 4m, and the exact degree divides it
  CHECK(two_torsion_field_bound(w, 1) == 4);
  CHECK(4 % two_torsion_field_degree(c) == 0);
  CHECK(two_torsion_field_bound(w, 2) == 8);

  // demo sextic: order odd until level 3
  Curve d = curve_make(F3, Poly::from_ints(F3, {1, 0, 2, 1, 2, 0, 1}));
  Weil wd = weil_from_curve(d);
  CHECK_THROWS_AS((void)two_torsion_field_bound(wd, 1), Error);
  try {
    (void)two_torsion_field_bound(wd, 2);
    FAIL("|J(F9)| = 225 is odd");
  } catch (const Error& e) {
    CHECK(e.code() == Err::OrderOdd);
  }
  CHECK(two_torsion_field_bound(wd, 3) == 12);  // s = 2 even, 4m
  CHECK(two_torsion_field_bound(wd, 3) % two_torsion_field_degree(d) == 0);

  // odd trace: 6m bound; (1,-1) has |J| = 13 odd, |J(F_9)| = ?
  Weil v = weil_make(3, 1, 1, -1);
  for (uint32_t m = 1; m <= 6; ++m) {
    mpz_class n = jac_order(frobenius_power(v, m));
    if (mpz_odd_p(n.get_mpz_t())) {
      CHECK_THROWS_AS((void)two_torsion_field_bound(v, m), Error);
    } else {
      CHECK(two_torsion_field_bound(v, m) == 6 * m);
    }
  }
}

TEST_CASE("nondegeneracy certificate hypotheses") {
  Weil w = weil_make(3, 1, 2, 7);
  NondegCert c5 = pairing_nondegeneracy_applicable(w, 5);
  CHECK(c5.applicable);
  CHECK(c5.k == 4);
  // 7 does not divide P(1) = 25
  CHECK(!pairing_nondegeneracy_applicable(w, 7).applicable);
  // ell = p excluded
  CHECK(!pairing_nondegeneracy_applicable(w, 3).applicable);
  // ell | q - 1 excluded: q = 11, ell = 5
  Weil u = weil_make(11, 1, 1, 1);
  if (jac_order(u) % 5 == 0) CHECK(!pairing_nondegeneracy_applicable(u, 5).applicable);
  // even and composite excluded
  CHECK(!pairing_nondegeneracy_applicable(w, 2).applicable);
  CHECK(!pairing_nondegeneracy_applicable(w, 25).applicable);
}
