#include <doctest.h>

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "g2t/curve.hpp"
#include "g2t/errors.hpp"
#include "g2t/field.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/oracle.hpp"
#include "g2t/pairing.hpp"
#include "g2t/poly.hpp"
#include "g2t/rng.hpp"
#include "g2t/weil.hpp"

using namespace g2t;

namespace {

// demo curve over F81, where its full 5-torsion lives
Jac demo81() {
  Field F3 = FieldCtx::get(3, 1);
  Curve c = curve_make(F3, Poly::from_ints(F3, {1, 0, 2, 1, 2, 0, 1}));
  return JacCtx::make(base_change(c, FieldCtx::get(3, 4)));
}

}  // namespace

TEST_CASE("mu generator and discrete log") {
  Field F81 = FieldCtx::get(3, 4);
  Fe z = mu_generator(F81, 5);
  CHECK(!z.is_one());
  CHECK(z.pow(5).is_one());
  for (uint64_t e = 0; e < 5; ++e) CHECK(mu_dlog(z, z.pow(e), 5) == e);
  Fe two = F81->from_int(2);  // order 2, not in mu_5
  CHECK_THROWS_AS((void)mu_dlog(z, two, 5), Error);
  // rerun is deterministic
  CHECK(mu_generator(F81, 5) == z);
}

TEST_CASE("tate pairing values, independence and bilinearity") {
  Jac J = demo81();
  Rng rng(77);
  TorsionBasis B = torsion_basis(J, 5625, 5, rng);
  REQUIRE(B.rank() == 4);

  // values are 5th roots of unity
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Fe v = tate_pairing(J, B.basis[size_t(i)], B.basis[size_t(j)], 5, rng);
      CHECK(v.pow(5).is_one());
    }

  // value is independent of the sampled evaluation support
  Div x = B.basis[0], y = B.basis[1];
  Fe v0 = tate_pairing(J, x, y, 5, rng);
  for (int it = 0; it < 5; ++it) CHECK(tate_pairing(J, x, y, 5, rng) == v0);

  // bilinearity on random span triples
  for (int it = 0; it < 20; ++it) {
    Div a = B.span[rng.below(625)];
    Div b = B.span[rng.below(625)];
    Div c = B.span[rng.below(625)];
    Fe ab = tate_pairing(J, a, b, 5, rng);
    CHECK(tate_pairing(J, J->add(a, c), b, 5, rng) ==
          ab * tate_pairing(J, c, b, 5, rng));
    CHECK(tate_pairing(J, a, J->add(b, c), 5, rng) ==
          ab * tate_pairing(J, a, c, 5, rng));
    CHECK(tate_pairing(J, J->mul(a, 2), b, 5, rng) == ab * ab);
  }
}

TEST_CASE("weil pairing is alternating, tate generally is not") {
  Jac J = demo81();
  Rng rng(78);
  TorsionBasis B = torsion_basis(J, 5625, 5, rng);
  REQUIRE(B.rank() == 4);

  bool tate_self_nontrivial = false;
  for (int it = 0; it < 25; ++it) {
    Div a = B.span[rng.below(625)];
    Div b = B.span[rng.below(625)];
    // alternation: e(a, a) = 1, hence antisymmetry e(a,b) e(b,a) = 1
    CHECK(weil_pairing(J, a, a, 5, rng).is_one());
    Fe ab = weil_pairing(J, a, b, 5, rng);
    Fe ba = weil_pairing(J, b, a, 5, rng);
    CHECK((ab * ba).is_one());
    if (!tate_pairing(J, a, a, 5, rng).is_one()) tate_self_nontrivial = true;
  }
  CHECK(tate_self_nontrivial);  // self-pairings distinguish tate from weil
}

TEST_CASE("pairings are Galois equivariant") {
  Jac J = demo81();
  Rng rng(79);
  TorsionBasis B = torsion_basis(J, 5625, 5, rng);
  for (int it = 0; it < 10; ++it) {
    Div a = B.span[rng.below(625)];
    Div b = B.span[rng.below(625)];
    Fe t = tate_pairing(J, a, b, 5, rng);
    Fe tf = tate_pairing(J, J->frobenius(a, 1), J->frobenius(b, 1), 5, rng);
    CHECK(tf == t.frob(1));
    Fe w = weil_pairing(J, a, b, 5, rng);
    Fe wf = weil_pairing(J, J->frobenius(a, 1), J->frobenius(b, 1), 5, rng);
    CHECK(wf == w.frob(1));
  }
}

TEST_CASE("nondegeneracy on the full demo 5-torsion") {
  Jac J = demo81();
  Rng rng(80);
  TorsionBasis B = torsion_basis(J, 5625, 5, rng);
  REQUIRE(B.rank() == 4);
  GramInfo gt = pairing_gram(J, B, 5, PairKind::tate, rng);
  CHECK(gt.rank == 4);
  GramInfo gw = pairing_gram(J, B, 5, PairKind::weil, rng);
  CHECK(gw.rank == 4);
  CHECK(pairing_nondegenerate_exhaustive(J, B, 5, PairKind::tate, rng));
  CHECK(pairing_nondegenerate_exhaustive(J, B, 5, PairKind::weil, rng));
}

TEST_CASE("rank-2 13-torsion of (1,-1) over F27") {
  // |J(F27)| = 1183 = 7 * 13^2 for the quintic below; J(F27)[13] has rank 2
  Field F3 = FieldCtx::get(3, 1);
  auto hits = search_curves(F3, 1, -1, 5, 1);
  REQUIRE(hits.size() == 1);
  Field F27 = FieldCtx::get(3, 3);
  Jac J = JacCtx::make(base_change(hits[0], F27));
  CHECK(jac_order(frobenius_power(weil_from_curve(hits[0]), 3)) == 1183);

  Rng rng(81);
  TorsionBasis B = torsion_basis(J, 1183, 13, rng);
  REQUIRE(B.rank() == 2);
  CHECK(B.span.size() == 169);
  GramInfo g = pairing_gram(J, B, 13, PairKind::tate, rng);
  CHECK(g.rank == 2);
  CHECK(pairing_nondegenerate_exhaustive(J, B, 13, PairKind::tate, rng));
}

TEST_CASE("inert model delegates to the quadratic extension") {
  // y^2 = 2x^6 + x + 4 over F13 is inert (2 is a nonresidue mod 13) with
  // |J| = 189 = 27 * 7; 3 | q - 1 = 12 puts the Tate values in the base field
  Field F13 = FieldCtx::get(13, 1);
  Curve c = curve_make(F13, Poly::from_ints(F13, {4, 1, 0, 0, 0, 0, 2}));
  CHECK(!sextic_is_split(c));
  Jac J = JacCtx::make(c);
  mpz_class n = jac_order(weil_from_curve(c));
  REQUIRE(n == 189);

  Rng rng(82);
  TorsionBasis B = torsion_basis(J, n, 3, rng);
  REQUIRE(B.rank() >= 1);
  Div x = B.basis[0];
  Fe v = tate_pairing(J, x, x, 3, rng);
  CHECK(v.field() == F13);  // value descends to the base field
  CHECK(v.pow(3).is_one());
  // deterministic under a fixed rng seed sequence and bilinear
  Fe v2 = tate_pairing(J, J->mul(x, 2), x, 3, rng);
  CHECK(v2 == v * v);
}

TEST_CASE("pairing preconditions") {
  // tate needs ell | q - 1: over F3, 5 does not divide 2
  Field F3 = FieldCtx::get(3, 1);
  Curve c = curve_make(F3, Poly::from_ints(F3, {1, 0, 2, 1, 2, 0, 1}));
  Jac J3 = JacCtx::make(c);
  Rng rng(83);
  auto all = J3->enumerate();
  Div x;
  for (auto& d : all)
    if (!J3->is_identity(d)) { x = d; break; }
  try {
    (void)tate_pairing(J3, x, x, 5, rng);
    FAIL("mu_5 is not rational over F3");
  } catch (const Error& e) {
    CHECK(e.code() == Err::PreconditionViolated);
  }
  // weil needs ell^2 not dividing q - 1: 9 | 18 over F19
  Field F19 = FieldCtx::get(19, 1);
  Curve c19 = curve_make(F19, Poly::from_ints(F19, {1, 1, 0, 0, 0, 1}));
  Jac J19 = JacCtx::make(c19);
  try {
    (void)weil_pairing(J19, J19->identity(), J19->identity(), 3, rng);
    FAIL("9 divides 18 = q - 1, the exponent kills mu_3");
  } catch (const Error& e) {
    CHECK(e.code() == Err::PreconditionViolated);
  }
}
