#include <doctest.h>

#include <cstdint>
#include <string>

#include "g2t/curve.hpp"
#include "g2t/curve_io.hpp"
#include "g2t/errors.hpp"
#include "g2t/field.hpp"
#include "g2t/poly.hpp"
#include "g2t/weil.hpp"

using namespace g2t;

namespace {

Curve demo_sextic() {
  Field F3 = FieldCtx::get(3, 1);
  return curve_make(F3, Poly::from_ints(F3, {1, 0, 2, 1, 2, 0, 1}));
}

}  // namespace

TEST_CASE("curve_make validates model, squarefreeness and characteristic") {
  Field F3 = FieldCtx::get(3, 1);
  Field F5 = FieldCtx::get(5, 1);

  Curve q = curve_make(F3, Poly::from_ints(F3, {0, 2, 1, 1, 2, 1}));
  CHECK(q.model == Curve::Model::quintic);
  Curve s = demo_sextic();
  CHECK(s.model == Curve::Model::sextic);
  CHECK(s.q() == 3);

  // quintic must be monic
  CHECK_THROWS_AS((void)curve_make(F5, Poly::from_ints(F5, {1, 1, 0, 0, 0, 2})),
                  Error);
  // degree must be 5 or 6
  CHECK_THROWS_AS((void)curve_make(F3, Poly::from_ints(F3, {1, 1, 0, 1})), Error);
  // squarefree: x^5 + 2x^4 + x^3 = x^3 (x+1)^2
  CHECK_THROWS_AS((void)curve_make(F3, Poly::from_ints(F3, {0, 0, 0, 1, 2, 1})),
                  Error);
  try {
    Field F4 = FieldCtx::get(2, 2);
    (void)curve_make(F4, Poly::from_ints(F4, {1, 1, 0, 0, 0, 1}));
    FAIL("characteristic 2 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Err::EvenCharacteristic);
  }
}

TEST_CASE("sextic split test reads the leading coefficient") {
  Field F3 = FieldCtx::get(3, 1);
  CHECK(sextic_is_split(demo_sextic()));  // lc = 1, a square
  Curve inert = curve_make(F3, Poly::from_ints(F3, {1, 1, 0, 0, 0, 0, 2}));
  CHECK(!sextic_is_split(inert));  // lc = 2, the nonresidue mod 3
  Curve q = curve_make(F3, Poly::from_ints(F3, {0, 2, 1, 1, 2, 1}));
  CHECK_THROWS_AS((void)sextic_is_split(q), Error);
}

TEST_CASE("point counts match the zeta data on the demo curve") {
  Curve c = demo_sextic();
  Weil w = weil_from_curve(c);
  CHECK(w.s == 2);
  CHECK(w.t == 7);
  // predicted counts at higher levels come from the power polynomials
  for (int m = 1; m <= 4; ++m)
    CHECK(count_points(c, m) == curve_count(frobenius_power(w, m)));
}

TEST_CASE("inert sextic counts include a quadratic-character infinity term") {
  Field F3 = FieldCtx::get(3, 1);
  Curve c = curve_make(F3, Poly::from_ints(F3, {1, 1, 0, 0, 0, 0, 2}));
  Weil w = weil_from_curve(c);
  // lc is a nonsquare over F3 (0 points at infinity) but a square over F9
  CHECK(count_points(c, 2) == curve_count(frobenius_power(w, 2)));
  // Hasse bound at the base level
  mpz_class M = curve_count(w);
  CHECK(M >= 3 + 1 - 4 * 2);  // 4*sqrt(3) < 8
  CHECK(M <= 3 + 1 + 4 * 2);
}

TEST_CASE("base_change preserves the equation") {
  Curve c = demo_sextic();
  Field F9 = FieldCtx::get(3, 2);
  Curve c9 = base_change(c, F9);
  CHECK(c9.q() == 9);
  CHECK(c9.model == Curve::Model::sextic);
  REQUIRE(c9.f.deg() == 6);
  for (int i = 0; i <= 6; ++i)
    CHECK(c9.f.coeff(i) == c.k->embed(c.f.coeff(i), F9));
  // counts over the extension agree with the tower prediction
  Weil w = weil_from_curve(c);
  Weil w9 = weil_from_curve(c9);
  Weil lift = frobenius_power(w, 2);
  CHECK(w9.s == lift.s);
  CHECK(w9.t == lift.t);
  // the split/inert status can change under extension: lc=2 becomes square
  Field F3 = FieldCtx::get(3, 1);
  Curve inert = curve_make(F3, Poly::from_ints(F3, {1, 1, 0, 0, 0, 0, 2}));
  CHECK(sextic_is_split(base_change(inert, F9)));
}

TEST_CASE("curve json round trip is byte identical") {
  Curve c = demo_sextic();
  std::string s1 = curve_to_json(c);
  Curve back = curve_from_json(s1);
  CHECK(curve_to_json(back) == s1);
  CHECK(back.model == c.model);
  CHECK(back.f == c.f);

  // quintic over F9 with a coefficient outside the prime field
  Field F9 = FieldCtx::get(3, 2);
  Fe u = F9->from_coeffs({0, 1});
  Curve q9 = curve_make(
      F9, Poly(F9, {F9->one(), u, F9->zero(), F9->zero(), F9->zero(), F9->one()}));
  std::string s2 = curve_to_json(q9);
  Curve back2 = curve_from_json(s2);
  CHECK(curve_to_json(back2) == s2);
  CHECK(back2.f == q9.f);
}

TEST_CASE("curve json parser rejects malformed input") {
  // not JSON at all
  CHECK_THROWS_AS((void)curve_from_json("p: 3"), Error);
  // unknown model string
  CHECK_THROWS_AS(
      (void)curve_from_json(
          R"({"p":3,"a":1,"model":"cubic","f":[[1],[1],[0],[1]]})"),
      Error);
  // unreduced coefficient
  try {
    (void)curve_from_json(
        R"({"p":3,"a":1,"model":"quintic","f":[[3],[2],[1],[1],[2],[1]]})");
    FAIL("coefficient 3 over F3 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ParseError);
  }
  // wrong modulus
  CHECK_THROWS_AS(
      (void)curve_from_json(
          R"({"p":3,"a":2,"modulus":[2,0,1],"model":"quintic","f":[[0,0],[2,0],[1,0],[1,0],[2,0],[1,0]]})"),
      Error);
  // composite characteristic
  CHECK_THROWS_AS(
      (void)curve_from_json(
          R"({"p":4,"a":1,"model":"quintic","f":[[1],[2],[1],[1],[2],[1]]})"),
      Error);
  // sextic with zero leading coefficient
  CHECK_THROWS_AS(
      (void)curve_from_json(
          R"({"p":3,"a":1,"model":"sextic","f":[[1],[0],[2],[1],[2],[0],[0]]})"),
      Error);
}
