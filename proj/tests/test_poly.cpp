#include <doctest.h>

#include <cstdint>
#include <vector>

#include "g2t/errors.hpp"
#include "g2t/field.hpp"
#include "g2t/poly.hpp"
#include "g2t/rng.hpp"

using namespace g2t;

namespace {

Poly rand_poly(Field k, int deg, Rng& rng) {
  std::vector<Fe> c;
  for (int i = 0; i <= deg; ++i) c.push_back(k->element_at(rng.below(k->q())));
  return Poly(k, std::move(c));
}

}  // namespace

TEST_CASE("construction, trimming and coefficient access") {
  Field F7 = FieldCtx::get(7, 1);
  Poly z(F7);
  CHECK(z.is_zero());
  CHECK(z.deg() == -1);
  Poly p = Poly::from_ints(F7, {3, 0, 0});  // trailing zeros trim away
  CHECK(p.deg() == 0);
  CHECK(p.coeff(0) == F7->from_int(3));
  CHECK(p.coeff(5).is_zero());
  // negative ints reduce mod p
  Poly q = Poly::from_ints(F7, {-1, 8});
  CHECK(q.coeff(0) == F7->from_int(6));
  CHECK(q.coeff(1) == F7->from_int(1));
  CHECK(Poly::x(F7).deg() == 1);
}

TEST_CASE("ring axioms on random samples") {
  Field k = FieldCtx::get(5, 2);
  Rng rng(17);
  for (int it = 0; it < 60; ++it) {
    Poly a = rand_poly(k, int(rng.below(6)), rng);
    Poly b = rand_poly(k, int(rng.below(6)), rng);
    Poly c = rand_poly(k, int(rng.below(6)), rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == Poly(k));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).deg() == a.deg() + b.deg());
    // evaluation is a ring homomorphism
    Fe x = k->element_at(rng.below(k->q()));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}

TEST_CASE("division invariants") {
  Field k = FieldCtx::get(3, 2);
  Rng rng(23);
  for (int it = 0; it < 80; ++it) {
    Poly a = rand_poly(k, int(rng.below(8)), rng);
    Poly d = rand_poly(k, int(rng.below(4)), rng);
    if (d.is_zero()) continue;
    auto [q, r] = a.divmod(d);
    CHECK(a == q * d + r);
    CHECK(r.deg() < d.deg());
    CHECK((a * d).exact_div(d) == a);
  }
  CHECK_THROWS_AS((void)Poly::x(k).divmod(Poly(k)), Error);
}

TEST_CASE("gcd and egcd") {
  Field F3 = FieldCtx::get(3, 1);
  Rng rng(29);
  for (int it = 0; it < 60; ++it) {
    Poly a = rand_poly(F3, int(rng.below(6)), rng);
    Poly b = rand_poly(F3, int(rng.below(6)), rng);
    if (a.is_zero() && b.is_zero()) continue;
    Poly u(F3), v(F3);
    Poly g = Poly::egcd(a, b, u, v);
    CHECK(g == Poly::gcd(a, b));
    CHECK(!g.is_zero());
    CHECK(g.lc().is_one());
    CHECK(u * a + v * b == g);
    if (!a.is_zero()) CHECK((a % g).is_zero());
    if (!b.is_zero()) CHECK((b % g).is_zero());
  }
  // shared factor is found
  Poly f = Poly::from_ints(F3, {1, 1});  // x+1
  Poly g2 = Poly::gcd(f * Poly::from_ints(F3, {2, 0, 1}), f * Poly::x(F3));
  CHECK((g2 % f).is_zero());
  CHECK(g2.deg() == 1);
}

TEST_CASE("powmod and frobmod") {
  Field F3 = FieldCtx::get(3, 1);
  Poly mod = Poly::from_ints(F3, {1, 0, 2, 1});  // irreducible cubic
  Poly x = Poly::x(F3);
  CHECK(Poly::powmod(x, 27, mod) == Poly::frobmod(x, 3, mod));
  CHECK(Poly::frobmod(x, 3, mod) == x % mod);  // x^(q^3) = x in F27
  Rng rng(31);
  for (int it = 0; it < 20; ++it) {
    Poly a = rand_poly(F3, 2, rng);
    // Frobenius is additive on the residue ring
    Poly b = rand_poly(F3, 2, rng);
    CHECK(Poly::frobmod(a + b, 1, mod) ==
          (Poly::frobmod(a, 1, mod) + Poly::frobmod(b, 1, mod)) % mod);
  }
}

TEST_CASE("squarefree and irreducible detection") {
  Field F3 = FieldCtx::get(3, 1);
  Poly f = Poly::from_ints(F3, {1, 1});
  CHECK((f * f).is_squarefree() == false);
  CHECK(f.is_squarefree());
  CHECK(Poly::from_ints(F3, {1, 0, 2, 1}).is_irreducible());
  CHECK(!Poly::from_ints(F3, {1, 0, 0, 1}).is_irreducible());  // x^3+1=(x+1)^3
  // x^2+1 irreducible over F3 but not over F5
  CHECK(Poly::from_ints(F3, {1, 0, 1}).is_irreducible());
  CHECK(!Poly::from_ints(FieldCtx::get(5, 1), {1, 0, 1}).is_irreducible());
}

TEST_CASE("distinct-degree split of x^5+1 over F3") {
  // x^5+1 = (x+1)(x^4+2x^3+x^2+2x+1), the quartic irreducible.
  Field F3 = FieldCtx::get(3, 1);
  Poly f = Poly::from_ints(F3, {1, 0, 0, 0, 0, 1});
  auto ddf = f.distinct_degree_factors();
  REQUIRE(ddf.size() == 2);
  CHECK(ddf[0].first == 1);
  CHECK(ddf[0].second == Poly::from_ints(F3, {1, 1}));
  CHECK(ddf[1].first == 4);
  CHECK(ddf[1].second == Poly::from_ints(F3, {1, 2, 1, 2, 1}));
}

TEST_CASE("factor is a deterministic full factorization") {
  Field k = FieldCtx::get(3, 2);
  Rng rng(37);
  for (int it = 0; it < 25; ++it) {
    Poly f = rand_poly(k, 1 + int(rng.below(6)), rng);
    if (f.is_zero()) continue;
    auto fac = f.factor();
    Poly prod = Poly(k, {f.lc()});
    for (auto& [g, e] : fac) {
      CHECK(g.lc().is_one());
      CHECK(g.is_irreducible());
      for (int i = 0; i < e; ++i) prod = prod * g;
    }
    CHECK(prod == f);
    for (size_t i = 1; i < fac.size(); ++i)
      CHECK(Poly::cmp(fac[i - 1].first, fac[i].first) < 0);
    CHECK(f.factor() == fac);  // rerun is identical
  }
}

TEST_CASE("roots agree with evaluation") {
  Field k = FieldCtx::get(3, 3);
  Rng rng(41);
  for (int it = 0; it < 15; ++it) {
    Poly f = rand_poly(k, 1 + int(rng.below(5)), rng);
    if (f.is_zero()) continue;
    auto rts = f.roots();
    uint64_t nroots = 0;
    for (uint64_t i = 0; i < k->q(); ++i)
      if (f.eval(k->element_at(i)).is_zero()) ++nroots;
    uint64_t listed = 0;
    for (auto& [r, mult] : rts) {
      CHECK(f.eval(r).is_zero());
      CHECK(mult >= 1);
      ++listed;
    }
    CHECK(listed == nroots);
    for (size_t i = 1; i < rts.size(); ++i)
      CHECK(rts[i - 1].first.index() < rts[i].first.index());
  }
  // multiplicity: (x-1)^2 * x over F27
  Poly g = Poly::from_ints(k, {2, 1}) * Poly::from_ints(k, {2, 1}) * Poly::x(k);
  auto rts = g.roots();
  REQUIRE(rts.size() == 2);
  CHECK(rts[0].first.is_zero());
  CHECK(rts[0].second == 1);
  CHECK(rts[1].first.is_one());
  CHECK(rts[1].second == 2);
}

TEST_CASE("order_of_x gives the root order in the extension") {
  Field F3 = FieldCtx::get(3, 1);
  // canonical F27 modulus: root has some order dividing 26
  Poly m27 = Poly::from_ints(F3, {1, 0, 2, 1});
  uint64_t ord = m27.order_of_x();
  CHECK(26 % ord == 0);
  CHECK(Poly::powmod(Poly::x(F3), ord, m27) == Poly::from_ints(F3, {1}));
  // x^2+1 over F3: root is a 4th root of unity
  CHECK(Poly::from_ints(F3, {1, 0, 1}).order_of_x() == 4);
}
