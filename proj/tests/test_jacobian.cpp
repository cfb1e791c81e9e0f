#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "g2t/curve.hpp"
#include "g2t/errors.hpp"
#include "g2t/field.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/poly.hpp"
#include "g2t/rng.hpp"
#include "g2t/weil.hpp"

using namespace g2t;

namespace {

// one representative curve per arithmetic model
Jac quintic_f3() {
  Field F3 = FieldCtx::get(3, 1);
  return JacCtx::make(curve_make(F3, Poly::from_ints(F3, {0, 2, 1, 1, 2, 1})));
}
Jac split_f3() {
  Field F3 = FieldCtx::get(3, 1);
  return JacCtx::make(curve_make(F3, Poly::from_ints(F3, {1, 0, 2, 1, 2, 0, 1})));
}
Jac inert_f3() {
  Field F3 = FieldCtx::get(3, 1);
  return JacCtx::make(curve_make(F3, Poly::from_ints(F3, {1, 1, 0, 0, 0, 0, 2})));
}
Jac split_f5() {
  Field F5 = FieldCtx::get(5, 1);
  return JacCtx::make(curve_make(F5, Poly::from_ints(F5, {1, 0, 0, 1, 0, 2, 4})));
}

std::vector<Jac> all_models() {
  return {quintic_f3(), split_f3(), inert_f3(), split_f5()};
}

Poly lift(const Poly& f, Field big) {
  std::vector<Fe> c;
  for (int i = 0; i <= f.deg(); ++i)
    c.push_back(f.field()->embed(f.coeff(i), big));
  return Poly(big, std::move(c));
}

}  // namespace

TEST_CASE("enumerate lists each class once and matches the zeta order") {
  for (Jac J : all_models()) {
    auto all = J->enumerate();
    mpz_class expect = jac_order(weil_from_curve(J->curve()));
    CHECK(mpz_class(all.size()) == expect);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) REQUIRE(all[i] != all[j]);
    // every listed element validates
    for (auto& d : all) CHECK(J->on_jacobian(d.u, d.v, d.n));
    // identity is listed
    CHECK(std::count(all.begin(), all.end(), J->identity()) == 1);
  }
}

TEST_CASE("group axioms hold exhaustively") {
  for (Jac J : all_models()) {
    auto all = J->enumerate();
    Div id = J->identity();
    CHECK(J->is_identity(id));
    for (auto& a : all) {
      CHECK(J->add(a, id) == a);
      CHECK(J->is_identity(J->add(a, J->neg(a))));
      CHECK(std::find(all.begin(), all.end(), J->neg(a)) != all.end());
    }
    // closure + commutativity over all pairs
    for (auto& a : all)
      for (auto& b : all) {
        Div s = J->add(a, b);
        REQUIRE(J->on_jacobian(s.u, s.v, s.n));
        REQUIRE(J->add(b, a) == s);
      }
  }
}

TEST_CASE("associativity on random triples") {
  for (Jac J : all_models()) {
    Rng rng(101);
    for (int it = 0; it < 40; ++it) {
      Div a = J->random(rng), b = J->random(rng), c = J->random(rng);
      CHECK(J->add(J->add(a, b), c) == J->add(a, J->add(b, c)));
      CHECK(J->sub(a, b) == J->add(a, J->neg(b)));
    }
  }
}

TEST_CASE("scalar multiplication agrees with repeated addition") {
  for (Jac J : {split_f3(), quintic_f3()}) {
    Rng rng(7);
    for (int it = 0; it < 10; ++it) {
      Div a = J->random(rng);
      Div acc = J->identity();
      for (int e = 0; e <= 12; ++e) {
        CHECK(J->mul(a, e) == acc);
        acc = J->add(acc, a);
      }
      CHECK(J->mul(a, -5) == J->neg(J->mul(a, 5)));
    }
  }
}

TEST_CASE("order is the exact exponent of each class") {
  for (Jac J : all_models()) {
    mpz_class n = jac_order(weil_from_curve(J->curve()));
    auto all = J->enumerate();
    for (auto& a : all) {
      mpz_class ord = J->order(a, n);
      CHECK(n % ord == 0);
      CHECK(J->is_identity(J->mul(a, ord)));
      // minimality over the prime divisors of ord
      mpz_class r = ord;
      for (mpz_class d = 2; d * d <= r; ++d) {
        if (r % d != 0) continue;
        CHECK(!J->is_identity(J->mul(a, ord / d)));
        while (r % d == 0) r /= d;
      }
      if (r > 1) CHECK(!J->is_identity(J->mul(a, ord / r)));
    }
  }
}

TEST_CASE("make_div validates membership and the balance band") {
  Jac J = quintic_f3();
  Field F3 = J->field();
  try {
    (void)J->make_div(Poly::from_ints(F3, {0, 0, 1}), Poly::from_ints(F3, {1}), 0);
    FAIL("v^2 != f mod u must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotOnJacobian);
  }
  // quintic model has no balance freedom
  auto all = J->enumerate();
  for (auto& d : all)
    if (d.u.deg() == 2) {
      CHECK_THROWS_AS((void)J->make_div(d.u, d.v, 1), Error);
      break;
    }
  // split model: (1, 0, 0) is the class oo- - oo+, not the identity
  Jac S = split_f3();
  Field k = S->field();
  Div w = S->make_div(Poly::from_ints(k, {1}), Poly(k), 0);
  CHECK(!S->is_identity(w));
  mpz_class ord = S->order(w, 25);
  CHECK((ord == 5 || ord == 25));
}

TEST_CASE("mumford_v_solutions is exhaustive and sorted") {
  Jac J = split_f3();
  auto all = J->enumerate();
  for (auto& d : all) {
    if (d.u.deg() < 1) continue;
    auto sols = J->mumford_v_solutions(d.u);
    CHECK(std::count(sols.begin(), sols.end(), d.v) == 1);
    CHECK(sols.size() <= (d.u.deg() == 1 ? 2 : 4));
    for (size_t i = 1; i < sols.size(); ++i)
      CHECK(Poly::cmp(sols[i - 1], sols[i]) < 0);
    for (auto& v : sols) {
      CHECK(v.deg() < d.u.deg());
      CHECK(((J->f() - v * v) % d.u).is_zero());
    }
  }
}

TEST_CASE("split branch polynomial approximates f to low degree") {
  Jac S = split_f3();
  const Poly& h = S->hplus();
  CHECK(h.deg() == 3);
  CHECK((S->f() - h * h).deg() <= 2);
  CHECK_THROWS_AS((void)quintic_f3()->hplus(), Error);
}

TEST_CASE("add_traced returns the same sum as add") {
  for (Jac J : {split_f3(), quintic_f3(), split_f5()}) {
    Rng rng(13);
    for (int it = 0; it < 30; ++it) {
      Div a = J->random(rng), b = J->random(rng);
      AddTrace tr;
      Div s = J->add_traced(a, b, tr);
      CHECK(s == J->add(a, b));
      CHECK(!tr.d.is_zero());
    }
  }
}

TEST_CASE("base change to F9: order, frobenius action") {
  Jac J3 = split_f3();
  Field F9 = FieldCtx::get(3, 2);
  Jac J9 = JacCtx::make(base_change(J3->curve(), F9));
  auto all9 = J9->enumerate();
  CHECK(all9.size() == 225);  // P_2(1) for (s,t) = (2,7)

  Rng rng(19);
  for (int it = 0; it < 40; ++it) {
    Div a = J9->random(rng), b = J9->random(rng);
    // Frobenius is an additive endomorphism
    CHECK(J9->frobenius(J9->add(a, b), 1) ==
          J9->add(J9->frobenius(a, 1), J9->frobenius(b, 1)));
    // q-power Frobenius fixes rational classes
    CHECK(J9->frobenius(a, 2) == a);
    // conjugate classes share their order
    CHECK(J9->order(J9->frobenius(a, 1), 225) == J9->order(a, 225));
  }

  // classes lifted from J(F3) are fixed by the p-power Frobenius
  for (auto& d : J3->enumerate()) {
    Div lifted = J9->make_div(lift(d.u, F9), lift(d.v, F9), d.n);
    CHECK(J9->frobenius(lifted, 1) == lifted);
  }
}

TEST_CASE("inert model classes are fixed by Frobenius and well ordered") {
  Jac J = inert_f3();
  auto all = J->enumerate();
  for (auto& d : all) {
    CHECK(J->frobenius(d, 1) == d);
    CHECK((d.n == 0));
    CHECK((J->is_identity(d) || d.u.deg() == 2));
  }
}

TEST_CASE("random sampling is close to uniform") {
  Jac J = split_f3();
  auto all = J->enumerate();
  REQUIRE(all.size() == 25);
  std::vector<int> hits(all.size(), 0);
  Rng rng(42);
  const int draws = 1000;
  for (int it = 0; it < draws; ++it) {
    Div d = J->random(rng);
    auto at = std::find(all.begin(), all.end(), d);
    REQUIRE(at != all.end());
    ++hits[size_t(at - all.begin())];
  }
  double chi2 = 0, expect = double(draws) / double(all.size());
  for (int h : hits) {
    CHECK(h > 0);
    chi2 += (h - expect) * (h - expect) / expect;
  }
  CHECK(chi2 < 60.0);  // df = 24; far beyond any plausible tail
}

TEST_CASE("enumeration cap is enforced") {
  Jac J3 = split_f3();
  Field big = FieldCtx::get(3, 6);  // q = 729 > cap
  Jac Jbig = JacCtx::make(base_change(J3->curve(), big));
  try {
    (void)Jbig->enumerate();
    FAIL("enumeration past the cap must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Err::EnumerationTooLarge);
  }
}
