#include <doctest.h>

#include <cstdint>
#include <vector>

#include "g2t/errors.hpp"
#include "g2t/field.hpp"
#include "g2t/poly.hpp"
#include "g2t/rng.hpp"

using namespace g2t;

// The canonical tower is part of the determinism contract: curve files and
// report envelopes quote coefficients against exactly these moduli.
TEST_CASE("canonical moduli are pinned") {
  using V = std::vector<uint32_t>;
  CHECK(FieldCtx::get(3, 1)->modulus() == V{0, 1});
  CHECK(FieldCtx::get(3, 2)->modulus() == V{1, 0, 1});
  CHECK(FieldCtx::get(3, 3)->modulus() == V{1, 0, 2, 1});
  CHECK(FieldCtx::get(3, 4)->modulus() == V{1, 0, 1, 1, 1});
  CHECK(FieldCtx::get(3, 5)->modulus() == V{1, 0, 0, 0, 2, 1});
  CHECK(FieldCtx::get(3, 6)->modulus() == V{1, 0, 0, 0, 1, 1, 1});
  CHECK(FieldCtx::get(5, 2)->modulus() == V{1, 1, 1});
  CHECK(FieldCtx::get(7, 2)->modulus() == V{1, 0, 1});
  CHECK(FieldCtx::get(13, 2)->modulus() == V{1, 3, 1});
  CHECK(FieldCtx::get(2, 2)->modulus() == V{1, 1, 1});
}

TEST_CASE("moduli are monic irreducible of the right degree") {
  for (auto [p, a] : {std::pair<uint64_t, uint32_t>{3, 4}, {5, 2}, {7, 2}, {13, 2}, {2, 3}}) {
    Field k = FieldCtx::get(p, a);
    Field base = FieldCtx::get(p, 1);
    REQUIRE(k->modulus().size() == a + 1);
    CHECK(k->modulus().back() == 1);
    std::vector<int64_t> mc;
    for (auto c : k->modulus()) mc.push_back(int64_t(c));
    Poly mod = Poly::from_ints(base, mc);
    auto ddf = mod.distinct_degree_factors();
    REQUIRE(ddf.size() == 1);
    CHECK(ddf[0].first == int(a));
  }
}

TEST_CASE("get is memoized and validated") {
  CHECK(FieldCtx::get(3, 2) == FieldCtx::get(3, 2));
  try {
    (void)FieldCtx::get(4, 1);
    FAIL("composite p accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidArgument);
  }
  CHECK_THROWS_AS((void)FieldCtx::get(3, 0), Error);
  try {
    (void)FieldCtx::get(3, 13);
    FAIL("degree cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidArgument);
  }
  try {
    (void)FieldCtx::get(65521, 2);
    FAIL("size cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Err::FieldTooLarge);
  }
}

TEST_CASE("field axioms hold on samples") {
  for (auto [p, a] : {std::pair<uint64_t, uint32_t>{3, 4}, {13, 2}, {7, 1}}) {
    Field k = FieldCtx::get(p, a);
    Rng rng(7);
    Fe zero = k->zero(), one = k->one();
    CHECK(zero.is_zero());
    CHECK(one.is_one());
    for (int it = 0; it < 200; ++it) {
      Fe x = k->element_at(rng.below(k->q()));
      Fe y = k->element_at(rng.below(k->q()));
      Fe z = k->element_at(rng.below(k->q()));
      CHECK(x + y == y + x);
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + zero == x);
      CHECK(x * one == x);
      CHECK((x - x).is_zero());
      if (!x.is_zero()) {
        CHECK((x * x.inv()).is_one());
        CHECK(x.pow(k->q() - 1).is_one());
      }
    }
  }
}

TEST_CASE("element_at and index are inverse bijections") {
  Field k = FieldCtx::get(3, 4);
  std::vector<bool> seen(k->q(), false);
  for (uint64_t i = 0; i < k->q(); ++i) {
    Fe x = k->element_at(i);
    CHECK(x.index() == i);
    REQUIRE(!seen[i]);
    seen[i] = true;
  }
}

TEST_CASE("gen is the residue of x") {
  // a = 1 is excluded: there the class of x is zero by construction
  for (auto [p, a] : {std::pair<uint64_t, uint32_t>{3, 4}, {5, 2}, {7, 2}}) {
    Field k = FieldCtx::get(p, a);
    Field base = FieldCtx::get(p, 1);
    Fe g = k->gen();
    // gen is a root of the defining modulus
    Fe acc = k->zero(), pw = k->one();
    for (uint32_t c : k->modulus()) {
      acc = acc + pw * k->from_int(int64_t(c));
      pw = pw * g;
    }
    CHECK(acc.is_zero());
    // its multiplicative order agrees with the polynomial layer
    std::vector<int64_t> mc(k->modulus().begin(), k->modulus().end());
    uint64_t ord = Poly::from_ints(base, mc).order_of_x();
    CHECK(g.pow(ord).is_one());
    for (uint64_t d = 2; d < ord; ++d)
      if (ord % d == 0) CHECK(!g.pow(ord / d).is_one());
  }
}

TEST_CASE("legendre, sqrt and nonresidue") {
  for (auto [p, a] : {std::pair<uint64_t, uint32_t>{3, 4}, {5, 2}, {7, 1}}) {
    Field k = FieldCtx::get(p, a);
    uint64_t squares = 0;
    for (uint64_t i = 0; i < k->q(); ++i) {
      Fe x = k->element_at(i);
      int chi = x.legendre();
      Fe pw = x.pow((k->q() - 1) / 2);
      Fe r;
      if (x.is_zero()) {
        CHECK(chi == 0);
        CHECK(x.sqrt(r));
        CHECK(r.is_zero());
      } else if (pw.is_one()) {
        CHECK(chi == 1);
        ++squares;
        REQUIRE(x.sqrt(r));
        CHECK(r * r == x);
      } else {
        CHECK(chi == -1);
        CHECK(!x.sqrt(r));
      }
    }
    CHECK(squares == (k->q() - 1) / 2);
    CHECK(k->nonresidue().legendre() == -1);
  }
}

TEST_CASE("frobenius is the p-power field automorphism") {
  Field k = FieldCtx::get(3, 4);
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    Fe x = k->element_at(rng.below(k->q()));
    Fe y = k->element_at(rng.below(k->q()));
    CHECK(x.frob(1) == x.pow(3));
    CHECK((x + y).frob(1) == x.frob(1) + y.frob(1));
    CHECK((x * y).frob(2) == x.frob(2) * y.frob(2));
    CHECK(x.frob(4) == x);           // q-power fixes the field
    CHECK(x.frob(1).frob(3) == x);   // composition wraps
  }
  // F_p elements are fixed by every power
  for (uint64_t c = 0; c < 3; ++c) CHECK(k->from_int(c).frob(1) == k->from_int(c));
}

TEST_CASE("subfield embeddings are ring maps") {
  Field F9 = FieldCtx::get(3, 2);
  Field F81 = FieldCtx::get(3, 4);
  Field F27 = FieldCtx::get(3, 3);
  CHECK(F9->is_subfield_of(F81));
  CHECK(!F27->is_subfield_of(F81));
  Rng rng(11);
  for (int it = 0; it < 100; ++it) {
    Fe x = F9->element_at(rng.below(9));
    Fe y = F9->element_at(rng.below(9));
    Fe ex = F9->embed(x, F81), ey = F9->embed(y, F81);
    CHECK(ex.field() == F81);
    CHECK(F9->embed(x + y, F81) == ex + ey);
    CHECK(F9->embed(x * y, F81) == ex * ey);
  }
  // embedding preserves the base field pointwise
  for (uint64_t c = 0; c < 3; ++c)
    CHECK(F9->embed(F9->from_int(int64_t(c)), F81) == F81->from_int(int64_t(c)));
  try {
    (void)F27->embed(F27->one(), F81);
    FAIL("embedding F27 into F81 must fail");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NoSubfield);
  }
}

TEST_CASE("characteristic 2 has no quadratic nonresidue") {
  Field F4 = FieldCtx::get(2, 2);
  try {
    (void)F4->nonresidue();
    FAIL("squaring is bijective in characteristic 2");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Unimplemented);
  }
}

TEST_CASE("from_coeffs validates") {
  Field F9 = FieldCtx::get(3, 2);
  CHECK(F9->from_coeffs({1, 2}).index() == 1 * 3 + 2);  // constant digit first
  CHECK_THROWS_AS((void)F9->from_coeffs({3, 0}), Error);
  CHECK_THROWS_AS((void)F9->from_coeffs({0, 0, 1}), Error);
}
