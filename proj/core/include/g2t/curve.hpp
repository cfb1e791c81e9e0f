#pragma once

#include <cstdint>

#include "g2t/field.hpp"
#include "g2t/poly.hpp"
#include "g2t/weil.hpp"

namespace g2t {

// A genus-2 curve y^2 = f(x) over an odd-characteristic field.
// Quintic model: deg f = 5, monic.  Sextic model: deg f = 6, lc(f) != 0.
// f squarefree in both cases.
struct Curve {
  enum class Model { quintic, sextic };
  Field k;
  Poly f;
  Model model;

  uint64_t q() const { return k->q(); }
};

// Validates and normalizes.  Throws EvenCharacteristic / InvalidCurve.
Curve curve_make(Field k, const Poly& f);

// True iff the two points at infinity of a sextic model are rational over
// c.k, i.e. lc(f) is a nonzero square.  InvalidArgument on quintic input.
bool sextic_is_split(const Curve& c);

// Same curve with coefficients embedded into an extension of c.k.
Curve base_change(const Curve& c, Field big);

// #C(F_{q^m}) on the smooth projective model.  Affine points by exhaustive
// character sums; at infinity the quintic has one point, the sextic has
// 1 + chi(lc) where chi is the quadratic character of the extension.
// EnumerationTooLarge if q^m exceeds the pinned counting cap.
long count_points(const Curve& c, int m);

constexpr uint64_t kCountCap = uint64_t(1) << 20;

// Weil data at level 1 from point counts over F_q and F_{q^2}.
Weil weil_from_curve(const Curve& c);

}  // namespace g2t
