#include "g2t/curve.hpp"

#include "g2t/errors.hpp"

namespace g2t {

Curve curve_make(Field k, const Poly& f) {
  if (k->p() == 2) fail(Err::EvenCharacteristic, "curves require odd characteristic");
  if (f.field() != k) fail(Err::InvalidArgument, "curve polynomial over wrong field");
  int d = f.deg();
  if (d != 5 && d != 6) fail(Err::InvalidCurve, "deg f must be 5 or 6");
  if (d == 5 && !f.lc().is_one()) fail(Err::InvalidCurve, "quintic model must be monic");
  if (!f.is_squarefree()) fail(Err::InvalidCurve, "f must be squarefree");
  return Curve{k, f, d == 5 ? Curve::Model::quintic : Curve::Model::sextic};
}

bool sextic_is_split(const Curve& c) {
  if (c.model != Curve::Model::sextic)
    fail(Err::InvalidArgument, "split test applies to sextic models only");
  return c.f.lc().legendre() == 1;
}

Curve base_change(const Curve& c, Field big) {
  if (!c.k->is_subfield_of(big))
    fail(Err::NoSubfield, "base change target is not an extension");
  std::vector<Fe> cc;
  cc.reserve(size_t(c.f.deg()) + 1);
  for (int i = 0; i <= c.f.deg(); ++i) cc.push_back(c.k->embed(c.f.coeff(i), big));
  return Curve{big, Poly(big, std::move(cc)), c.model};
}

long count_points(const Curve& c, int m) {
  if (m < 1) fail(Err::InvalidArgument, "extension level must be >= 1");
  uint64_t qm = 1;
  for (int i = 0; i < m; ++i) {
    qm *= c.q();
    if (qm > kCountCap) fail(Err::EnumerationTooLarge, "point count field too large");
  }
  Field K = FieldCtx::get(c.k->p(), c.k->a() * m);
  Curve cK = (m == 1) ? c : base_change(c, K);

  // Mark squares of F_K by index; f(x) contributes 1 + chi(f(x)) points.
  std::vector<bool> sq(size_t(K->q()), false);
  for (uint64_t i = 0; i < K->q(); ++i) {
    Fe z = K->element_at(i);
    sq[size_t((z * z).index())] = true;
  }
  long total = 0;
  for (uint64_t i = 0; i < K->q(); ++i) {
    Fe y2 = cK.f.eval(K->element_at(i));
    if (y2.is_zero())
      total += 1;
    else if (sq[size_t(y2.index())])
      total += 2;
  }
  if (c.model == Curve::Model::quintic) {
    total += 1;
  } else {
    Fe lc = cK.f.lc();
    total += sq[size_t(lc.index())] ? 2 : 0;
  }
  return total;
}

Weil weil_from_curve(const Curve& c) {
  long m1 = count_points(c, 1);
  long m2 = count_points(c, 2);
  return weil_from_counts(mpz_class(m1), mpz_class(m2), c.k->p(), c.k->a());
}

}  // namespace g2t
