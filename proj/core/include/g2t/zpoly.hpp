#pragma once

#include <vector>

#include <gmpxx.h>

namespace g2t {

// Dense integer polynomials, constant term first, trimmed.  Degree of the
// zero polynomial is -1.  Coefficients are exact (GMP).
class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
  static ZPoly from_ints(const std::vector<long>& v);

  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int i) const;
  mpz_class lc() const;

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator-() const;

  // Exact division; asserts divisibility.
  ZPoly exact_div(const ZPoly& d) const;
  // Pseudo-remainder based test: does d divide *this exactly over Z?
  bool divides_into(const ZPoly& f) const;

  mpz_class eval(const mpz_class& x) const;
  ZPoly derivative() const;

  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  static int cmp(const ZPoly& a, const ZPoly& b);

  // Resultant via Sylvester matrix with Bareiss elimination (exact).
  static mpz_class resultant(const ZPoly& a, const ZPoly& b);
  mpz_class discriminant() const;

private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace g2t
