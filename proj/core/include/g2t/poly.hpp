#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "g2t/field.hpp"

namespace g2t {

// Dense univariate polynomials over a finite field.  The zero polynomial has
// degree -1.  Coefficients are stored constant term first and kept trimmed.
class Poly {
public:
  Poly() : k_(nullptr) {}
  explicit Poly(Field k) : k_(k) {}
  Poly(Field k, std::vector<Fe> c) : k_(k), c_(std::move(c)) { trim(); }

  static Poly from_ints(Field k, const std::vector<int64_t>& c);
  static Poly x(Field k);  // the monomial x

  Field field() const { return k_; }
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe lc() const;
  // Coefficient access beyond the degree yields zero.
  Fe coeff(int i) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Fe& c) const;
  Poly shifted(int k) const;  // multiply by x^k

  Poly monic() const;
  // Euclidean division by a nonzero divisor: *this = q * d + r, deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const;
  Poly operator%(const Poly& d) const;
  // Exact division; throws Internal if the remainder is nonzero.
  Poly exact_div(const Poly& d) const;

  Fe eval(const Fe& x) const;
  Poly derivative() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Canonical order: by degree, then coefficient tuples from the constant up.
  static int cmp(const Poly& a, const Poly& b);

  // Monic gcd; gcd(0, 0) is an error.
  static Poly gcd(Poly a, Poly b);
  // g = gcd monic, and g = u*a + v*b.
  static Poly egcd(const Poly& a, const Poly& b, Poly& u, Poly& v);

  static Poly powmod(Poly base, uint64_t e, const Poly& mod);
  // base^(q^j) mod `mod`, one field-size power at a time.
  static Poly frobmod(Poly base, uint32_t j, const Poly& mod);

  bool is_squarefree() const;
  bool is_irreducible() const;

  // Distinct-degree split of a squarefree monic polynomial: pairs (d, g_d)
  // where g_d is the product of all irreducible factors of degree d,
  // ascending in d, omitting trivial parts.
  std::vector<std::pair<int, Poly>> distinct_degree_factors() const;

  // Full factorization into monic irreducibles with multiplicity, ascending
  // in the canonical order.  Deterministic output.
  std::vector<std::pair<Poly, int>> factor() const;

  // Roots with multiplicity, ascending in the canonical element order.
  // Exhaustive scan; fields larger than 2^20 are rejected (FieldTooLarge).
  std::vector<std::pair<Fe, int>> roots() const;

  // Roots without the field size cap (equal-degree splitting); used by the
  // embedding machinery.  No multiplicities.
  std::vector<Fe> roots_any_size() const;

  // Multiplicative order of x modulo *this; requires irreducible *this with
  // nonzero constant term.  This is the order of a root in the extension.
  uint64_t order_of_x() const;

private:
  void trim();
  Field k_;
  std::vector<Fe> c_;
};

}  // namespace g2t
