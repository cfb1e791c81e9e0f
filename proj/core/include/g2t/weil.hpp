#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "g2t/poly.hpp"
#include "g2t/zpoly.hpp"

namespace g2t {

// Characteristic polynomial of Frobenius for a genus-2 Jacobian over F_Q,
//   P(X) = X^4 + s X^3 + t X^2 + s Q X + Q^2,
// where Q = (p^a)^m.  `m` tracks the level relative to the base field F_{p^a};
// frobenius_power produces the polynomial for the m-fold power of Frobenius.
struct Weil {
  uint64_t p = 0;
  uint32_t a = 0;
  uint32_t m = 1;
  mpz_class Q;
  mpz_class s, t;
};

// Exact integral screen: both roots of X^2 + sX + (t - 2Q) real and within
// [-2 sqrt(Q), 2 sqrt(Q)].  Necessary for (s, t) to come from an actual
// abelian surface; used as the validity gate everywhere.
bool weil_shape_ok(const Weil& w);

// Level-1 constructor; throws InvalidWeil if the shape screen fails.
Weil weil_make(uint64_t p, uint32_t a, const mpz_class& s, const mpz_class& t);

// From point counts over F_q and F_{q^2}: s = M1 - (q+1),
// t = (M2 - (q^2+1) + s^2) / 2.  Throws InvalidWeil on parity failure or if
// the screen rejects the result.
Weil weil_from_counts(const mpz_class& M1, const mpz_class& M2, uint64_t p,
                      uint32_t a);

mpz_class jac_order(const Weil& w);    // P(1) = |J(F_Q)|
mpz_class curve_count(const Weil& w);  // M = Q + 1 + s
mpz_class four_tau(const Weil& w);     // 8Q + s^2 - 4t
mpz_class two_sigma(const Weil& w);    // s

ZPoly weil_zpoly(const Weil& w);

// Characteristic polynomial of the j-th power of this level's Frobenius,
// via Newton power sums (exact).  Result level is m * j.
Weil frobenius_power(const Weil& w, uint32_t j);

// P mod ell, fully factored.  Linear factors are reported as residue roots
// with multiplicity; higher-degree irreducible factors separately.
struct WeilMod {
  std::vector<std::pair<uint64_t, int>> roots;
  std::vector<std::pair<Poly, int>> nonlinear;
  bool squarefree = true;
};
WeilMod reduce_and_factor_mod(const Weil& w, uint64_t ell);

// Irreducible factors of P over Q (content-free, in Z[X]), with multiplicity,
// canonically ordered.  Degrees are 1, 2 or 4; a degree-3 factor cannot occur
// for this shape and is reported as Reducible.
struct NumberField {
  ZPoly minpoly;
  int mult = 1;
};
std::vector<NumberField> rational_factorization(const Weil& w);

enum class Tri { yes, no, inconclusive };

// Is ell unramified in Q[X]/(minpoly)?  Exact for degrees 1 and 2 (via the
// field discriminant of a quadratic); for higher degree, `yes` when ell does
// not divide disc(minpoly) and `inconclusive` otherwise.
Tri unramified_at(const ZPoly& minpoly, uint64_t ell);

// ord(Q mod ell); requires ell prime, ell not dividing Q.
uint64_t embedding_degree(const Weil& w, uint64_t ell);

// Least kappa with J[ell] contained in J(F_{Q^kappa}), computed symbolically
// from P mod ell.  Exact when P mod ell is squarefree (kappa is the lcm of
// the orders of X in the factor algebras) or when the trace-degenerate
// classification applies; otherwise `candidates` lists the possible values
// (kappa0 * ell^e) and kappa holds the least one.
struct KappaInfo {
  bool exact = false;
  uint64_t kappa = 0;
  std::vector<uint64_t> candidates;
};
KappaInfo symbolic_full_embedding_degree(const Weil& w, uint64_t ell);

}  // namespace g2t
