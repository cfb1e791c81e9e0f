#pragma once

#include <string>
#include <vector>

#include "g2t/curve.hpp"
#include "g2t/weil.hpp"

namespace g2t {

// Symbolic classification of J(F_{q^m})[ell] from base-level Weil data.
// `rank` is dim_{F_ell} of the ell-torsion; -1 when the symbolic route is
// inconclusive and the arithmetic oracle has to decide (oracle_needed).
struct TorsionReport {
  uint64_t ell = 0;
  uint32_t m = 1;
  mpz_class order;     // |J(F_{q^m})|
  uint64_t k = 0;      // ord(q mod ell): where the pairing values live
  int rank = -1;
  std::string theorem;  // "none", "nondegenerate-cyclic",
                        // "nondegenerate-bicyclic", "degenerate-bicyclic",
                        // "degenerate-full"
  bool oracle_needed = false;
  KappaInfo kappa;  // full ell-torsion field degree over the base
  std::vector<std::string> warnings;
};

// Requires base.m == 1 and ell an odd prime different from p.  Dispatch:
// no ell-torsion at level m -> rank 0; ell | q-1 -> oracle;
// ell not dividing 4*tau_m -> cyclic (bicyclic when mu_ell is rational at
// level m); otherwise the trace-degenerate route, valid when every
// Frobenius field is unramified at ell.
TorsionReport classify_torsion(const Weil& base, uint32_t m, uint64_t ell);

// Degree over the base field of the field of definition of all of J[2]:
// the splitting field of f, read off the distinct-degree factorization.
uint32_t two_torsion_field_degree(const Curve& c);

// Symbolic bound D with J[2] rational over F_{q^D}: D = 4m when s is even,
// 6m when s is odd.  Requires odd characteristic (EvenCharacteristic) and
// even group order at level m (OrderOdd).  The exact splitting degree above
// always divides this bound.
uint32_t two_torsion_field_bound(const Weil& base, uint32_t m);

// Nondegeneracy certificate hypotheses for the pairing on J(F_{q^k})[ell]:
// applicable iff ell is an odd prime with ell | P(1), ell != p and
// ell not dividing q - 1; k is then the embedding degree ord(q mod ell).
struct NondegCert {
  bool applicable = false;
  uint64_t k = 0;
};
NondegCert pairing_nondegeneracy_applicable(const Weil& w, uint64_t ell);

}  // namespace g2t
