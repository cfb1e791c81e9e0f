#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "g2t/weil.hpp"

namespace g2t {

// The nine supersingular (s, t) classes over F_q containing Jacobians,
// matched together with their side conditions on p and on A = a*m (the
// exponent with q = p^A).  `number` is 0 when nothing matches.
struct SSCase {
  int number = 0;
  int exponent = 0;     // E: J[ell^inf] is F_{q^E}-rational for admissible ell
  int rank = 0;         // predicted dim J(F_q)[ell] for admissible odd ell | P(1)
  std::string shape;    // "cyclic" or "bicyclic"
  uint64_t shape_excludes = 0;  // the shape/rank prediction skips this prime
  uint64_t check_excludes = 0;  // congruence checks skip this prime entirely
};

SSCase supersingular_match(const Weil& w);

// Verifies the case's congruences for q modulo every odd prime ell | P(1)
// with ell != p (minus the per-case exclusions) and reports each relation.
// CongruenceFailure if any relation fails; InvalidArgument when w does not
// match a supersingular case.
struct SSReport {
  SSCase c;
  mpz_class order;                       // P(1)
  std::vector<uint64_t> ells;            // primes actually checked
  std::vector<std::string> congruences;  // one verified relation per line
};
SSReport supersingular_report(const Weil& w);

// For a matched class and a prime ell > 3, ell != p: the full ell-torsion
// field degree divides the case exponent (always <= 24) and the ell-rank
// stays <= 2 over every extension.  EllTooSmall when ell <= 3.
struct SSBound {
  int exponent = 0;
  int rank_bound = 2;
};
SSBound supersingular_exponent_bound(const Weil& w, uint64_t ell);

}  // namespace g2t
