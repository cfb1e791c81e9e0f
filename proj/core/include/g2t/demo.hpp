#pragma once

#include <cstdint>
#include <vector>

#include "g2t/analysis.hpp"
#include "g2t/curve.hpp"
#include "g2t/oracle.hpp"

namespace g2t {

// End-to-end run of the torsion machinery on the isogeny class with
// (s, t) = (2, 7) over F_3 and ell = 5: symbolic classification across
// F_{3^m} for m = 1..4, cross-checked level by level against the
// enumeration oracle, plus the full-torsion field degree both ways and a
// pairing nondegeneracy certificate at that level.
struct DemoLevel {
  uint32_t m = 0;
  mpz_class order;
  TorsionReport symbolic;
  int oracle_rank = -1;
  std::vector<mpz_class> structure;  // invariant factors, ascending
  bool agree = false;
};

struct DemoReport {
  Curve curve;                 // first matching curve in search order
  bool quintic_exists = true;  // false: only the general sextic model works
  std::vector<DemoLevel> levels;
  uint64_t kappa_symbolic = 0;
  bool kappa_exact = false;
  uint32_t kappa_measured = 0;
  int pairing_rank = 0;  // rank of the Tate Gram matrix on J[5] at level kappa
  bool agree = false;    // every cross-check above is consistent
};

DemoReport run_f3_demo(uint64_t seed = 0);

}  // namespace g2t
