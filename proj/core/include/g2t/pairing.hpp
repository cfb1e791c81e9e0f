#pragma once

#include <cstdint>
#include <vector>

#include "g2t/jacobian.hpp"
#include "g2t/oracle.hpp"
#include "g2t/rng.hpp"

namespace g2t {

// Reduced Tate pairing t(x, y) = f_x(E_y)^{(q-1)/ell} in mu_ell, computed
// with Miller's algorithm over the exact addition traces.  Requires ell an
// odd prime with ell | q - 1 (PreconditionViolated otherwise) and x an
// ell-torsion class.  E_y = A(S) - A(R) with R random and S = y + R, both
// with degree-2 affine part, so E_y lies in the class of y and avoids every
// infinite place; support collisions are retried (SupportCollision after 16
// attempts).  For the inert model the computation runs over the quadratic
// extension and the value is pulled back to the base field.
Fe tate_pairing(const Jac& J, const Div& x, const Div& y, uint64_t ell, Rng& rng);

// Weil-type pairing  e(x, y) = t(x, -y) / t(y, -x):  the genuine Weil
// pairing composed with the automorphism z -> z^{-(q-1)/ell} of mu_ell.
// Bilinear, alternating, Galois-equivariant and exactly as (non)degenerate
// as the Weil pairing, provided ell^2 does not divide q - 1
// (PreconditionViolated otherwise -- the exponent would kill mu_ell).
// Both arguments must be ell-torsion.
Fe weil_pairing(const Jac& J, const Div& x, const Div& y, uint64_t ell, Rng& rng);

// Deterministic generator of mu_ell in K: the first element z in the
// canonical enumeration order with z^{(q-1)/ell} != 1, raised to that power.
Fe mu_generator(Field K, uint64_t ell);

// Discrete log in mu_ell by exhaustion; InvalidArgument if v is outside
// the subgroup generated by gen.
uint64_t mu_dlog(const Fe& gen, const Fe& v, uint64_t ell);

enum class PairKind { tate, weil };

inline constexpr uint64_t kPairingEnumCap = 10000;

// Literal nondegeneracy: every nonzero x in the span of B pairs nontrivially
// with some y there.  No bilinearity is assumed.  ExceedsCap when the span
// is larger than kPairingEnumCap.
bool pairing_nondegenerate_exhaustive(const Jac& J, const TorsionBasis& B,
                                      uint64_t ell, PairKind kind, Rng& rng);

// Gram matrix of the pairing on the basis of B, as discrete logs against the
// deterministic mu_ell generator, with its rank over F_ell.  The pairing is
// nondegenerate on the span iff rank == B.rank().
struct GramInfo {
  int rank = 0;
  std::vector<uint64_t> gram;  // row-major, rank x rank
};
GramInfo pairing_gram(const Jac& J, const TorsionBasis& B, uint64_t ell,
                      PairKind kind, Rng& rng);

}  // namespace g2t
