#pragma once

#include <unordered_map>
#include <vector>

#include "g2t/jacobian.hpp"
#include "g2t/weil.hpp"

namespace g2t {

// Brute-force ground truth for the symbolic classification: everything here
// works from group arithmetic alone.

// Invariant factors d_1 | d_2 | ... of J(F) (ascending), by full enumeration.
// Empty for the trivial group.
std::vector<mpz_class> group_structure(const Jac& J);

// Exact dim_{F_ell} J(F)[ell] by full enumeration.
int ell_torsion_rank_enumerated(const Jac& J, uint64_t ell);

// Monte-Carlo rank: uniform samples are pushed into the ell-Sylow subgroup,
// peeled down to J[ell], and accumulated in a span table.  Stops after
// `stall` consecutive samples that do not grow the span.  The result is a
// lower bound that is exact except with probability ~ ell^-stall.
int ell_torsion_rank_sampled(const Jac& J, const mpz_class& group_order,
                             uint64_t ell, Rng& rng, int stall = 64);

struct TorsionBasis {
  std::vector<Div> basis;  // independent generators of J(F)[ell]
  std::vector<Div> span;   // all ell^rank combinations; the coordinates of
                           // span[i] are the base-ell digits of i
  std::unordered_map<Div, uint32_t, DivHash> coord;  // inverse of span
  int rank() const { return int(basis.size()); }
};

inline constexpr uint64_t kSpanCap = uint64_t(1) << 20;

// Basis and span table of J(F)[ell] (sampling; same stall rule as above).
TorsionBasis torsion_basis(const Jac& J, const mpz_class& group_order,
                           uint64_t ell, Rng& rng, int stall = 64);

// Matrix of the p^j-power Frobenius on J(F)[ell]: column i holds the span
// coordinates of frobenius(basis[i]).  BasisNotInvariant if an image is
// missing from the span table (the symptom of an underestimated rank).
struct FrobMat {
  int rank = 0;
  uint64_t ell = 0;
  std::vector<uint32_t> m;  // rank x rank, column-major
  uint32_t at(int r, int c) const { return m[size_t(c) * size_t(rank) + size_t(r)]; }
};
FrobMat frobenius_matrix(const Jac& J, uint32_t j, const TorsionBasis& B, uint64_t ell);

// det(X*I - M) over F_ell, coefficients c_0..c_rank with c_rank = 1.
std::vector<uint64_t> frobmat_charpoly(const FrobMat& M);

// Least k with dim J(F_{q^k})[ell] = 4, scanning multiples of
// ord(q mod ell); ExceedsCap when the scan leaves the supported field sizes.
uint32_t full_embedding_degree_measured(const Curve& c, uint64_t ell, Rng& rng);

inline constexpr uint64_t kSearchCap = 13;

// Exhaustive search for curves over k with Weil data (s, t), in a fixed
// deterministic order: monic quintics by coefficient tuples (c0 most
// significant), then sextics with lc = 1, then sextics with lc = nonresidue.
// degree filters to 5 or 6; 0 means both.  Stops after `limit` matches.
std::vector<Curve> search_curves(Field k, const mpz_class& s, const mpz_class& t,
                                 int degree, size_t limit);

}  // namespace g2t
