#include "g2t/demo.hpp"

#include "g2t/errors.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/pairing.hpp"
#include "g2t/weil.hpp"

namespace g2t {

DemoReport run_f3_demo(uint64_t seed) {
  Field F3 = FieldCtx::get(3, 1);
  const mpz_class s = 2, t = 7;
  const uint64_t ell = 5;

  DemoReport rep;
  rep.quintic_exists = !search_curves(F3, s, t, 5, 1).empty();
  auto found = search_curves(F3, s, t, 6, 1);
  G2T_CHECK(!found.empty(), "the (2,7) class must be realizable by a sextic");
  rep.curve = found[0];

  Weil base = weil_from_curve(rep.curve);
  Rng rng(seed);
  bool ok = !rep.quintic_exists;

  for (uint32_t m = 1; m <= 4; ++m) {
    DemoLevel lv;
    lv.m = m;
    lv.symbolic = classify_torsion(base, m, ell);
    lv.order = lv.symbolic.order;
    Field Km = FieldCtx::get(3, m);
    Jac Jm = JacCtx::make(base_change(rep.curve, Km));
    lv.oracle_rank = ell_torsion_rank_enumerated(Jm, ell);
    lv.structure = group_structure(Jm);
    mpz_class prod = 1;
    for (const auto& d : lv.structure) prod *= d;
    lv.agree = (prod == lv.order) && !lv.symbolic.oracle_needed &&
               lv.symbolic.rank == lv.oracle_rank;
    ok = ok && lv.agree;
    rep.levels.push_back(std::move(lv));
  }

  KappaInfo ki = symbolic_full_embedding_degree(base, ell);
  rep.kappa_symbolic = ki.kappa;
  rep.kappa_exact = ki.exact;
  rep.kappa_measured = full_embedding_degree_measured(rep.curve, ell, rng);
  ok = ok && ki.exact && ki.kappa == rep.kappa_measured;

  // Pairing certificate on the full torsion at level kappa.
  Field Kk = FieldCtx::get(3, rep.kappa_measured);
  Jac Jk = JacCtx::make(base_change(rep.curve, Kk));
  Weil wk = frobenius_power(base, rep.kappa_measured);
  TorsionBasis B = torsion_basis(Jk, jac_order(wk), ell, rng);
  rep.pairing_rank = pairing_gram(Jk, B, ell, PairKind::tate, rng).rank;
  ok = ok && rep.pairing_rank == B.rank() && B.rank() == 4;

  rep.agree = ok;
  return rep;
}

}  // namespace g2t
