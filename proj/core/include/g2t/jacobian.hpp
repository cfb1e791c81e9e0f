#pragma once

#include <gmpxx.h>

#include <memory>
#include <unordered_map>
#include <vector>

#include "g2t/curve.hpp"
#include "g2t/poly.hpp"
#include "g2t/rng.hpp"

namespace g2t {

// Reduced divisor class on the Jacobian of a genus-2 curve, in Mumford form
// (u, v, n): u monic with deg u <= 2, deg v < deg u, u | f - v^2.
//
//   quintic model   D = A(u,v) - (deg u) * infty.  n = 0 always.
//   split sextic    D = A(u,v) + n*oo+ + (2 - deg u - n)*oo- - (oo+ + oo-),
//                   with 0 <= n <= 2 - deg u (the balanced band).  Every
//                   class has exactly one such representative.
//   inert sextic    rational classes are the identity (u = 1, n = 0) and the
//                   pairs (u, v) with deg u = 2, n = 0.
//
// A(u,v) is the affine divisor cut out by u(x) = 0, y = v(x).
struct Div {
  Poly u;
  Poly v;
  int n = 0;

  bool operator==(const Div& o) const { return u == o.u && v == o.v && n == o.n; }
  bool operator!=(const Div& o) const { return !(*this == o); }
};

struct DivHash {
  size_t operator()(const Div& d) const;
};

// One reduction step contributes the function (y - vt) / uh.
struct AddStep {
  Poly vt;
  Poly uh;
};

// Exact principal-divisor ledger of one group operation:
//   D1 + D2 - D3 = div( d(x) * prod_i (y - vt_i) / uh_i )
// as divisors (affine and infinite parts both exact).  Evaluating the right
// side on a degree-zero divisor avoiding all supports is what Miller's
// algorithm needs.
struct AddTrace {
  Poly d;
  std::vector<AddStep> steps;
};

class JacCtx;
using Jac = std::shared_ptr<const JacCtx>;

class JacCtx {
public:
  enum class Model { quintic, split, inert };

  static Jac make(const Curve& c);

  Model model() const { return model_; }
  const Curve& curve() const { return c_; }
  Field field() const { return c_.k; }
  const Poly& f() const { return c_.f; }
  // Split model only: the degree-3 square-root branch h+ of f attached to
  // oo+, i.e. deg(f - h+^2) <= 2.  ModelUnsupported otherwise.
  const Poly& hplus() const;

  Div identity() const;
  bool is_identity(const Div& d) const;

  // Validated constructor for external input; throws NotOnJacobian.
  Div make_div(const Poly& u, const Poly& v, int n) const;
  bool on_jacobian(const Poly& u, const Poly& v, int n) const;

  Div add(const Div& a, const Div& b) const;
  Div add_traced(const Div& a, const Div& b, AddTrace& tr) const;
  Div neg(const Div& a) const;
  Div sub(const Div& a, const Div& b) const;
  Div mul(const Div& a, const mpz_class& e) const;
  // Order of a class given any positive multiple of it (factored internally).
  mpz_class order(const Div& a, const mpz_class& multiple) const;

  // The p^j-power Frobenius applied to a class.  Requires the curve
  // coefficients to be fixed by it (they are whenever the curve was base
  // changed from a subfield F_{p^b} with b | j).
  Div frobenius(const Div& d, uint32_t j) const;

  // All v with deg v < deg u and u | f - v^2, for monic u of degree 1 or 2,
  // ascending in the canonical order.  At most 2 solutions in degree 1 and
  // at most 4 in degree 2.
  std::vector<Poly> mumford_v_solutions(const Poly& u) const;

  // Every rational class, ascending by (deg u, u, v, n).  The group order
  // equals jac_order of the curve's Weil data; enumeration requires
  // q <= kEnumCap.
  std::vector<Div> enumerate() const;

  // Exactly uniform over rational classes: each class owns one slot in a
  // fixed rejection grid.
  Div random(Rng& rng) const;

private:
  explicit JacCtx(const Curve& c);

  Div cantor(const Div& a, const Div& b, AddTrace* tr) const;
  Div reduce(Poly u, Poly v, int n_abs, AddTrace* tr) const;
  int eplus(const Poly& vt) const;

  Div embed_div(const Div& d) const;    // inert: rational class into engine
  Div descend_div(const Div& d) const;  // inert: engine class back down

  Curve c_;
  Model model_;
  Poly hp_;  // split: h+, deg 3
  Poly fr_;  // split: f - h+^2, deg in [0, 2], nonzero
  Jac engine_;  // inert: split Jacobian over the quadratic extension
  std::unordered_map<uint64_t, uint64_t> descend_;  // engine index -> base index
};

inline constexpr uint64_t kEnumCap = 256;

}  // namespace g2t
