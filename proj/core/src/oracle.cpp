#include "g2t/oracle.hpp"

#include <algorithm>
#include <map>

#include "g2t/intutil.hpp"
#include "g2t/poly.hpp"

namespace g2t {

std::vector<mpz_class> group_structure(const Jac& J) {
  auto all = J->enumerate();
  mpz_class N(all.size());
  if (N == 1) return {};
  // Per prime p | N: lambda profile of the p-Sylow part from the counts
  // #{D : p^i D = 0} = p^{sum_t min(lambda_t, i)}.
  std::map<uint64_t, std::vector<int>> lambdas;  // prime -> parts, descending
  for (auto& [pz, e] : factor_mpz(N)) {
    uint64_t p = mpz_get_ui(pz.get_mpz_t());
    mpz_class cof = N;
    for (int i = 0; i < e; ++i) cof /= p;
    // j-th entry: number of Sylow elements of order dividing p^j.
    std::vector<uint64_t> cnt(size_t(e) + 1, 0);
    for (auto& d : all) {
      Div x = J->mul(d, cof);  // lands in the p-Sylow part
      int j = 0;
      while (!J->is_identity(x)) {
        x = J->mul(x, p);
        ++j;
        G2T_CHECK(j <= e, "Sylow order exceeds its exponent bound");
      }
      for (int i = j; i <= e; ++i) ++cnt[size_t(i)];
    }
    // r_j = log_p(cnt_j / cnt_{j-1}) = #{parts >= j}; conjugating r back
    // recovers the parts themselves, in descending order.
    std::vector<int> r;
    for (int j = 1; j <= e && cnt[size_t(j)] > cnt[size_t(j - 1)]; ++j) {
      uint64_t ratio = cnt[size_t(j)] / cnt[size_t(j - 1)];
      G2T_CHECK(cnt[size_t(j)] % cnt[size_t(j - 1)] == 0, "count ratio not integral");
      int lg = 0;
      while (ratio > 1) {
        G2T_CHECK(ratio % p == 0, "count ratio not a prime power");
        ratio /= p;
        ++lg;
      }
      r.push_back(lg);
    }
    std::vector<int> parts;
    for (int t = 1; !r.empty() && t <= r[0]; ++t) {
      int c = 0;
      for (int rj : r)
        if (rj >= t) ++c;
      parts.push_back(c);
    }
    lambdas[p] = parts;
  }
  size_t rank = 0;
  for (auto& [p, parts] : lambdas) rank = std::max(rank, parts.size());
  std::vector<mpz_class> inv(rank, 1);
  // Align the largest parts across primes: inv[0] is the largest factor.
  for (auto& [p, parts] : lambdas)
    for (size_t i = 0; i < parts.size(); ++i) {
      mpz_class pp;
      mpz_ui_pow_ui(pp.get_mpz_t(), p, uint32_t(parts[i]));
      inv[i] *= pp;
    }
  std::reverse(inv.begin(), inv.end());
  mpz_class prod = 1;
  for (auto& d : inv) prod *= d;
  G2T_CHECK(prod == N, "invariant factor product mismatch");
  for (size_t i = 1; i < inv.size(); ++i)
    G2T_CHECK(mpz_divisible_p(inv[i].get_mpz_t(), inv[i - 1].get_mpz_t()),
              "invariant factors must form a divisibility chain");
  return inv;
}

int ell_torsion_rank_enumerated(const Jac& J, uint64_t ell) {
  G2T_CHECK(ell >= 2, "ell must be a prime");
  uint64_t cnt = 0;
  for (auto& d : J->enumerate())
    if (J->is_identity(J->mul(d, mpz_class(ell)))) ++cnt;
  int r = 0;
  while (cnt > 1) {
    G2T_CHECK(cnt % ell == 0, "torsion count must be a power of ell");
    cnt /= ell;
    ++r;
  }
  return r;
}

namespace {

// Multiplies into the Sylow part and peels to a point of J[ell] (or the
// identity if the sample had trivial Sylow component).
Div peel_to_ell(const Jac& J, const Div& d, const mpz_class& cofactor, uint64_t ell) {
  Div x = J->mul(d, cofactor);
  if (J->is_identity(x)) return x;
  for (;;) {
    Div y = J->mul(x, mpz_class(ell));
    if (J->is_identity(y)) return x;
    x = std::move(y);
  }
}

}  // namespace

int ell_torsion_rank_sampled(const Jac& J, const mpz_class& group_order,
                             uint64_t ell, Rng& rng, int stall) {
  TorsionBasis b = torsion_basis(J, group_order, ell, rng, stall);
  return b.rank();
}

TorsionBasis torsion_basis(const Jac& J, const mpz_class& group_order,
                           uint64_t ell, Rng& rng, int stall) {
  G2T_CHECK(ell >= 2 && is_prime64(ell), "ell must be prime");
  mpz_class cof = group_order;
  int e = 0;
  while (mpz_divisible_ui_p(cof.get_mpz_t(), ell)) {
    cof /= ell;
    ++e;
  }
  TorsionBasis B;
  B.span.push_back(J->identity());
  B.coord.emplace(J->identity(), 0);
  if (e == 0) return B;
  int quiet = 0;
  while (quiet < stall && B.rank() < 4) {
    Div P = peel_to_ell(J, J->random(rng), cof, ell);
    if (J->is_identity(P) || B.coord.count(P)) {
      ++quiet;
      continue;
    }
    uint64_t cur = B.span.size();
    if (cur * ell > kSpanCap) fail(Err::ExceedsCap, "span table cap exceeded");
    B.span.reserve(size_t(cur * ell));
    Div step = P;
    for (uint64_t c = 1; c < ell; ++c) {
      for (uint64_t i = 0; i < cur; ++i) {
        Div nd = J->add(B.span[size_t(i)], step);
        B.coord.emplace(nd, uint32_t(B.span.size()));
        B.span.push_back(std::move(nd));
      }
      if (c + 1 < ell) step = J->add(step, P);
    }
    B.basis.push_back(P);
    quiet = 0;
  }
  G2T_CHECK(B.span.size() == B.coord.size(), "span table collision");
  return B;
}

FrobMat frobenius_matrix(const Jac& J, uint32_t j, const TorsionBasis& B, uint64_t ell) {
  FrobMat M;
  M.rank = B.rank();
  M.ell = ell;
  M.m.assign(size_t(M.rank) * size_t(M.rank), 0);
  for (int c = 0; c < M.rank; ++c) {
    Div im = J->frobenius(B.basis[size_t(c)], j);
    auto it = B.coord.find(im);
    if (it == B.coord.end())
      fail(Err::BasisNotInvariant, "Frobenius image escapes the span table");
    uint64_t idx = it->second;
    for (int r = 0; r < M.rank; ++r) {
      M.m[size_t(c) * size_t(M.rank) + size_t(r)] = uint32_t(idx % ell);
      idx /= ell;
    }
  }
  return M;
}

std::vector<uint64_t> frobmat_charpoly(const FrobMat& M) {
  Field L = FieldCtx::get(M.ell, 1);
  int n = M.rank;
  // det(X*I - M) by Laplace expansion over F_ell[X]; n <= 4 keeps this tiny.
  std::vector<std::vector<Poly>> A(static_cast<size_t>(n),
                                   std::vector<Poly>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Poly e = Poly::from_ints(L, {-int64_t(M.at(r, c))});
      if (r == c) e = e + Poly::x(L);
      A[size_t(r)][size_t(c)] = e;
    }
  std::vector<int> cols(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cols[size_t(i)] = i;
  auto det = [&](auto&& self, std::vector<int> cs, int row) -> Poly {
    if (cs.empty()) return Poly::from_ints(L, {1});
    Poly acc(L);
    for (size_t i = 0; i < cs.size(); ++i) {
      std::vector<int> rest;
      for (size_t t = 0; t < cs.size(); ++t)
        if (t != i) rest.push_back(cs[t]);
      Poly term = A[size_t(row)][size_t(cs[i])] * self(self, rest, row + 1);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  Poly cp = det(det, cols, 0);
  std::vector<uint64_t> out(size_t(n) + 1, 0);
  for (int i = 0; i <= cp.deg(); ++i) out[size_t(i)] = cp.coeff(i).coeff(0);
  G2T_CHECK(out[size_t(n)] == 1, "characteristic polynomial must be monic");
  return out;
}

uint32_t full_embedding_degree_measured(const Curve& c, uint64_t ell, Rng& rng) {
  G2T_CHECK(ell >= 3 && is_prime64(ell) && ell % 2 == 1, "ell must be an odd prime");
  if (ell == c.k->p()) fail(Err::InvalidArgument, "ell must differ from the characteristic");
  Weil w = weil_from_curve(c);
  uint64_t k0 = embedding_degree(w, ell);
  for (uint64_t k = k0;; k += k0) {
    uint64_t deg = uint64_t(c.k->a()) * k;
    if (deg > kMaxFieldDeg) fail(Err::ExceedsCap, "scan left the supported field degrees");
    long double size = 1.0L;
    for (uint64_t i = 0; i < deg; ++i) size *= (long double)(c.k->p());
    if (size >= (long double)kMaxFieldSize)
      fail(Err::ExceedsCap, "scan left the supported field sizes");
    Weil wk = frobenius_power(w, uint32_t(k));
    if (!mpz_divisible_ui_p(jac_order(wk).get_mpz_t(), ell)) continue;
    Field K = FieldCtx::get(c.k->p(), uint32_t(deg));
    Jac JK = JacCtx::make(base_change(c, K));
    if (ell_torsion_rank_sampled(JK, jac_order(wk), ell, rng) == 4) return uint32_t(k);
  }
}

namespace {

// Counts points with a precomputed square table for the target field and an
// embedding of the coefficients; shared by the search fast path.
struct Counter {
  Field K;
  std::vector<bool> sq;
  explicit Counter(Field k) : K(k), sq(size_t(k->q()), false) {
    for (uint64_t i = 0; i < K->q(); ++i) {
      Fe z = K->element_at(i);
      sq[size_t((z * z).index())] = true;
    }
  }
  long affine(const Poly& f) const {
    long total = 0;
    for (uint64_t i = 0; i < K->q(); ++i) {
      Fe y2 = f.eval(K->element_at(i));
      if (y2.is_zero())
        total += 1;
      else if (sq[size_t(y2.index())])
        total += 2;
    }
    return total;
  }
};

}  // namespace

std::vector<Curve> search_curves(Field k, const mpz_class& s, const mpz_class& t,
                                 int degree, size_t limit) {
  if (k->q() > kSearchCap) fail(Err::ExceedsCap, "search cap is q <= 13");
  if (k->p() == 2) fail(Err::EvenCharacteristic, "curves require odd characteristic");
  if (degree != 0 && degree != 5 && degree != 6)
    fail(Err::InvalidArgument, "degree filter must be 5, 6, or 0");
  std::vector<Curve> out;
  if (limit == 0) return out;
  // Reject targets that no abelian surface can realize.
  try {
    (void)weil_make(k->p(), k->a(), s, t);
  } catch (const Error&) {
    return out;
  }
  uint64_t q = k->q();
  mpz_class M1 = mpz_class(q) + 1 + s;
  mpz_class M2 = mpz_class(q) * mpz_class(q) + 1 + 2 * t - s * s;
  Field K2 = FieldCtx::get(k->p(), 2 * k->a());
  Counter c1(k), c2(K2);

  auto try_f = [&](const std::vector<Fe>& coeffs) {
    Poly f(k, coeffs);
    if (f.deg() < 5 || !f.is_squarefree()) return;
    bool sextic = f.deg() == 6;
    long a1 = c1.affine(f);
    if (sextic)
      a1 += (f.lc().legendre() == 1) ? 2 : 0;
    else
      a1 += 1;
    if (mpz_class(a1) != M1) return;
    std::vector<Fe> up;
    up.reserve(coeffs.size());
    for (const Fe& c : coeffs) up.push_back(k->embed(c, K2));
    Poly f2(K2, up);
    long a2 = c2.affine(f2);
    if (sextic)
      a2 += (f2.lc().legendre() == 1) ? 2 : 0;
    else
      a2 += 1;
    if (mpz_class(a2) != M2) return;
    out.push_back(curve_make(k, f));
  };

  // Odometer over coefficient tuples (c0, ..., c_{d-1}) in lexicographic
  // order with c0 most significant.
  auto scan = [&](int d, const Fe& lead) {
    std::vector<uint64_t> idx(size_t(d), 0);
    std::vector<Fe> coeffs(size_t(d) + 1, k->zero());
    coeffs[size_t(d)] = lead;
    for (;;) {
      for (int i = 0; i < d; ++i) coeffs[size_t(i)] = k->element_at(idx[size_t(i)]);
      try_f(coeffs);
      if (out.size() >= limit) return;
      int pos = d - 1;
      while (pos >= 0 && ++idx[size_t(pos)] == q) {
        idx[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) return;
    }
  };

  if (degree == 0 || degree == 5) scan(5, k->one());
  if (out.size() >= limit) return out;
  if (degree == 0 || degree == 6) {
    scan(6, k->one());
    if (out.size() >= limit) return out;
    scan(6, k->nonresidue());
  }
  return out;
}

}  // namespace g2t
