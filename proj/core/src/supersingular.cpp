#include "g2t/supersingular.hpp"

#include "g2t/errors.hpp"
#include "g2t/intutil.hpp"

namespace g2t {

SSCase supersingular_match(const Weil& w) {
  SSCase out;
  uint64_t A = uint64_t(w.a) * w.m;
  const mpz_class& q = w.Q;
  const mpz_class& s = w.s;
  const mpz_class& t = w.t;
  bool aodd = A % 2 == 1;
  uint64_t p = w.p;
  auto set = [&](int num, int E, int rk, const char* sh, uint64_t sx, uint64_t cx) {
    out.number = num;
    out.exponent = E;
    out.rank = rk;
    out.shape = sh;
    out.shape_excludes = sx;
    out.check_excludes = cx;
  };
  if (s == 0) {
    if (t == 0) {
      if ((aodd && p != 2) || (!aodd && p % 8 != 1)) set(1, 4, 1, "cyclic", 2, 0);
    } else if (t == q) {
      if (aodd) set(2, 6, 1, "cyclic", 0, 0);
    } else if (t == -q) {
      if ((aodd && p != 3) || (!aodd && p % 12 != 1)) set(3, 6, 1, "cyclic", 3, 0);
    } else if (t == -2 * q) {
      if (aodd) set(7, 2, 2, "bicyclic", 2, 0);
    } else if (t == 2 * q) {
      if (!aodd && p % 4 == 1) set(8, 2, 2, "bicyclic", 2, 0);
    }
    return out;
  }
  mpz_class s2 = s * s;
  if (t == q) {
    // The q != 1 congruence cannot hold at ell = 5 when q = 1 (mod 5), which
    // the side condition on p does not rule out for even A; skip 5 outright.
    if (!aodd && s2 == q && p % 5 != 1)
      set(4, 10, 1, "cyclic", 5, 5);
    else if (aodd && p == 2 && s2 == 2 * q)
      set(6, 24, 1, "cyclic", 0, 0);
  } else if (t == 3 * q) {
    if (aodd && p == 5 && s2 == 5 * q)
      set(5, 10, 1, "cyclic", 0, 0);
    else if (!aodd && s2 == 4 * q && p % 3 == 1)
      set(9, 3, 2, "bicyclic", 3, 3);
  }
  return out;
}

namespace {

std::string rel_str(uint64_t ell, const char* what, bool holds) {
  std::string s = "ell=" + std::to_string(ell) + ": " + what;
  s += holds ? " holds" : " FAILS";
  return s;
}

}  // namespace

SSReport supersingular_report(const Weil& w) {
  SSReport rep;
  rep.c = supersingular_match(w);
  if (rep.c.number == 0)
    fail(Err::InvalidArgument, "Weil data does not match a supersingular class");
  rep.order = jac_order(w);

  for (const auto& [fz, e] : factor_mpz(rep.order)) {
    uint64_t ell = mpz_get_ui(fz.get_mpz_t());
    (void)e;
    if (ell == 2 || ell == w.p || ell == rep.c.check_excludes) continue;
    rep.ells.push_back(ell);
    uint64_t qm = mpz_fdiv_ui(w.Q.get_mpz_t(), ell);
    auto qpow = [&](uint64_t k) { return powmod64(qm, k, ell); };
    auto push = [&](const char* what, bool holds) {
      rep.congruences.push_back(rel_str(ell, what, holds));
      if (!holds) fail(Err::CongruenceFailure, rep.congruences.back());
    };
    switch (rep.c.number) {
      case 1:
        push("-q^2 == 1 (mod ell)", qpow(2) == ell - 1);
        push("q^4 == 1 (mod ell)", qpow(4) == 1);
        break;
      case 2:
        push("q^3 == 1 (mod ell)", qpow(3) == 1);
        if (ell != 3) push("q != 1 (mod ell)", qm != 1);
        break;
      case 3:
        push("q^3 == -1 (mod ell)", qpow(3) == ell - 1);
        push("q^6 == 1 (mod ell)", qpow(6) == 1);
        break;
      case 4:
      case 5:
        push("q != 1 (mod ell)", qm != 1);
        push("q^5 == 1 (mod ell)", qpow(5) == 1);
        break;
      case 6:
        push("q^6 == -1 (mod ell)", qpow(6) == ell - 1);
        push("q^12 == 1 (mod ell)", qpow(12) == 1);
        break;
      case 7:
        push("q == 1 (mod ell)", qm == 1);
        break;
      case 8:
        push("q == -1 (mod ell)", qm == ell - 1);
        break;
      case 9:
        push("q != 1 (mod ell)", qm != 1);
        push("q^3 == 1 (mod ell)", qpow(3) == 1);
        break;
      default:
        fail(Err::Internal, "unreachable supersingular case");
    }
  }
  return rep;
}

SSBound supersingular_exponent_bound(const Weil& w, uint64_t ell) {
  SSCase c = supersingular_match(w);
  if (c.number == 0)
    fail(Err::InvalidArgument, "Weil data does not match a supersingular class");
  if (ell <= 3) fail(Err::EllTooSmall, "the exponent bound needs ell > 3");
  if (!is_prime64(ell) || ell == w.p)
    fail(Err::InvalidArgument, "ell must be a prime different from p");
  SSBound b;
  b.exponent = c.exponent;
  b.rank_bound = 2;
  return b;
}

}  // namespace g2t
