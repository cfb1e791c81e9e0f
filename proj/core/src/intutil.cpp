#include "g2t/intutil.hpp"

#include <algorithm>
#include <map>

namespace g2t {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((__uint128_t)a * b % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic witness set below 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

uint64_t brent_rho(uint64_t n) {
  // n composite, odd, not a prime power of a small prime.
  if (n % 2 == 0) return 2;
  uint64_t c = 1;
  for (;;) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod64(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        uint64_t ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod64(y, y, n) + c) % n;
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        d = gcd64(q, n);
        if (d == n) {
          // Backtrack one step at a time.
          d = 1;
          y = ys;
          for (int i = 0; i < lim; ++i) {
            y = (mulmod64(y, y, n) + c) % n;
            uint64_t g = gcd64(x > y ? x - y : y - x, n);
            if (g > 1) {
              d = g;
              break;
            }
          }
          if (d == 1) d = n;  // cycle degenerate for this c, try another
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_rec(uint64_t n, std::map<uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime64(n)) {
    out[n]++;
    return;
  }
  uint64_t d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor64(uint64_t n) {
  G2T_CHECK(n != 0, "factor64: zero");
  std::map<uint64_t, int> acc;
  for (uint64_t p = 2; p < (1u << 20) && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      acc[p]++;
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, acc);
  return {acc.begin(), acc.end()};
}

uint64_t mult_order64(uint64_t a, uint64_t n) {
  G2T_CHECK(n > 1 && gcd64(a % n, n) == 1, "mult_order64: not a unit");
  G2T_CHECK(is_prime64(n), "mult_order64: modulus must be prime");
  uint64_t e = n - 1;
  for (auto [p, k] : factor64(n - 1)) {
    (void)k;
    while (e % p == 0 && powmod64(a, e / p, n) == 1) e /= p;
  }
  return e;
}

std::vector<std::pair<uint64_t, int>> factor_trial_mpz(const mpz_class& n,
                                                       uint64_t bound,
                                                       mpz_class& cofactor) {
  G2T_CHECK(n != 0, "factor_trial_mpz: zero");
  mpz_class m = abs(n);
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.emplace_back(p, e);
    }
    if (m == 1) break;
    if (mpz_cmp_ui(m.get_mpz_t(), 1) > 0) {
      mpz_class psq;
      mpz_ui_pow_ui(psq.get_mpz_t(), p, 2);
      if (psq > m) break;  // remaining cofactor is prime
    }
  }
  if (m > 1 && m.fits_ulong_p() && is_prime64(m.get_ui())) {
    out.emplace_back(m.get_ui(), 1);
    m = 1;
  }
  cofactor = m;
  return out;
}

std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n) {
  mpz_class cof;
  auto small = factor_trial_mpz(n, 1u << 20, cof);
  std::vector<std::pair<mpz_class, int>> out;
  for (auto [p, e] : small) out.emplace_back(mpz_class(p), e);
  if (cof > 1) {
    if (!cof.fits_ulong_p())
      fail(Err::ExceedsCap, "factor_mpz: cofactor exceeds 64 bits");
    for (auto [p, e] : factor64(cof.get_ui())) out.emplace_back(mpz_class(p), e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmp_int_vs_sqrt(const mpz_class& A, const mpz_class& C, const mpz_class& Q) {
  G2T_CHECK(Q >= 0, "cmp_int_vs_sqrt: negative radicand");
  // sign of A - C*sqrt(Q)
  if (C == 0 || Q == 0) return sgn(A);
  if (C > 0 && A <= 0) return -1;
  if (C < 0 && A >= 0) return 1;
  // A and C share the sign here; compare squares.
  mpz_class lhs = A * A, rhs = C * C * Q;
  int cs = cmp(lhs, rhs);
  if (cs == 0) return 0;
  bool positive_side = (A > 0);
  return positive_side ? (cs > 0 ? 1 : -1) : (cs > 0 ? -1 : 1);
}

mpz_class squarefree_kernel(const mpz_class& n) {
  G2T_CHECK(n != 0, "squarefree_kernel: zero");
  auto fac = factor_mpz(n);
  mpz_class k = sgn(n);
  for (auto& [p, e] : fac)
    if (e & 1) k *= p;
  return k;
}

}  // namespace g2t
