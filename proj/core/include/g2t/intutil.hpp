#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "g2t/errors.hpp"

namespace g2t {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m);
uint64_t gcd64(uint64_t a, uint64_t b);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime64(uint64_t n);

// Full factorization, trial division below 2^20 then Brent's rho.
// Returns (prime, exponent) pairs with primes ascending.
std::vector<std::pair<uint64_t, int>> factor64(uint64_t n);

// Multiplicative order of a modulo n. Requires gcd(a, n) = 1 and a factorable
// group order; n prime is the intended use.
uint64_t mult_order64(uint64_t a, uint64_t n);

// Generic order computation: ord(g) in a group where ord divides `multiple`.
// mul(x, y) and is_id(x) define the group, `sq` starts at g.
template <typename T, typename Mul, typename IsId>
uint64_t order_dividing(const T& g, uint64_t multiple, Mul&& mul, IsId&& is_id,
                        const T& id) {
  auto powt = [&](const T& base, uint64_t e) {
    T acc = id;
    T b = base;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  };
  G2T_CHECK(is_id(powt(g, multiple)), "order_dividing: multiple is not a multiple");
  uint64_t e = multiple;
  for (auto [p, k] : factor64(multiple)) {
    (void)k;
    while (e % p == 0 && is_id(powt(g, e / p))) e /= p;
  }
  return e;
}

// Trial division of |n| by primes below `bound`. Returns factored part as
// (prime, exponent) pairs and sets `cofactor` to the unfactored remainder
// (1 if fully factored). Sign of n is ignored; n must be nonzero.
std::vector<std::pair<uint64_t, int>> factor_trial_mpz(const mpz_class& n,
                                                       uint64_t bound,
                                                       mpz_class& cofactor);

// Full factorization of |n| when it fits in 64 bits after trial division;
// throws ExceedsCap otherwise. Primes ascending.
std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n);

// Exact sign of A - C*sqrt(Q) for integers A, C and Q >= 0: -1, 0, or +1.
int cmp_int_vs_sqrt(const mpz_class& A, const mpz_class& C, const mpz_class& Q);

// Squarefree kernel of nonzero n, keeping the sign: n = s^2 * kernel.
mpz_class squarefree_kernel(const mpz_class& n);

}  // namespace g2t
