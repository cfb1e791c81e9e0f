#include "g2t/zpoly.hpp"

#include <algorithm>

#include "g2t/errors.hpp"

namespace g2t {

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::from_ints(const std::vector<long>& v) {
  std::vector<mpz_class> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return ZPoly(std::move(c));
}

const mpz_class& ZPoly::coeff(int i) const {
  static const mpz_class zero = 0;
  if (i < 0 || i >= int(c_.size())) return zero;
  return c_[size_t(i)];
}

mpz_class ZPoly::lc() const {
  G2T_CHECK(!is_zero(), "lc of zero polynomial");
  return c_.back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
  std::vector<mpz_class> r(c_);
  for (auto& x : r) x = -x;
  return ZPoly(std::move(r));
}

ZPoly ZPoly::exact_div(const ZPoly& d) const {
  G2T_CHECK(!d.is_zero(), "division by zero");
  ZPoly r = *this;
  if (r.is_zero()) return r;
  G2T_CHECK(r.deg() >= d.deg(), "exact_div: degree too small");
  std::vector<mpz_class> q(size_t(r.deg() - d.deg() + 1), mpz_class(0));
  while (!r.is_zero() && r.deg() >= d.deg()) {
    mpz_class c = r.lc() / d.lc();
    G2T_CHECK(c * d.lc() == r.lc(), "exact_div: leading term not divisible");
    int sh = r.deg() - d.deg();
    q[size_t(sh)] = c;
    std::vector<mpz_class> sub(size_t(sh), mpz_class(0));
    for (int i = 0; i <= d.deg(); ++i) sub.push_back(c * d.coeff(i));
    r = r - ZPoly(std::move(sub));
  }
  G2T_CHECK(r.is_zero(), "exact_div: nonzero remainder");
  return ZPoly(std::move(q));
}

bool ZPoly::divides_into(const ZPoly& f) const {
  if (is_zero()) return f.is_zero();
  ZPoly r = f;
  while (!r.is_zero() && r.deg() >= deg()) {
    mpz_class c = r.lc() / lc();
    if (c * lc() != r.lc()) return false;
    int sh = r.deg() - deg();
    std::vector<mpz_class> sub(size_t(sh), mpz_class(0));
    for (int i = 0; i <= deg(); ++i) sub.push_back(c * coeff(i));
    r = r - ZPoly(std::move(sub));
  }
  return r.is_zero();
}

mpz_class ZPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (int i = deg(); i >= 0; --i) acc = acc * x + c_[size_t(i)];
  return acc;
}

ZPoly ZPoly::derivative() const {
  if (deg() < 1) return ZPoly();
  std::vector<mpz_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * long(i);
  return ZPoly(std::move(r));
}

int ZPoly::cmp(const ZPoly& a, const ZPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (int i = a.deg(); i >= 0; --i) {
    int c = ::cmp(a.coeff(i), b.coeff(i));
    if (c) return c;
  }
  return 0;
}

mpz_class ZPoly::resultant(const ZPoly& a, const ZPoly& b) {
  int m = a.deg(), n = b.deg();
  G2T_CHECK(m >= 0 && n >= 0, "resultant with zero polynomial");
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.coeff(0).get_mpz_t(), uint64_t(n));
    return r;
  }
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.coeff(0).get_mpz_t(), uint64_t(m));
    return r;
  }
  // Sylvester matrix, (m+n) x (m+n); Bareiss fraction-free elimination keeps
  // all entries integral and the final pivot is the determinant.
  int N = m + n;
  std::vector<std::vector<mpz_class>> M(size_t(N), std::vector<mpz_class>(size_t(N), mpz_class(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[size_t(r)][size_t(r + i)] = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[size_t(n + r)][size_t(r + i)] = b.coeff(n - i);
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[size_t(k)][size_t(k)] == 0) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (M[size_t(r)][size_t(k)] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(M[size_t(k)], M[size_t(piv)]);
      sign = -sign;
    }
    for (int r = k + 1; r < N; ++r) {
      for (int c = k + 1; c < N; ++c) {
        mpz_class t = M[size_t(r)][size_t(c)] * M[size_t(k)][size_t(k)] -
                      M[size_t(r)][size_t(k)] * M[size_t(k)][size_t(c)];
        mpz_divexact(M[size_t(r)][size_t(c)].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      M[size_t(r)][size_t(k)] = 0;
    }
    prev = M[size_t(k)][size_t(k)];
  }
  return sign > 0 ? M[size_t(N - 1)][size_t(N - 1)] : -M[size_t(N - 1)][size_t(N - 1)];
}

mpz_class ZPoly::discriminant() const {
  int n = deg();
  G2T_CHECK(n >= 1, "discriminant needs degree >= 1");
  if (n == 1) return 1;
  mpz_class res = resultant(*this, derivative());
  mpz_class d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), lc().get_mpz_t());
  int s = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return s > 0 ? d : -d;
}

}  // namespace g2t
