#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "g2t/errors.hpp"

namespace g2t {

// Finite fields F_{p^a} with p odd or 2, a <= 12, p^a < 2^31.
//
// A field is a shared immutable context; elements carry a pointer to it plus
// a fixed-size coefficient array over F_p, constant term first.  The defining
// modulus is canonical: the lexicographically least monic irreducible of
// degree a over F_p, comparing coefficient tuples (c0, c1, ..., c_{a-1}).
// For a = 1 the modulus is x and elements are plain residues.
//
// The canonical order on elements compares coefficient tuples (c0 first).
// element_at/index convert between an element and its rank in that order.

inline constexpr uint32_t kMaxFieldDeg = 12;
inline constexpr uint64_t kMaxFieldSize = uint64_t(1) << 31;

class FieldCtx;
using Field = const FieldCtx*;

class Fe {
public:
  Fe() : k_(nullptr) { c_.fill(0); }
  Fe(Field k, const std::array<uint32_t, kMaxFieldDeg>& c) : k_(k), c_(c) {}

  Field field() const { return k_; }
  bool is_zero() const;
  bool is_one() const;

  Fe operator+(const Fe& o) const;
  Fe operator-(const Fe& o) const;
  Fe operator-() const;
  Fe operator*(const Fe& o) const;
  Fe inv() const;
  Fe pow(uint64_t e) const;

  // x^(p^j), the j-fold absolute Frobenius.
  Fe frob(uint32_t j) const;

  // -1 non-residue, 0 zero, +1 residue.
  int legendre() const;
  // Square root if one exists (Tonelli-Shanks); nullopt encoded as ok=false.
  bool sqrt(Fe& out) const;

  bool operator==(const Fe& o) const { return k_ == o.k_ && c_ == o.c_; }
  bool operator!=(const Fe& o) const { return !(*this == o); }
  // Canonical order: coefficient tuples, constant term first.
  bool operator<(const Fe& o) const;

  uint32_t coeff(uint32_t i) const { return c_[i]; }
  std::vector<uint32_t> coeffs() const;
  uint64_t index() const;
  size_t hash() const;

private:
  friend class FieldCtx;
  Field k_;
  std::array<uint32_t, kMaxFieldDeg> c_;
};

class FieldCtx {
public:
  // Memoized; returned pointer is valid for the process lifetime.
  static Field get(uint64_t p, uint32_t a);

  uint64_t p() const { return p_; }
  uint32_t a() const { return a_; }
  uint64_t q() const { return q_; }
  // Monic defining modulus, coefficients c0..ca with ca = 1.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  Fe zero() const;
  Fe one() const;
  Fe from_int(int64_t v) const;  // image of an integer (prime subfield)
  Fe from_coeffs(const std::vector<uint32_t>& c) const;
  // The class of x in F_p[x]/(modulus); zero when a = 1.
  Fe gen() const;
  // Inverse of Fe::index: the idx-th element in canonical order.
  Fe element_at(uint64_t idx) const;

  // Least quadratic non-residue in canonical order (p odd).
  Fe nonresidue() const;

  bool is_subfield_of(Field big) const;
  // Embed x (an element of this field) into big; a() must divide big->a()
  // and p must match.  The generator maps to the least root of this field's
  // modulus in big, so embeddings compose consistently.
  Fe embed(const Fe& x, Field big) const;

private:
  friend class Fe;
  FieldCtx(uint64_t p, uint32_t a);

  uint64_t p_;
  uint32_t a_;
  uint64_t q_;
  std::vector<uint32_t> mod_;  // length a+1
  // Precomputed: q - 1 = 2^two_val * odd_part, and a non-residue for sqrt.
  uint32_t two_val_;
  uint64_t odd_part_;
  mutable bool nonres_ready_ = false;
  mutable std::array<uint32_t, kMaxFieldDeg> nonres_{};
};

}  // namespace g2t
