#pragma once

// Exact arithmetic in L = Q(zeta_p) for a prime p = 3k + 1, together with the
// Galois action, the fixed field K of the order-3 subgroup <d> and the
// decomposition of L as a 3-dimensional K-space with basis {1, zeta, zeta^2}.
//
// Elements are stored in the power basis {1, zeta, ..., zeta^(p-2)}. zeta^(p-1)
// is always rewritten as -(1 + zeta + ... + zeta^(p-2)).

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sbcert/rational.hpp"

namespace sbcert {

namespace detail {
struct FieldData;
}

class FieldElem;

bool is_prime(std::int64_t n);

class CycloField {
 public:
  /// Validates p (prime, p = 1 mod 3, p >= 7) and precomputes the fixed-field
  /// data. Throws NotPrime or WrongResidue.
  static CycloField make(std::int64_t p);

  std::int64_t p() const;
  /// Smallest t in {2, ..., p-1} with t^3 = 1 mod p.
  std::int64_t d() const;
  std::int64_t k() const;
  /// Dimension of L over Q, p - 1.
  std::size_t degree() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_rational(const Rational& q) const;
  FieldElem from_coords(std::vector<Rational> coords) const;
  /// zeta^e for any integer e (reduced mod p).
  FieldElem zeta_pow(std::int64_t e) const;
  FieldElem zeta() const;

  /// Gaussian periods eta_j: sums of zeta^m over the cosets of <d> in (Z/p)*,
  /// cosets taken in order of their smallest unused residue.
  std::vector<FieldElem> gaussian_periods() const;
  /// The cosets underlying gaussian_periods(), each listed as (c, c*d, c*d^2).
  const std::vector<std::array<std::int64_t, 3>>& period_cosets() const;

  friend bool operator==(const CycloField& x, const CycloField& y) { return x.p() == y.p(); }

 private:
  explicit CycloField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;

  friend class FieldElem;
  friend std::array<FieldElem, 3> decompose_over_K(const FieldElem& x);
  friend std::vector<Rational> period_coordinates(const FieldElem& x);
};

class FieldElem {
 public:
  const CycloField& field() const { return field_; }
  std::span<const Rational> coords() const { return coords_; }
  const Rational& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_rational() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const Rational& c, const FieldElem& x);
  /// x * y^-1; throws DivisionByZero when y = 0.
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);

  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.field_ == y.field_ && x.coords_ == y.coords_;
  }
  /// Lexicographic order on coordinates; only meaningful within one field.
  friend bool operator<(const FieldElem& x, const FieldElem& y);

 private:
  FieldElem(CycloField field, std::vector<Rational> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {}

  CycloField field_;
  std::vector<Rational> coords_;

  friend class CycloField;
  friend FieldElem apply_aut(std::int64_t t, const FieldElem& x);
  friend FieldElem inverse_by_linear_solve(const FieldElem& x);
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

/// Multiplicative inverse through Galois norms: x^-1 = sigma(x) sigma^2(x) / N_{L/K}(x),
/// with the K-element N_{L/K}(x) inverted through its conjugates over Q.
/// Throws DivisionByZero.
FieldElem inverse(const FieldElem& x);
inline FieldElem reciprocal(const FieldElem& x) { return inverse(x); }

/// Inverse via the extended Euclidean algorithm against Phi_p over Q.
FieldElem inverse_by_euclid(const FieldElem& x);

/// Inverse obtained by solving the (p-1)x(p-1) rational system for
/// multiplication by x. Kept as an independent route for cross-checks.
FieldElem inverse_by_linear_solve(const FieldElem& x);

/// The automorphism zeta -> zeta^t. Throws BadResidue if p | t.
FieldElem apply_aut(std::int64_t t, const FieldElem& x);

/// sigma^n(x) where sigma = apply_aut(d, .); n may be negative.
FieldElem sigma_pow(std::int64_t n, const FieldElem& x);
inline FieldElem sigma(const FieldElem& x) { return sigma_pow(1, x); }

/// N_{L/K}(x) = x * sigma(x) * sigma^2(x).
FieldElem relative_norm(const FieldElem& x);

/// N_{L/Q}(x), the determinant of multiplication by x on L.
Rational absolute_norm(const FieldElem& x);

/// True iff sigma(x) = x.
bool is_in_K(const FieldElem& x);

/// Writes x = k0 + k1*zeta + k2*zeta^2 with every k_i in K. Throws
/// SingularBasis if the precomputed K-basis turns out to be degenerate.
std::array<FieldElem, 3> decompose_over_K(const FieldElem& x);

/// Coordinates of (k0, k1, k2) from decompose_over_K in the Gaussian-period
/// basis, concatenated: k_i = sum_j c[i*k + j] * eta_j.
std::vector<Rational> period_coordinates(const FieldElem& x);

/// Multiplicative order of t modulo p, p prime and p not dividing t.
std::int64_t multiplicative_order(std::int64_t t, std::int64_t p);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

}  // namespace sbcert
