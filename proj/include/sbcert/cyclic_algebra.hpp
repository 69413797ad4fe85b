#pragma once

// The cyclic algebra A = (L/K, sigma, a) of degree 3: the K-algebra generated by
// L and a symbol alpha with alpha^3 = a and lambda * alpha = alpha * sigma(lambda).
//
// An element is stored as x0 + x1*alpha + x2*alpha^2 with coefficients in L on
// the left. Moving alpha past a field element uses alpha * mu = tau(mu) * alpha
// where tau = sigma^-1, which is the defining relation read right to left.

#include <array>
#include <memory>

#include "sbcert/cyclotomic_field.hpp"
#include "sbcert/linalg.hpp"
#include "sbcert/rational.hpp"

namespace sbcert {

class AlgebraElem;

class CyclicAlgebra {
 public:
  /// Throws DivisionByZero if a = 0. Records whether a mod p is a non-cube;
  /// for a that are not p-adic units the flag is false.
  CyclicAlgebra(CycloField field, Rational a);

  const CycloField& field() const { return params_->field; }
  const Rational& a() const { return params_->a; }
  /// True when a is an integer prime to p that is not a cube mod p, so A is a
  /// division algebra.
  bool obstruction_holds() const { return params_->non_cube; }

  AlgebraElem zero() const;
  AlgebraElem one() const;
  AlgebraElem alpha() const;
  AlgebraElem embed_L(const FieldElem& lambda) const;
  AlgebraElem make(FieldElem x0, FieldElem x1, FieldElem x2) const;

  friend bool operator==(const CyclicAlgebra& x, const CyclicAlgebra& y) {
    return x.params_ == y.params_ || (x.field() == y.field() && x.a() == y.a());
  }

 private:
  struct Params {
    CycloField field;
    Rational a;
    bool non_cube;
  };
  std::shared_ptr<const Params> params_;

  friend class AlgebraElem;
};

class AlgebraElem {
 public:
  const CyclicAlgebra& algebra() const { return algebra_; }
  const std::array<FieldElem, 3>& components() const { return x_; }
  const FieldElem& operator[](std::size_t i) const { return x_[i]; }

  bool is_zero() const { return x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero(); }

  /// Throws ParamMismatch for elements of different algebras.
  friend AlgebraElem operator*(const AlgebraElem& x, const AlgebraElem& y);
  friend AlgebraElem operator+(const AlgebraElem& x, const AlgebraElem& y);
  friend AlgebraElem operator-(const AlgebraElem& x, const AlgebraElem& y);
  /// Component-wise scaling. Agrees with embed_L(c) * x only when c lies in K.
  friend AlgebraElem scale(const FieldElem& c, const AlgebraElem& x);

  friend bool operator==(const AlgebraElem& x, const AlgebraElem& y) {
    return x.algebra_ == y.algebra_ && x.x_ == y.x_;
  }
  friend bool operator<(const AlgebraElem& x, const AlgebraElem& y) { return x.x_ < y.x_; }

 private:
  AlgebraElem(CyclicAlgebra algebra, std::array<FieldElem, 3> x)
      : algebra_(std::move(algebra)), x_(std::move(x)) {}

  CyclicAlgebra algebra_;
  std::array<FieldElem, 3> x_;

  friend class CyclicAlgebra;
};

AlgebraElem power(const AlgebraElem& x, std::int64_t n);

/// Image of x under the splitting representation A -> M_3(L); multiplicative
/// and unital.
Matrix<FieldElem> splitting_matrix(const AlgebraElem& x);

/// Nrd(x) = det(splitting_matrix(x)), an element of K.
FieldElem reduced_norm(const AlgebraElem& x);

/// Two-sided inverse from the 3x3 L-linear system y * x = 1. Throws
/// DivisionByZero for x = 0 and NotInvertible if the system is singular.
AlgebraElem inverse(const AlgebraElem& x);

/// Inverse read off the adjugate of splitting_matrix(x).
AlgebraElem inverse_by_adjugate(const AlgebraElem& x);

/// Matrix of y -> x*y on A viewed as a 3(p-1)-dimensional Q-space with basis
/// zeta^m * alpha^i, i-major.
Matrix<Rational> left_regular_matrix(const AlgebraElem& x);

/// det(left_regular_matrix(x)).
Rational regular_rep_det(const AlgebraElem& x);

}  // namespace sbcert
