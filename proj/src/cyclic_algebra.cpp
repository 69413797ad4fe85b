#include "sbcert/cyclic_algebra.hpp"

#include <string>

#include "sbcert/error.hpp"
#include "sbcert/norm_obstruction.hpp"

namespace sbcert {

namespace {

bool is_certifiable_non_cube(const Rational& a, std::int64_t p) {
  if (a.get_den() != 1) return false;
  const Integer r = a.get_num() % Integer(static_cast<long>(p));
  if (r == 0) return false;
  return !is_cube_mod_p(r.get_si(), p);
}

void require_same_algebra(const AlgebraElem& x, const AlgebraElem& y) {
  if (!(x.algebra() == y.algebra())) {
    throw Error(ErrorCode::ParamMismatch, "elements belong to different cyclic algebras");
  }
}

FieldElem tau(const FieldElem& x) { return sigma_pow(-1, x); }
FieldElem tau2(const FieldElem& x) { return sigma_pow(-2, x); }

FieldElem det3(const Matrix<FieldElem>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

CyclicAlgebra::CyclicAlgebra(CycloField field, Rational a) {
  a.canonicalize();
  if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "cyclic algebra parameter a must be nonzero");
  const bool non_cube = is_certifiable_non_cube(a, field.p());
  params_ = std::make_shared<const Params>(Params{std::move(field), std::move(a), non_cube});
}

AlgebraElem CyclicAlgebra::zero() const {
  const FieldElem z = field().zero();
  return AlgebraElem(*this, {z, z, z});
}

AlgebraElem CyclicAlgebra::one() const { return embed_L(field().one()); }

AlgebraElem CyclicAlgebra::alpha() const {
  const FieldElem z = field().zero();
  return AlgebraElem(*this, {z, field().one(), z});
}

AlgebraElem CyclicAlgebra::embed_L(const FieldElem& lambda) const {
  if (!(lambda.field() == field())) throw Error(ErrorCode::ParamMismatch, "element of a different field");
  const FieldElem z = field().zero();
  return AlgebraElem(*this, {lambda, z, z});
}

AlgebraElem CyclicAlgebra::make(FieldElem x0, FieldElem x1, FieldElem x2) const {
  for (const FieldElem* c : {&x0, &x1, &x2}) {
    if (!(c->field() == field())) throw Error(ErrorCode::ParamMismatch, "element of a different field");
  }
  return AlgebraElem(*this, {std::move(x0), std::move(x1), std::move(x2)});
}

// (x_i alpha^i)(y_j alpha^j) = x_i tau^i(y_j) alpha^(i+j), and alpha^3 = a.
AlgebraElem operator*(const AlgebraElem& x, const AlgebraElem& y) {
  require_same_algebra(x, y);
  const Rational& a = x.algebra().a();
  const auto& [x0, x1, x2] = x.x_;
  const auto& [y0, y1, y2] = y.x_;
  const FieldElem ty0 = tau(y0), ty1 = tau(y1), ty2 = tau(y2);
  const FieldElem t2y0 = tau2(y0), t2y1 = tau2(y1), t2y2 = tau2(y2);
  FieldElem z0 = x0 * y0 + a * (x1 * ty2 + x2 * t2y1);
  FieldElem z1 = x0 * y1 + x1 * ty0 + a * (x2 * t2y2);
  FieldElem z2 = x0 * y2 + x1 * ty1 + x2 * t2y0;
  return AlgebraElem(x.algebra_, {std::move(z0), std::move(z1), std::move(z2)});
}

AlgebraElem operator+(const AlgebraElem& x, const AlgebraElem& y) {
  require_same_algebra(x, y);
  return AlgebraElem(x.algebra_, {x.x_[0] + y.x_[0], x.x_[1] + y.x_[1], x.x_[2] + y.x_[2]});
}

AlgebraElem operator-(const AlgebraElem& x, const AlgebraElem& y) {
  require_same_algebra(x, y);
  return AlgebraElem(x.algebra_, {x.x_[0] - y.x_[0], x.x_[1] - y.x_[1], x.x_[2] - y.x_[2]});
}

AlgebraElem scale(const FieldElem& c, const AlgebraElem& x) {
  return AlgebraElem(x.algebra_, {c * x.x_[0], c * x.x_[1], c * x.x_[2]});
}

AlgebraElem power(const AlgebraElem& x, std::int64_t n) {
  if (n < 0) return power(inverse(x), -n);
  AlgebraElem result = x.algebra().one();
  AlgebraElem base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Matrix<FieldElem> splitting_matrix(const AlgebraElem& x) {
  const Rational& a = x.algebra().a();
  const auto& [x0, x1, x2] = x.components();
  Matrix<FieldElem> m(3, 3, x0);
  m(0, 0) = x0;
  m(0, 1) = x1;
  m(0, 2) = x2;
  m(1, 0) = a * tau(x2);
  m(1, 1) = tau(x0);
  m(1, 2) = tau(x1);
  m(2, 0) = a * tau2(x1);
  m(2, 1) = a * tau2(x2);
  m(2, 2) = tau2(x0);
  return m;
}

FieldElem reduced_norm(const AlgebraElem& x) { return det3(splitting_matrix(x)); }

// Right multiplication y -> y*x is L-linear in the components of y:
// (y*x)_k = sum_i y_i tau^i(x_{k-i}) times a when the exponents wrap past 3.
AlgebraElem inverse(const AlgebraElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in the cyclic algebra");
  const CyclicAlgebra& alg = x.algebra();
  const CycloField& f = alg.field();
  const FieldElem a = f.from_rational(alg.a());
  Matrix<FieldElem> sys(3, 3, f.zero());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      FieldElem c = sigma_pow(-static_cast<std::int64_t>(i), x[j]);
      if (i + j >= 3) c = a * c;
      sys((i + j) % 3, i) = std::move(c);
    }
  }
  auto y = solve(sys, std::vector<FieldElem>{f.one(), f.zero(), f.zero()});
  if (!y) throw Error(ErrorCode::NotInvertible, "right-multiplication system is singular");
  return alg.make((*y)[0], (*y)[1], (*y)[2]);
}

AlgebraElem inverse_by_adjugate(const AlgebraElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in the cyclic algebra");
  const Matrix<FieldElem> m = splitting_matrix(x);
  const FieldElem det = det3(m);
  if (det.is_zero()) throw Error(ErrorCode::NotInvertible, "reduced norm vanishes");
  // First row of adj(M) / det(M); adj(M)(0, j) is the (j, 0) cofactor.
  const FieldElem c0 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const FieldElem c1 = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  const FieldElem c2 = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  const FieldElem inv_det = inverse(det);
  return x.algebra().make(c0 * inv_det, c1 * inv_det, c2 * inv_det);
}

Matrix<Rational> left_regular_matrix(const AlgebraElem& x) {
  const CyclicAlgebra& alg = x.algebra();
  const CycloField& f = alg.field();
  const std::size_t n = f.degree();
  const FieldElem zero = f.zero();
  Matrix<Rational> m(3 * n, 3 * n, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t mm = 0; mm < n; ++mm) {
      std::array<FieldElem, 3> basis{zero, zero, zero};
      basis[i] = f.zeta_pow(static_cast<std::int64_t>(mm));
      const AlgebraElem img = x * alg.make(basis[0], basis[1], basis[2]);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r * n + c, i * n + mm) = img[r].coord(c);
    }
  }
  return m;
}

Rational regular_rep_det(const AlgebraElem& x) { return determinant(left_regular_matrix(x)); }

}  // namespace sbcert
