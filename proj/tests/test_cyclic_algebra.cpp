#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbcert/cyclic_algebra.hpp"
#include "sbcert/error.hpp"
#include "sbcert/sampling.hpp"

using namespace sbcert;

namespace {

struct Fixture {
  CycloField field = CycloField::make(7);
  CyclicAlgebra alg{field, Rational(2)};
};

Matrix<FieldElem> diag(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  Matrix<FieldElem> m(3, 3, a - a);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "generators and embedding") {
  CHECK(alg.embed_L(field.one()) == alg.one());
  CHECK(alg.obstruction_holds());
  Sampler rng(11);
  for (int i = 0; i < 20; ++i) {
    const FieldElem l = rng.field_elem(field), m = rng.field_elem(field);
    CHECK(alg.embed_L(l * m) == alg.embed_L(l) * alg.embed_L(m));
  }
  const AlgebraElem x = rng.algebra_elem(alg);
  CHECK(x * alg.one() == x);
  CHECK(alg.one() * x == x);
}

TEST_CASE_FIXTURE(Fixture, "defining relations") {
  const AlgebraElem alpha = alg.alpha();
  CHECK(alpha * alpha * alpha == alg.embed_L(field.from_rational(2)));
  CHECK(power(alpha, 3) == alg.embed_L(field.from_rational(2)));

  // xi * alpha = alpha * xi^d; in left-coefficient form both sides are (0, xi, 0).
  const FieldElem xi = field.zeta();
  const AlgebraElem lhs = alg.embed_L(xi) * alpha;
  CHECK(lhs == alpha * alg.embed_L(field.zeta_pow(field.d())));
  CHECK(lhs == alg.make(field.zero(), xi, field.zero()));
  CHECK_FALSE(lhs == alpha * alg.embed_L(xi));

  Sampler rng(12);
  for (int i = 0; i < 100; ++i) {
    const FieldElem l = rng.field_elem(field);
    CHECK(alg.embed_L(l) * alpha == alpha * alg.embed_L(sigma(l)));
  }
}

TEST_CASE("associativity and distributivity") {
  Sampler rng(13);
  for (std::int64_t p : {7, 13}) {
    const CyclicAlgebra alg(CycloField::make(p), Rational(2));
    for (int i = 0; i < 100; ++i) {
      const AlgebraElem x = rng.algebra_elem(alg), y = rng.algebra_elem(alg), z = rng.algebra_elem(alg);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "splitting matrix") {
  const FieldElem zero = field.zero(), one = field.one(), a = field.from_rational(2);
  CHECK(splitting_matrix(alg.one()) == diag(one, one, one));

  Matrix<FieldElem> ma(3, 3, zero);
  ma(0, 1) = one;
  ma(1, 2) = one;
  ma(2, 0) = a;
  CHECK(splitting_matrix(alg.alpha()) == ma);
  CHECK(reduced_norm(alg.alpha()) == a);

  Sampler rng(14);
  const FieldElem l = rng.nonzero_field_elem(field);
  const Matrix<FieldElem> ml = splitting_matrix(alg.embed_L(l));
  CHECK(ml == diag(l, sigma_pow(2, l), sigma(l)));
  CHECK(reduced_norm(alg.embed_L(l)) == relative_norm(l));

  for (int i = 0; i < 100; ++i) {
    const AlgebraElem x = rng.algebra_elem(alg), y = rng.algebra_elem(alg);
    CHECK(splitting_matrix(x * y) == splitting_matrix(x) * splitting_matrix(y));
  }
}

TEST_CASE_FIXTURE(Fixture, "reduced norm") {
  CHECK(reduced_norm(alg.one()) == field.one());
  CHECK(reduced_norm(alg.zero()).is_zero());
  Sampler rng(15);
  for (int i = 0; i < 100; ++i) {
    const AlgebraElem x = rng.algebra_elem(alg), y = rng.algebra_elem(alg);
    const FieldElem nx = reduced_norm(x);
    CHECK(is_in_K(nx));
    CHECK(reduced_norm(x * y) == nx * reduced_norm(y));
  }
}

TEST_CASE_FIXTURE(Fixture, "inverse") {
  CHECK(inverse(alg.one()) == alg.one());
  CHECK(inverse(alg.alpha()) == alg.make(field.zero(), field.zero(), field.from_rational(make_rational(1, 2))));
  CHECK(inverse(alg.embed_L(field.zeta())) == alg.embed_L(field.zeta_pow(6)));
  CHECK(inverse(alg.embed_L(field.zeta())) == alg.embed_L(inverse(field.zeta())));
  try {
    inverse(alg.zero());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }

  Sampler rng(16);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElem x = rng.nonzero_algebra_elem(alg);
    REQUIRE_FALSE(reduced_norm(x).is_zero());
    const AlgebraElem y = inverse(x);
    CHECK(x * y == alg.one());
    CHECK(y * x == alg.one());
    CHECK(y == inverse_by_adjugate(x));
  }
}

TEST_CASE_FIXTURE(Fixture, "regular representation determinant") {
  CHECK(regular_rep_det(alg.one()) == 1);
  CHECK(regular_rep_det(alg.embed_L(field.from_rational(2))) == Rational(1 << 18));
  CHECK(left_regular_matrix(alg.one()).rows() == 18);
  CHECK(regular_rep_det(alg.zero()) == 0);

  Sampler rng(17);
  for (int i = 0; i < 100; ++i) {
    const AlgebraElem x = rng.algebra_elem(alg);
    const FieldElem nrd = reduced_norm(x);
    const Rational det = regular_rep_det(x);
    CHECK((det == 0) == nrd.is_zero());
    CHECK(det == absolute_norm(nrd));
  }
}

TEST_CASE("a split algebra has zero divisors") {
  // a = 1 = N(1) is a norm, so (L/K, sigma, 1) is a matrix algebra.
  const CyclicAlgebra split(CycloField::make(7), Rational(1));
  CHECK_FALSE(split.obstruction_holds());
  const CycloField& f = split.field();
  const AlgebraElem u = split.one() - split.alpha();
  const AlgebraElem v = split.one() + split.alpha() + power(split.alpha(), 2);
  CHECK((u * v).is_zero());
  CHECK(reduced_norm(u).is_zero());
  CHECK(regular_rep_det(u) == 0);
  try {
    inverse(u);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
  CHECK_FALSE(reduced_norm(split.embed_L(f.zeta())).is_zero());
}

TEST_CASE("obstruction flag") {
  const CycloField f = CycloField::make(7);
  CHECK(CyclicAlgebra(f, Rational(2)).obstruction_holds());
  CHECK(CyclicAlgebra(f, Rational(3)).obstruction_holds());
  CHECK_FALSE(CyclicAlgebra(f, Rational(6)).obstruction_holds());
  CHECK_FALSE(CyclicAlgebra(f, Rational(7)).obstruction_holds());
  CHECK_FALSE(CyclicAlgebra(f, make_rational(2, 3)).obstruction_holds());
  CHECK_THROWS_AS(CyclicAlgebra(f, Rational(0)), Error);
}

TEST_CASE_FIXTURE(Fixture, "center") {
  const AlgebraElem xi = alg.embed_L(field.zeta());
  const AlgebraElem alpha = alg.alpha();
  const FieldElem eta = field.gaussian_periods()[0];
  CHECK(alg.embed_L(eta) * alpha == alpha * alg.embed_L(eta));
  CHECK_FALSE(xi * alpha == alpha * xi);

  Sampler rng(18);
  auto central = [&](const AlgebraElem& x) { return x * xi == xi * x && x * alpha == alpha * x; };
  for (int i = 0; i < 60; ++i) {
    std::vector<AlgebraElem> samples{rng.algebra_elem(alg), alg.embed_L(rng.k_elem(field)),
                                     alg.embed_L(rng.field_elem(field)),
                                     alg.embed_L(rng.k_elem(field)) * alpha};
    for (const auto& x : samples) {
      const bool in_K = x[1].is_zero() && x[2].is_zero() && is_in_K(x[0]);
      CHECK(central(x) == in_K);
    }
  }
}

TEST_CASE("mixing algebras is rejected") {
  const CycloField f = CycloField::make(7);
  const CyclicAlgebra a2(f, Rational(2)), a3(f, Rational(3));
  try {
    (void)(a2.alpha() * a3.alpha());
    FAIL("expected ParamMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamMismatch);
  }
  CHECK_THROWS_AS(a2.embed_L(CycloField::make(13).one()), Error);
}
