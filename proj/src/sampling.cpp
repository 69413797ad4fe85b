#include "sbcert/sampling.hpp"

#include <vector>

namespace sbcert {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::rational() {
  const std::int64_t num = integer(-9, 9);
  const std::int64_t den = integer(1, 3);
  return make_rational(num, den);
}

FieldElem Sampler::field_elem(const CycloField& f) {
  std::vector<Rational> c(f.degree());
  for (auto& q : c) q = rational();
  return f.from_coords(std::move(c));
}

FieldElem Sampler::nonzero_field_elem(const CycloField& f) {
  for (;;) {
    FieldElem x = field_elem(f);
    if (!x.is_zero()) return x;
  }
}

FieldElem Sampler::k_elem(const CycloField& f) {
  for (;;) {
    FieldElem x = f.zero();
    for (const FieldElem& eta : f.gaussian_periods()) x = x + rational() * eta;
    if (!x.is_zero()) return x;
  }
}

AlgebraElem Sampler::algebra_elem(const CyclicAlgebra& a) {
  const CycloField& f = a.field();
  FieldElem x0 = field_elem(f);
  FieldElem x1 = field_elem(f);
  FieldElem x2 = field_elem(f);
  return a.make(std::move(x0), std::move(x1), std::move(x2));
}

AlgebraElem Sampler::nonzero_algebra_elem(const CyclicAlgebra& a) {
  for (;;) {
    AlgebraElem x = algebra_elem(a);
    if (!x.is_zero()) return x;
  }
}

}  // namespace sbcert
