#pragma once

// Seeded random elements for the randomized identity checks. Coordinates are
// rationals with numerators in [-9, 9] and denominators in {1, 2, 3}.

#include <cstdint>
#include <random>

#include "sbcert/cyclic_algebra.hpp"

namespace sbcert {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  /// Uniform in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  FieldElem field_elem(const CycloField& f);
  FieldElem nonzero_field_elem(const CycloField& f);
  /// Nonzero element of K as a rational combination of Gaussian periods.
  FieldElem k_elem(const CycloField& f);
  AlgebraElem algebra_elem(const CyclicAlgebra& a);
  AlgebraElem nonzero_algebra_elem(const CyclicAlgebra& a);

 private:
  // mt19937_64 output is fixed by the standard; the reductions below avoid the
  // implementation-defined distributions so samples match across toolchains.
  std::mt19937_64 rng_;
};

}  // namespace sbcert
