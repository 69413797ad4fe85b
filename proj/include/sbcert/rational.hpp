#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sbcert {

// GMP keeps mpq_class canonical after every arithmetic operation: lowest
// terms, positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational reciprocal(const Rational& q) { return 1 / q; }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sbcert
