#include "sbcert/norm_obstruction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sbcert/error.hpp"

namespace sbcert {

namespace {

void require_valid_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p % 3 != 1) throw Error(ErrorCode::WrongResidue, std::to_string(p) + " is not 1 mod 3");
}

std::int64_t residue(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Digit index -> value in the order 0, 1, -1, 2, -2, ...
std::int64_t digit_value(std::int64_t index) { return index % 2 == 1 ? (index + 1) / 2 : -(index / 2); }

}  // namespace

std::vector<std::int64_t> cubes_mod_p(std::int64_t p) {
  require_valid_prime(p);
  std::set<std::int64_t> cubes;
  for (std::int64_t t = 1; t < p; ++t) cubes.insert(pow_mod(t, 3, p));
  return {cubes.begin(), cubes.end()};
}

bool is_cube_mod_p(std::int64_t a, std::int64_t p) {
  const std::int64_t r = residue(a, p);
  if (r == 0) throw Error(ErrorCode::BadResidue, std::to_string(p) + " divides " + std::to_string(a));
  return pow_mod(r, (p - 1) / 3, p) == 1;
}

std::int64_t choose_a(std::int64_t p) {
  require_valid_prime(p);
  for (std::int64_t a = 2;; ++a) {
    if (residue(a, p) != 0 && !is_cube_mod_p(a, p)) return a;
  }
}

NormSearchResult brute_force_norm_search(const CycloField& field, const Rational& target, std::int64_t bound,
                                         std::uint64_t max_candidates) {
  if (bound < 0) throw Error(ErrorCode::BoundTooLarge, "search bound must be non-negative");
  const std::size_t n = field.degree();
  const std::uint64_t base = static_cast<std::uint64_t>(2 * bound + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > max_candidates / base) {
      throw Error(ErrorCode::BoundTooLarge, "(2*" + std::to_string(bound) + "+1)^" + std::to_string(n) +
                                                " candidates exceed the cap of " + std::to_string(max_candidates));
    }
    total *= base;
  }

  const FieldElem goal = field.from_rational(target);
  std::vector<std::int64_t> digits(n, 0);
  NormSearchResult result;
  for (std::uint64_t step = 0; step < total; ++step) {
    std::vector<Rational> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = Rational(static_cast<long>(digit_value(digits[i])));
    FieldElem x = field.from_coords(std::move(coords));
    ++result.examined;
    if (relative_norm(x) == goal) {
      result.witness = std::move(x);
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < static_cast<std::int64_t>(base)) break;
      digits[i] = 0;
    }
  }
  return result;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Skipped: return "skipped";
    case SearchStatus::NoWitness: return "no_witness";
    case SearchStatus::WitnessFound: return "witness_found";
  }
  return "unknown";
}

ObstructionReport make_obstruction_report(const CycloField& field, std::int64_t a, std::int64_t search_bound) {
  const std::int64_t p = field.p();
  ObstructionReport r;
  r.p = p;
  r.a = Rational(static_cast<long>(a));
  r.cubes = cubes_mod_p(p);
  r.a_mod_p = residue(a, p);
  r.is_cube = is_cube_mod_p(a, p);
  r.power_residue = pow_mod(r.a_mod_p, (p - 1) / 3, p);
  r.search_bound = search_bound;
  if (search_bound > 0) {
    auto found = brute_force_norm_search(field, r.a, search_bound);
    r.examined = found.examined;
    r.witness = std::move(found.witness);
    r.search = r.witness ? SearchStatus::WitnessFound : SearchStatus::NoWitness;
  }
  return r;
}

}  // namespace sbcert
