#pragma once

// Certifies that a parameter a lies outside the image of N_{L/K}. The prime p
// is totally and tamely ramified in the cyclic cubic extension L/K, so a p-adic
// unit is a local norm there only if its residue is a cube in F_p. An integer a
// prime to p whose residue is not a cube is therefore not a global norm.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sbcert/cyclotomic_field.hpp"
#include "sbcert/rational.hpp"

namespace sbcert {

/// The local-norm criterion the obstruction relies on. It is the one step not
/// proved by computation here, so certificates quote it verbatim.
inline constexpr std::string_view kImportedLemma =
    "Local norm criterion (imported): the prime above p in K is totally and tamely ramified in the "
    "cyclic cubic extension L/K with residue field F_p. For such an extension a unit of the completion "
    "of K is a local norm if and only if its residue is a cube in F_p. Hence an integer a prime to p "
    "whose residue is not a cube mod p is not a local norm at p, so it is not in N_{L/K}(L*), and the "
    "cyclic algebra (L/K, sigma, a) does not split.";

/// Sorted residues t^3 mod p over t in (Z/p)*. Throws NotPrime or WrongResidue.
std::vector<std::int64_t> cubes_mod_p(std::int64_t p);

/// a^((p-1)/3) = 1 mod p. Throws BadResidue when p divides a.
bool is_cube_mod_p(std::int64_t a, std::int64_t p);

/// Smallest integer a >= 2 prime to p whose residue is not a cube.
std::int64_t choose_a(std::int64_t p);

/// Number of candidates the default search guard allows.
inline constexpr std::uint64_t kDefaultSearchCap = 20'000'000;

struct NormSearchResult {
  std::optional<FieldElem> witness;
  std::uint64_t examined = 0;
};

/// Looks for x with integer coordinates in [-bound, bound] and
/// relative_norm(x) = target.
///
/// Candidates are visited as an odometer over the power-basis coordinates:
/// coordinate 0 is the fastest digit and every digit runs through
/// 0, 1, -1, 2, -2, ..., bound, -bound. The first hit in this order is
/// returned. Throws BoundTooLarge when (2*bound+1)^(p-1) exceeds max_candidates
/// or bound is negative.
NormSearchResult brute_force_norm_search(const CycloField& field, const Rational& target, std::int64_t bound,
                                         std::uint64_t max_candidates = kDefaultSearchCap);

enum class SearchStatus { Skipped, NoWitness, WitnessFound };

std::string_view to_string(SearchStatus status);

struct ObstructionReport {
  std::int64_t p = 0;
  Rational a;
  std::vector<std::int64_t> cubes;
  std::int64_t a_mod_p = 0;
  /// a^((p-1)/3) mod p.
  std::int64_t power_residue = 0;
  bool is_cube = true;
  std::int64_t search_bound = 0;
  SearchStatus search = SearchStatus::Skipped;
  std::uint64_t examined = 0;
  std::optional<FieldElem> witness;

  /// Non-cube residue and no norm preimage found.
  bool certificate_grade() const { return !is_cube && !witness.has_value(); }
};

/// Builds the report for an integer a prime to p. A search_bound of 0 skips
/// the brute-force search. Throws BadResidue when p divides a.
ObstructionReport make_obstruction_report(const CycloField& field, std::int64_t a, std::int64_t search_bound);

}  // namespace sbcert
