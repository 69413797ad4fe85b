#pragma once

// End-to-end certification for one prime: builds L, K and A = (L/K, sigma, a),
// runs the seeded identity checks, generates the group <xi_hat, alpha_hat> in
// A*/K* and compares it with the model semidirect product. The result
// serializes to a canonical JSON document (see docs/certificate.md).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbcert/norm_obstruction.hpp"
#include "sbcert/projective_group.hpp"

namespace sbcert {

inline constexpr const char* kSchemaVersion = "1.0";

struct PipelineOptions {
  std::optional<std::int64_t> a;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  /// Bound for the brute-force norm search; unset means 1 for p = 7 and
  /// skipped otherwise. 0 skips.
  std::optional<std::int64_t> norm_search_bound;
  /// Caps the regular-representation determinant cross-check, whose cost
  /// grows like p^3 per sample. Unset means min(trials, 100) for p <= 13 and
  /// min(trials, 10) above.
  std::optional<std::uint64_t> regular_rep_trials;
};

struct TrialCount {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  bool ok() const { return trials > 0 && failures == 0; }
};

struct FieldChecks {
  std::uint64_t aut_pairs = 0;
  bool aut_composition = false;
  std::int64_t sigma_order = 0;
  std::size_t period_count = 0;
  std::size_t period_rank = 0;
  bool periods_in_K = false;
  bool period_sum = false;
  TrialCount field_axioms;
  TrialCount aut_homomorphism;
  TrialCount inverse_agreement;
  TrialCount norm_multiplicative;
  TrialCount decompose_roundtrip;
  bool ok(std::int64_t k) const;
};

struct AlgebraChecks {
  bool alpha_cubed = false;
  bool xi_alpha = false;
  TrialCount twisted_commutation;
  TrialCount associativity;
  TrialCount splitting_multiplicative;
  TrialCount nrd_in_K;
  TrialCount nrd_multiplicative;
  TrialCount division;
  TrialCount regular_rep_agreement;
  bool ok() const;
};

struct GroupChecks {
  std::size_t order = 0;
  std::size_t expected_order = 0;
  std::map<std::size_t, std::size_t> histogram;
  bool histogram_ok = false;
  bool axioms = false;
  RelationReport relations;
  IsoReport iso;
  JordanReport jordan;
  bool ok() const;
};

struct StageTiming {
  std::string stage;
  std::int64_t ms = 0;
};

struct Certificate {
  std::int64_t p = 0;
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::int64_t a = 0;
  bool a_overridden = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::optional<ObstructionReport> obstruction;
  std::optional<FieldChecks> field;
  std::optional<AlgebraChecks> algebra;
  std::optional<GroupChecks> group;
  std::vector<StageTiming> timings;
  /// First stage that did not pass, with the reason.
  std::optional<std::string> failed_stage;
  std::optional<std::string> failure_detail;

  bool pass() const { return !failed_stage.has_value(); }
};

/// Runs every stage for prime p. Throws NotPrime, WrongResidue or
/// RejectedOverride (user-supplied a divisible by p or a cube mod p) before any
/// certificate exists; later failures are recorded in the certificate.
Certificate run_pipeline(std::int64_t p, const PipelineOptions& options = {});

/// Canonical JSON: fixed key order, two-space indent, trailing newline, no
/// floating point. Timings are included only on request so that identical
/// inputs give byte-identical output.
std::string to_json(const Certificate& cert, bool include_timings = false);

}  // namespace sbcert
