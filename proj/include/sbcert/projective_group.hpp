#pragma once

// Finite subgroups of A*/K*: canonical class representatives, subgroup
// generation, Cayley tables, the model semidirect product mu_p x| mu_3 and the
// checks that tie the two together.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sbcert/cyclic_algebra.hpp"

namespace sbcert {

/// A unit of A modulo K*, held by its canonical representative: writing each
/// component over the K-basis {1, zeta, zeta^2} gives 9 K-coordinates (ordered
/// component-major), and the first nonzero one is 1.
class ProjClass {
 public:
  const AlgebraElem& rep() const { return rep_; }

  friend ProjClass operator*(const ProjClass& x, const ProjClass& y);
  friend bool operator==(const ProjClass& x, const ProjClass& y) { return x.rep_ == y.rep_; }
  friend bool operator<(const ProjClass& x, const ProjClass& y) { return x.rep_ < y.rep_; }

 private:
  explicit ProjClass(AlgebraElem rep) : rep_(std::move(rep)) {}
  AlgebraElem rep_;

  friend ProjClass canonicalize(const AlgebraElem& x);
};

/// Throws ZeroElement for x = 0.
ProjClass canonicalize(const AlgebraElem& x);

/// x = c*y for some c in K*, decided by a direct ratio test instead of
/// canonical forms. Throws ZeroElement if either argument is 0.
bool class_eq(const AlgebraElem& x, const AlgebraElem& y);

ProjClass identity_class(const CyclicAlgebra& algebra);
ProjClass power(const ProjClass& g, std::int64_t n);

/// Smallest n >= 1 with g^n = 1. Throws CapExceeded past `cap`.
std::int64_t element_order(const ProjClass& g, std::int64_t cap);

/// Closure of `gens` under multiplication, in breadth-first discovery order
/// starting from the identity (each element is multiplied on the right by each
/// generator in turn). Throws CapExceeded when more than `cap` classes appear.
std::vector<ProjClass> generate_subgroup(const std::vector<ProjClass>& gens, std::size_t cap);

/// A finite group given by its multiplication table on indices 0..n-1.
struct FiniteGroup {
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return table.size(); }
  std::size_t mul(std::size_t x, std::size_t y) const { return table[x][y]; }
  std::size_t element_order(std::size_t x) const;
  bool is_abelian() const;
  /// Element order -> number of elements of that order.
  std::map<std::size_t, std::size_t> order_histogram() const;

  /// Fills identity and inverses from the table; checks nothing else.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);
};

/// Cayley table of a list of classes closed under multiplication. Throws
/// CapExceeded if a product falls outside the list.
FiniteGroup cayley_table(const std::vector<ProjClass>& elements);

/// The semidirect product mu_p x| mu_3 on pairs (u, v) in Z/p x Z/3 with
/// (u1, v1)(u2, v2) = (u1 + d^v1 * u2, v1 + v2).
struct AbstractGp {
  std::int64_t p = 0;
  std::int64_t d = 0;

  std::size_t order() const { return static_cast<std::size_t>(3 * p); }
  std::size_t index(std::int64_t u, std::int64_t v) const { return static_cast<std::size_t>(v * p + u); }
  std::pair<std::int64_t, std::int64_t> element(std::size_t i) const {
    return {static_cast<std::int64_t>(i) % p, static_cast<std::int64_t>(i) / p};
  }
  std::pair<std::int64_t, std::int64_t> multiply(std::pair<std::int64_t, std::int64_t> x,
                                                 std::pair<std::int64_t, std::int64_t> y) const;
  FiniteGroup table() const;
};

AbstractGp build_abstract(std::int64_t p, std::int64_t d);

/// Group axioms on the full table: closure, associativity, identity, inverses.
bool satisfies_group_axioms(const FiniteGroup& g);

struct RelationReport {
  bool xi_power_p = false;       // xi^p = 1
  bool alpha_cubed = false;      // alpha^3 = 1
  bool twisted = false;          // xi * alpha = alpha * xi^d
  bool xi_nontrivial = false;    // xi != 1
  bool alpha_nontrivial = false;  // alpha != 1
  bool ok() const { return xi_power_p && alpha_cubed && twisted && xi_nontrivial && alpha_nontrivial; }
};

/// The defining relations of G_p on the classes of zeta and alpha.
RelationReport verify_relations(const CyclicAlgebra& algebra);

/// Classes of zeta and alpha.
std::pair<ProjClass, ProjClass> standard_generators(const CyclicAlgebra& algebra);

struct IsoReport {
  bool ok = false;
  bool bijective = false;
  std::size_t pairs_checked = 0;
  /// First (g, h) of abstract indices with phi(g h) != phi(g) phi(h).
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// How an abstract pair (u, v) is sent to the concrete group.
inline constexpr const char* kPhiConvention = "phi(u,v) = xi_hat^u * alpha_hat^(-v)";

/// Checks that phi from kPhiConvention is a bijective homomorphism from
/// `abstract` onto `elements`, over all ordered pairs. `table` must be
/// cayley_table(elements); products are read from it.
IsoReport check_isomorphism(const std::vector<ProjClass>& elements, const FiniteGroup& table,
                            const AbstractGp& abstract);
IsoReport check_isomorphism(const std::vector<ProjClass>& elements, const AbstractGp& abstract);

struct JordanReport {
  /// Smallest index of a normal abelian subgroup.
  std::size_t index = 0;
  std::size_t witness_order = 0;
  bool non_abelian = false;
  std::size_t subgroup_count = 0;
};

/// Enumerates the subgroups generated by at most two elements, which is all of
/// them for groups of order 3p or of prime order, and reports the smallest
/// index of a normal abelian one.
JordanReport jordan_index_check(const FiniteGroup& g);

}  // namespace sbcert
