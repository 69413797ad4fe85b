// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sbcert/certificate.hpp"
#include "sbcert/error.hpp"
#include "sbcert/sampling.hpp"

using namespace sbcert;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::map<std::size_t, std::size_t> expected_histogram(std::int64_t p) {
  return {{1, 1}, {3, static_cast<std::size_t>(2 * p)}, {static_cast<std::size_t>(p), static_cast<std::size_t>(p - 1)}};
}

void realization(Outcome& r, std::int64_t p, double limit_s) {
  const auto start = Clock::now();
  const Certificate c = run_pipeline(p, PipelineOptions{});
  const double s = seconds_since(start);
  r.require(c.pass(), "p=" + std::to_string(p) + " PASS");
  r.require(c.group && c.group->order == static_cast<std::size_t>(3 * p), "order 3p");
  r.require(c.group && c.group->histogram == expected_histogram(p), "histogram");
  r.require(c.group && c.group->jordan.index == 3, "jordan index 3");
  r.require(s < limit_s, "runtime");
  r.detail << " p=" << p << " a=" << c.a << " order=" << (c.group ? c.group->order : 0) << " time=" << s << "s";
}

void criterion1(Outcome& r) {
  const auto start = Clock::now();
  const Certificate c = run_pipeline(7, PipelineOptions{});
  const double s = seconds_since(start);
  r.require(c.pass(), "PASS");
  r.require(c.d == 2 && c.a == 2, "d=2, a=2");
  if (!c.group) {
    r.require(false, "group stage ran");
    return;
  }
  const GroupChecks& g = *c.group;
  r.require(g.order == 21, "order 21");
  r.require(g.histogram == expected_histogram(7), "histogram {1:1, 3:14, 7:6}");
  r.require(g.relations.xi_power_p && g.relations.alpha_cubed && g.relations.twisted, "relations");
  r.require(g.iso.ok && g.iso.pairs_checked == 441, "isomorphism on 441 pairs");
  r.require(g.jordan.index == 3, "jordan index 3");
  r.require(s < 10.0, "runtime < 10 s");
  r.detail << " order=" << g.order << " pairs=" << g.iso.pairs_checked << " jordan=" << g.jordan.index
           << " time=" << s << "s";
}

void criterion2(Outcome& r) {
  realization(r, 13, 120.0);
  realization(r, 31, 120.0);
}

void criterion3(Outcome& r) {
  for (std::int64_t p : {7, 13}) {
    const CycloField f = CycloField::make(p);
    const CyclicAlgebra alg(f, Rational(static_cast<long>(choose_a(p))));
    Sampler rng(0);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
      const FieldElem lambda = rng.field_elem(f);
      if (!(alg.embed_L(lambda) * alg.alpha() == alg.alpha() * alg.embed_L(sigma(lambda)))) ++failures;
    }
    r.require(failures == 0, "lambda alpha = alpha sigma(lambda) at p=" + std::to_string(p));
    r.require(power(alg.alpha(), 3) == alg.embed_L(f.from_rational(alg.a())), "alpha^3 = a");
    r.detail << " p=" << p << ": 100 samples, " << failures << " failures;";
  }
}

void criterion4(Outcome& r) {
  const CycloField f = CycloField::make(7);
  const CyclicAlgebra alg(f, Rational(2));
  Sampler rng(0);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const AlgebraElem x = rng.nonzero_algebra_elem(alg);
    if (reduced_norm(x).is_zero()) {
      ++failures;
      continue;
    }
    const AlgebraElem y = inverse(x);
    if (!(x * y == alg.one() && y * x == alg.one())) ++failures;
  }
  r.require(failures == 0, "nonzero Nrd and two-sided inverse");
  r.detail << " 200 samples, " << failures << " failures";
}

void criterion5(Outcome& r) {
  const CycloField f = CycloField::make(7);
  const CyclicAlgebra division(f, Rational(2));
  // a = 1 splits, so 1 - alpha is a zero divisor: (1 - alpha)(1 + alpha + alpha^2) = 0.
  const CyclicAlgebra split(f, Rational(1));
  Sampler rng(0);
  int disagreements = 0;
  int vanishing = 0;
  for (int i = 0; i < 100; ++i) {
    AlgebraElem x = division.zero();
    if (i == 0) {
      x = division.zero();
    } else if (i % 2 == 1) {
      x = rng.algebra_elem(division);
    } else if (i % 4 == 0) {
      x = split.embed_L(rng.nonzero_field_elem(f)) * (split.one() - split.alpha()) * rng.algebra_elem(split);
    } else {
      x = rng.algebra_elem(split);
    }
    const bool nrd_zero = reduced_norm(x).is_zero();
    const bool det_zero = is_zero(regular_rep_det(x));
    if (nrd_zero) ++vanishing;
    if (nrd_zero != det_zero) ++disagreements;
  }
  r.require(disagreements == 0, "vanishing loci agree");
  r.require(vanishing > 1, "some samples vanish");

  int non_multiplicative = 0;
  for (int i = 0; i < 100; ++i) {
    const AlgebraElem x = rng.algebra_elem(division), y = rng.algebra_elem(division);
    if (!(reduced_norm(x * y) == reduced_norm(x) * reduced_norm(y))) ++non_multiplicative;
  }
  r.require(non_multiplicative == 0, "Nrd multiplicative");
  r.detail << " 100 samples (" << vanishing << " vanishing), " << disagreements << " disagreements; 100 pairs, "
           << non_multiplicative << " multiplicativity failures";
}

void criterion6(Outcome& r) {
  r.require(cubes_mod_p(7) == std::vector<std::int64_t>{1, 6}, "cubes mod 7");
  r.require(cubes_mod_p(13) == std::vector<std::int64_t>{1, 5, 8, 12}, "cubes mod 13");
  const CycloField f = CycloField::make(7);
  const ObstructionReport report = make_obstruction_report(f, 2, 1);
  r.require(!report.is_cube && report.certificate_grade(), "a=2 certified non-cube");
  r.require(report.examined == 729 && !report.witness, "bound-1 search finds nothing for 2");
  const NormSearchResult eight = brute_force_norm_search(f, Rational(8), 2);
  r.require(eight.witness && *eight.witness == f.from_rational(Rational(2)), "preimage 2 of 8");
  r.detail << " searched " << report.examined << " candidates for 2; witness for 8 after " << eight.examined;
}

void criterion7(Outcome& r) {
  const CycloField f = CycloField::make(7);
  const CyclicAlgebra alg(f, Rational(2));
  Sampler rng(0);
  int failures = 0;
  int unrelated = 0;
  for (int i = 0; i < 50; ++i) {
    const AlgebraElem x = rng.nonzero_algebra_elem(alg);
    const FieldElem c = rng.k_elem(f);
    const AlgebraElem cx = scale(c, x);
    if (!(canonicalize(cx) == canonicalize(x))) ++failures;
    if (class_eq(cx, x) != (canonicalize(cx) == canonicalize(x))) ++failures;
    // An L-multiple outside K and an unrelated element, both usually in other classes.
    const AlgebraElem zx = scale(f.zeta(), x);
    const AlgebraElem y = rng.nonzero_algebra_elem(alg);
    for (const AlgebraElem& other : {zx, y}) {
      const bool same = canonicalize(other) == canonicalize(x);
      if (!same) ++unrelated;
      if (class_eq(other, x) != same) ++failures;
    }
  }
  r.require(failures == 0, "canonical form and class_eq");
  r.detail << " 50 pairs, " << failures << " failures, " << unrelated << " distinct-class comparisons";
}

void criterion8(Outcome& r) {
  const CycloField f = CycloField::make(7);
  Sampler rng(0);
  const FieldElem x = rng.field_elem(f);
  int bad = 0;
  for (std::int64_t s = 1; s < 7; ++s)
    for (std::int64_t t = 1; t < 7; ++t)
      if (!(apply_aut(s, apply_aut(t, x)) == apply_aut(s * t % 7, x))) ++bad;
  r.require(bad == 0, "composition law");

  std::int64_t order = 1;
  for (FieldElem y = sigma(f.zeta()); !(y == f.zeta()) && order < 7; y = sigma(y)) ++order;
  r.require(order == 3, "sigma has order 3");

  for (std::int64_t p : {7, 13, 19, 31}) {
    const CycloField g = CycloField::make(p);
    const auto periods = g.gaussian_periods();
    Matrix<Rational> m(periods.size(), g.degree(), Rational(0));
    bool invariant = true;
    for (std::size_t j = 0; j < periods.size(); ++j) {
      invariant = invariant && sigma(periods[j]) == periods[j];
      for (std::size_t i = 0; i < g.degree(); ++i) m(j, i) = periods[j].coord(i);
    }
    r.require(invariant, "periods sigma-invariant at p=" + std::to_string(p));
    r.require(rank(m) == static_cast<std::size_t>((p - 1) / 3), "period rank at p=" + std::to_string(p));
  }
  r.detail << " 36 pairs, " << bad << " failures; sigma order " << order << "; periods checked for p=7,13,19,31";
}

void criterion9(Outcome& r) {
  auto code = [](std::int64_t p, std::optional<std::int64_t> a) -> std::optional<ErrorCode> {
    PipelineOptions o;
    o.a = a;
    o.trials = 1;
    try {
      run_pipeline(p, o);
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  r.require(code(11, std::nullopt) == ErrorCode::WrongResidue, "p=11 WrongResidue");
  r.require(code(7, 6) == ErrorCode::RejectedOverride, "a=6 at p=7 rejected");
  r.detail << " p=11 and a=6 rejected";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 realization p=7", criterion1},
      {"2 realization p=13, p=31", criterion2},
      {"3 defining relations", criterion3},
      {"4 division evidence p=7", criterion4},
      {"5 reduced norm oracles", criterion5},
      {"6 norm obstruction", criterion6},
      {"7 projective canonicalization", criterion7},
      {"8 Galois layer", criterion8},
      {"9 negative controls", criterion9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome r;
    try {
      run(r);
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail << " [exception: " << e.what() << "]";
    }
    if (!r.ok) ++failed;
    std::printf("%s criterion %s:%s\n", r.ok ? "PASS" : "FAIL", name.c_str(), r.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
