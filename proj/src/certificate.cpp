#include "sbcert/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <string>

#include "sbcert/error.hpp"
#include "sbcert/sampling.hpp"

namespace sbcert {

bool FieldChecks::ok(std::int64_t k) const {
  return aut_composition && sigma_order == 3 && period_count == static_cast<std::size_t>(k) &&
         period_rank == static_cast<std::size_t>(k) && periods_in_K && period_sum && field_axioms.ok() &&
         aut_homomorphism.ok() && inverse_agreement.ok() && norm_multiplicative.ok() && decompose_roundtrip.ok();
}

bool AlgebraChecks::ok() const {
  return alpha_cubed && xi_alpha && twisted_commutation.ok() && associativity.ok() &&
         splitting_multiplicative.ok() && nrd_in_K.ok() && nrd_multiplicative.ok() && division.ok() &&
         regular_rep_agreement.ok();
}

bool GroupChecks::ok() const {
  return order == expected_order && histogram_ok && axioms && relations.ok() && iso.ok && jordan.index == 3 &&
         jordan.non_abelian;
}

namespace {

void tally(TrialCount& t, bool passed) {
  ++t.trials;
  if (!passed) ++t.failures;
}

FieldChecks check_field(const CycloField& f, Sampler& rng, std::uint64_t trials) {
  FieldChecks c;
  const std::int64_t p = f.p();

  const FieldElem x = rng.field_elem(f);
  c.aut_composition = true;
  for (std::int64_t t = 1; t < p; ++t) {
    const FieldElem tx = apply_aut(t, x);
    for (std::int64_t s = 1; s < p; ++s) {
      ++c.aut_pairs;
      if (!(apply_aut(s, tx) == apply_aut(s * t % p, x))) c.aut_composition = false;
    }
  }

  const FieldElem z = f.zeta();
  FieldElem y = sigma(z);
  c.sigma_order = 1;
  while (!(y == z) && c.sigma_order <= p) {
    y = sigma(y);
    ++c.sigma_order;
  }

  const auto periods = f.gaussian_periods();
  c.period_count = periods.size();
  Matrix<Rational> m(periods.size(), f.degree(), Rational(0));
  FieldElem sum = f.zero();
  c.periods_in_K = true;
  for (std::size_t j = 0; j < periods.size(); ++j) {
    for (std::size_t i = 0; i < f.degree(); ++i) m(j, i) = periods[j].coord(i);
    c.periods_in_K = c.periods_in_K && is_in_K(periods[j]);
    sum = sum + periods[j];
  }
  c.period_rank = rank(m);
  c.period_sum = sum == f.from_rational(Rational(-1));

  for (std::uint64_t i = 0; i < trials; ++i) {
    const FieldElem a = rng.field_elem(f), b = rng.field_elem(f), e = rng.field_elem(f);
    tally(c.field_axioms, (a + b) + e == a + (b + e) && (a * b) * e == a * (b * e) && a * (b + e) == a * b + a * e);

    const std::int64_t t = rng.integer(1, p - 1);
    tally(c.aut_homomorphism,
          apply_aut(t, a + b) == apply_aut(t, a) + apply_aut(t, b) && apply_aut(t, a * b) == apply_aut(t, a) * apply_aut(t, b));

    const FieldElem nz = rng.nonzero_field_elem(f);
    const FieldElem inv = inverse(nz);
    tally(c.inverse_agreement, nz * inv == f.one() && inv == inverse_by_linear_solve(nz));

    const FieldElem na = relative_norm(a);
    tally(c.norm_multiplicative, is_in_K(na) && relative_norm(a * b) == na * relative_norm(b));

    const auto [k0, k1, k2] = decompose_over_K(e);
    tally(c.decompose_roundtrip,
          is_in_K(k0) && is_in_K(k1) && is_in_K(k2) && k0 + k1 * z + k2 * z * z == e);
  }
  return c;
}

AlgebraChecks check_algebra(const CyclicAlgebra& alg, Sampler& rng, std::uint64_t trials,
                            std::uint64_t regular_rep_trials) {
  AlgebraChecks c;
  const CycloField& f = alg.field();
  const AlgebraElem alpha = alg.alpha();
  const AlgebraElem one = alg.one();

  c.alpha_cubed = power(alpha, 3) == alg.embed_L(f.from_rational(alg.a()));
  c.xi_alpha = alg.embed_L(f.zeta()) * alpha == alpha * alg.embed_L(f.zeta_pow(f.d()));

  const Matrix<FieldElem> identity = splitting_matrix(one);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const FieldElem lambda = rng.field_elem(f);
    tally(c.twisted_commutation, alg.embed_L(lambda) * alpha == alpha * alg.embed_L(sigma(lambda)));

    const AlgebraElem x = rng.algebra_elem(alg), y = rng.algebra_elem(alg), z = rng.algebra_elem(alg);
    const AlgebraElem xy = x * y;
    tally(c.associativity, xy * z == x * (y * z));
    tally(c.splitting_multiplicative,
          splitting_matrix(xy) == splitting_matrix(x) * splitting_matrix(y) &&
              splitting_matrix(x) * identity == splitting_matrix(x));

    const FieldElem nx = reduced_norm(x);
    tally(c.nrd_in_K, is_in_K(nx));
    tally(c.nrd_multiplicative, reduced_norm(xy) == nx * reduced_norm(y));

    const AlgebraElem u = rng.nonzero_algebra_elem(alg);
    bool divides = !reduced_norm(u).is_zero();
    if (divides) {
      const AlgebraElem v = inverse(u);
      divides = u * v == one && v * u == one && v == inverse_by_adjugate(u);
    }
    tally(c.division, divides);
  }

  for (std::uint64_t i = 0; i < regular_rep_trials; ++i) {
    const AlgebraElem x = rng.algebra_elem(alg);
    const FieldElem nrd = reduced_norm(x);
    const Rational det = regular_rep_det(x);
    // det over Q of left multiplication equals N_{L/Q}(Nrd x) = N_{K/Q}(Nrd x)^3.
    tally(c.regular_rep_agreement, is_zero(det) == nrd.is_zero() && det == absolute_norm(nrd));
  }
  return c;
}

GroupChecks check_group(const CyclicAlgebra& alg) {
  GroupChecks c;
  const std::int64_t p = alg.field().p();
  const auto [xi, alpha] = standard_generators(alg);
  const auto elements = generate_subgroup({xi, alpha}, static_cast<std::size_t>(10 * p));
  const FiniteGroup g = cayley_table(elements);
  c.order = g.order();
  c.expected_order = static_cast<std::size_t>(3 * p);
  c.histogram = g.order_histogram();
  const std::map<std::size_t, std::size_t> expected{
      {1, 1}, {3, static_cast<std::size_t>(2 * p)}, {static_cast<std::size_t>(p), static_cast<std::size_t>(p - 1)}};
  c.histogram_ok = c.histogram == expected;
  c.axioms = satisfies_group_axioms(g);
  c.relations = verify_relations(alg);
  c.iso = check_isomorphism(elements, g, build_abstract(p, alg.field().d()));
  c.jordan = jordan_index_check(g);
  return c;
}

std::string stage_failure(const Certificate& cert, const std::string& stage) {
  if (stage == "field") return "field identity checks failed";
  if (stage == "obstruction") {
    return cert.obstruction && cert.obstruction->witness ? "norm search found a preimage of a"
                                                         : "a is a cube mod p";
  }
  if (stage == "algebra") return "algebra identity checks failed";
  return "group checks failed";
}

}  // namespace

Certificate run_pipeline(std::int64_t p, const PipelineOptions& options) {
  const CycloField field = CycloField::make(p);
  Certificate cert;
  cert.p = p;
  cert.d = field.d();
  cert.k = field.k();
  cert.seed = options.seed;
  cert.trials = options.trials;

  if (options.a) {
    const std::int64_t a = *options.a;
    if (a % p == 0) {
      throw Error(ErrorCode::RejectedOverride,
                  "a = " + std::to_string(a) + " is divisible by p, so the residue obstruction does not apply");
    }
    if (is_cube_mod_p(a, p)) {
      throw Error(ErrorCode::RejectedOverride,
                  "a = " + std::to_string(a) + " is a cube mod " + std::to_string(p) +
                      "; the residue obstruction cannot certify that (L/K, sigma, a) is a division algebra");
    }
    cert.a = a;
    cert.a_overridden = true;
  } else {
    cert.a = choose_a(p);
  }
  const std::int64_t bound = options.norm_search_bound.value_or(p == 7 ? 1 : 0);
  const std::uint64_t reg_trials =
      options.regular_rep_trials.value_or(std::min<std::uint64_t>(options.trials, p <= 13 ? 100 : 10));

  Sampler rng(options.seed);
  const CyclicAlgebra algebra(field, Rational(static_cast<long>(cert.a)));

  auto run_stage = [&](const std::string& name, const std::function<bool()>& body) {
    if (cert.failed_stage) return;
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = body();
      if (!passed) cert.failure_detail = stage_failure(cert, name);
    } catch (const Error& e) {
      cert.failure_detail = e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    cert.timings.push_back({name, static_cast<std::int64_t>(ms)});
    if (!passed) cert.failed_stage = name;
  };

  run_stage("field", [&] {
    cert.field = check_field(field, rng, options.trials);
    return cert.field->ok(field.k());
  });
  run_stage("obstruction", [&] {
    cert.obstruction = make_obstruction_report(field, cert.a, bound);
    return cert.obstruction->certificate_grade() && algebra.obstruction_holds();
  });
  run_stage("algebra", [&] {
    cert.algebra = check_algebra(algebra, rng, options.trials, reg_trials);
    return cert.algebra->ok();
  });
  run_stage("group", [&] {
    cert.group = check_group(algebra);
    return cert.group->ok();
  });
  return cert;
}

namespace {

using nlohmann::ordered_json;

ordered_json trial_json(const TrialCount& t) { return {{"trials", t.trials}, {"failures", t.failures}}; }

}  // namespace

std::string to_json(const Certificate& cert, bool include_timings) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = cert.p;
  j["d"] = cert.d;
  j["k"] = cert.k;
  j["a"] = cert.a;
  j["a_source"] = cert.a_overridden ? "override" : "smallest_non_cube";
  j["seed"] = std::to_string(cert.seed);
  j["trials"] = cert.trials;

  if (const auto& f = cert.field) {
    j["field"] = {
        {"aut_composition", {{"pairs", f->aut_pairs}, {"ok", f->aut_composition}}},
        {"sigma_order", f->sigma_order},
        {"gaussian_periods",
         {{"count", f->period_count}, {"rank", f->period_rank}, {"in_K", f->periods_in_K}, {"sum_is_minus_one", f->period_sum}}},
        {"field_axioms", trial_json(f->field_axioms)},
        {"aut_homomorphism", trial_json(f->aut_homomorphism)},
        {"inverse_agreement", trial_json(f->inverse_agreement)},
        {"norm_multiplicative", trial_json(f->norm_multiplicative)},
        {"decompose_roundtrip", trial_json(f->decompose_roundtrip)},
        {"ok", f->ok(cert.k)},
    };
  } else {
    j["field"] = nullptr;
  }

  if (const auto& o = cert.obstruction) {
    ordered_json witness = nullptr;
    if (o->witness) {
      witness = ordered_json::array();
      for (const Rational& q : o->witness->coords()) witness.push_back(to_string(q));
    }
    j["obstruction"] = {
        {"cubes_mod_p", o->cubes},
        {"a_mod_p", o->a_mod_p},
        {"power_residue", o->power_residue},
        {"is_cube", o->is_cube},
        {"search_bound", o->search_bound},
        {"search", std::string(to_string(o->search))},
        {"candidates_examined", std::to_string(o->examined)},
        {"witness", witness},
        {"ok", o->certificate_grade()},
    };
  } else {
    j["obstruction"] = nullptr;
  }

  if (const auto& a = cert.algebra) {
    j["algebra_checks"] = {
        {"seed", std::to_string(cert.seed)},
        {"alpha_cubed_equals_a", a->alpha_cubed},
        {"xi_alpha_equals_alpha_xi_d", a->xi_alpha},
        {"twisted_commutation", trial_json(a->twisted_commutation)},
        {"associativity", trial_json(a->associativity)},
        {"splitting_multiplicative", trial_json(a->splitting_multiplicative)},
        {"reduced_norm_in_K", trial_json(a->nrd_in_K)},
        {"reduced_norm_multiplicative", trial_json(a->nrd_multiplicative)},
        {"division", trial_json(a->division)},
        {"regular_rep_agreement", trial_json(a->regular_rep_agreement)},
        {"ok", a->ok()},
    };
  } else {
    j["algebra_checks"] = nullptr;
  }

  if (const auto& g = cert.group) {
    ordered_json hist = ordered_json::object();
    for (const auto& [order, count] : g->histogram) hist[std::to_string(order)] = count;
    ordered_json counter = nullptr;
    if (g->iso.counterexample) counter = {g->iso.counterexample->first, g->iso.counterexample->second};
    j["group"] = {
        {"order", g->order},
        {"expected_order", g->expected_order},
        {"order_histogram", hist},
        {"histogram_ok", g->histogram_ok},
        {"group_axioms", g->axioms},
        {"relations",
         {{"xi_pow_p_is_identity", g->relations.xi_power_p},
          {"alpha_cubed_is_identity", g->relations.alpha_cubed},
          {"xi_alpha_equals_alpha_xi_d", g->relations.twisted},
          {"xi_nontrivial", g->relations.xi_nontrivial},
          {"alpha_nontrivial", g->relations.alpha_nontrivial}}},
        {"isomorphism",
         {{"convention", kPhiConvention},
          {"pairs_checked", g->iso.pairs_checked},
          {"bijective", g->iso.bijective},
          {"counterexample", counter},
          {"ok", g->iso.ok}}},
        {"jordan",
         {{"index", g->jordan.index},
          {"witness_subgroup_order", g->jordan.witness_order},
          {"subgroups_enumerated", g->jordan.subgroup_count},
          {"non_abelian", g->jordan.non_abelian}}},
        {"ok", g->ok()},
    };
  } else {
    j["group"] = nullptr;
  }

  j["imported_lemma_note"] = std::string(kImportedLemma);
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& s : cert.timings) t[s.stage + "_ms"] = s.ms;
    j["timings"] = t;
  }
  j["failed_stage"] = cert.failed_stage ? ordered_json(*cert.failed_stage) : ordered_json(nullptr);
  j["failure_detail"] = cert.failure_detail ? ordered_json(*cert.failure_detail) : ordered_json(nullptr);
  j["overall"] = cert.pass() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

}  // namespace sbcert
