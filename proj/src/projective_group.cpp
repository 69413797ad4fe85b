#include "sbcert/projective_group.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sbcert/error.hpp"

namespace sbcert {

ProjClass canonicalize(const AlgebraElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero element has no projective class");
  const CycloField& f = x.algebra().field();
  const std::size_t k = static_cast<std::size_t>(f.k());
  const auto periods = f.gaussian_periods();
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    const auto c = period_coordinates(x[i]);
    for (std::size_t j = 0; j < 3; ++j) {
      auto first = c.begin() + static_cast<std::ptrdiff_t>(j * k);
      if (std::all_of(first, first + static_cast<std::ptrdiff_t>(k), [](const Rational& q) { return is_zero(q); }))
        continue;
      FieldElem lead = f.zero();
      for (std::size_t m = 0; m < k; ++m) {
        if (!is_zero(c[j * k + m])) lead = lead + c[j * k + m] * periods[m];
      }
      return ProjClass(scale(inverse(lead), x));
    }
  }
  throw Error(ErrorCode::ZeroElement, "nonzero element with vanishing K-coordinates");
}

bool class_eq(const AlgebraElem& x, const AlgebraElem& y) {
  if (x.is_zero() || y.is_zero()) throw Error(ErrorCode::ZeroElement, "class_eq on the zero element");
  std::size_t i = 0;
  while (y[i].is_zero()) ++i;
  if (x[i].is_zero()) return false;
  const FieldElem c = x[i] / y[i];
  return is_in_K(c) && scale(c, y) == x;
}

ProjClass operator*(const ProjClass& x, const ProjClass& y) { return canonicalize(x.rep_ * y.rep_); }

ProjClass identity_class(const CyclicAlgebra& algebra) { return canonicalize(algebra.one()); }

ProjClass power(const ProjClass& g, std::int64_t n) { return canonicalize(power(g.rep(), n)); }

std::int64_t element_order(const ProjClass& g, std::int64_t cap) {
  const ProjClass e = identity_class(g.rep().algebra());
  ProjClass x = g;
  for (std::int64_t n = 1; n <= cap; ++n) {
    if (x == e) return n;
    x = x * g;
  }
  throw Error(ErrorCode::CapExceeded, "element order exceeds " + std::to_string(cap));
}

std::vector<ProjClass> generate_subgroup(const std::vector<ProjClass>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::ZeroElement, "generate_subgroup needs at least one generator");
  std::vector<ProjClass> elements{identity_class(gens.front().rep().algebra())};
  std::set<ProjClass> seen{elements.front()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const ProjClass& g : gens) {
      ProjClass h = elements[next] * g;
      if (seen.insert(h).second) {
        elements.push_back(std::move(h));
        if (elements.size() > cap) {
          throw Error(ErrorCode::CapExceeded, "subgroup has more than " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  return elements;
}

std::size_t FiniteGroup::element_order(std::size_t x) const {
  std::size_t n = 1;
  for (std::size_t y = x; y != identity; y = mul(y, x)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t x = 0; x < order(); ++x)
    for (std::size_t y = x + 1; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::map<std::size_t, std::size_t> FiniteGroup::order_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t x = 0; x < order(); ++x) ++h[element_order(x)];
  return h;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
  FiniteGroup g;
  g.table = std::move(table);
  const std::size_t n = g.table.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool is_identity = true;
    for (std::size_t x = 0; x < n && is_identity; ++x) is_identity = g.table[e][x] == x && g.table[x][e] == x;
    if (is_identity) {
      g.identity = e;
      break;
    }
  }
  g.inverse.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.table[x][y] == g.identity) g.inverse[x] = y;
  return g;
}

FiniteGroup cayley_table(const std::vector<ProjClass>& elements) {
  std::map<ProjClass, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto it = index.find(elements[i] * elements[j]);
      if (it == index.end()) throw Error(ErrorCode::CapExceeded, "element list is not closed under products");
      table[i][j] = it->second;
    }
  }
  return FiniteGroup::from_table(std::move(table));
}

std::pair<std::int64_t, std::int64_t> AbstractGp::multiply(std::pair<std::int64_t, std::int64_t> x,
                                                           std::pair<std::int64_t, std::int64_t> y) const {
  return {(x.first + pow_mod(d, x.second, p) * y.first) % p, (x.second + y.second) % 3};
}

FiniteGroup AbstractGp::table() const {
  const std::size_t n = order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto [u, v] = multiply(element(i), element(j));
      t[i][j] = index(u, v);
    }
  }
  return FiniteGroup::from_table(std::move(t));
}

AbstractGp build_abstract(std::int64_t p, std::int64_t d) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (d % p == 1 || pow_mod(d, 3, p) != 1) {
    throw Error(ErrorCode::BadResidue, std::to_string(d) + " does not have order 3 mod " + std::to_string(p));
  }
  return AbstractGp{p, d};
}

bool satisfies_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (const auto& row : g.table) {
    if (row.size() != n) return false;
    for (std::size_t x : row)
      if (x >= n) return false;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x) return false;
    if (g.inverse[x] >= n || g.mul(g.inverse[x], x) != g.identity) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) return false;
  return true;
}

std::pair<ProjClass, ProjClass> standard_generators(const CyclicAlgebra& algebra) {
  return {canonicalize(algebra.embed_L(algebra.field().zeta())), canonicalize(algebra.alpha())};
}

RelationReport verify_relations(const CyclicAlgebra& algebra) {
  const auto [xi, alpha] = standard_generators(algebra);
  const ProjClass e = identity_class(algebra);
  const std::int64_t p = algebra.field().p();
  const std::int64_t d = algebra.field().d();
  RelationReport r;
  r.xi_power_p = power(xi, p) == e;
  r.alpha_cubed = power(alpha, 3) == e;
  r.twisted = xi * alpha == alpha * power(xi, d);
  r.xi_nontrivial = !(xi == e);
  r.alpha_nontrivial = !(alpha == e);
  return r;
}

IsoReport check_isomorphism(const std::vector<ProjClass>& elements, const FiniteGroup& table,
                            const AbstractGp& abstract) {
  IsoReport report;
  if (elements.empty()) return report;
  const CyclicAlgebra& algebra = elements.front().rep().algebra();
  const auto [xi, alpha] = standard_generators(algebra);
  const ProjClass alpha_inv = power(alpha, 2);

  std::map<ProjClass, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  const std::size_t n = abstract.order();
  std::vector<ProjClass> xi_pows{identity_class(algebra)};
  for (std::int64_t u = 1; u < abstract.p; ++u) xi_pows.push_back(xi_pows.back() * xi);
  std::vector<std::size_t> phi;
  phi.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, v] = abstract.element(i);
    ProjClass img = xi_pows[static_cast<std::size_t>(u)];
    for (std::int64_t t = 0; t < v; ++t) img = img * alpha_inv;
    auto it = index.find(img);
    if (it == index.end()) return report;
    phi.push_back(it->second);
  }

  report.bijective = elements.size() == n && std::set<std::size_t>(phi.begin(), phi.end()).size() == n;

  const FiniteGroup model = abstract.table();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      ++report.pairs_checked;
      if (table.mul(phi[g], phi[h]) != phi[model.mul(g, h)] && !report.counterexample) report.counterexample = {g, h};
    }
  }
  report.ok = report.bijective && !report.counterexample;
  return report;
}

IsoReport check_isomorphism(const std::vector<ProjClass>& elements, const AbstractGp& abstract) {
  return check_isomorphism(elements, cayley_table(elements), abstract);
}

namespace {

std::vector<std::size_t> closure(const FiniteGroup& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> elems{g.identity};
  std::vector<bool> in(g.order(), false);
  in[g.identity] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t gen : {a, b}) {
      const std::size_t h = g.mul(elems[i], gen);
      if (!in[h]) {
        in[h] = true;
        elems.push_back(h);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_normal_abelian(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  std::vector<bool> in(g.order(), false);
  for (std::size_t x : h) in[x] = true;
  for (std::size_t x : h)
    for (std::size_t y : h)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t x : h)
      if (!in[g.mul(g.mul(s, x), g.inverse[s])]) return false;
  return true;
}

}  // namespace

JordanReport jordan_index_check(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> subgroups;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a; b < g.order(); ++b) subgroups.insert(closure(g, a, b));

  JordanReport r;
  r.non_abelian = !g.is_abelian();
  r.subgroup_count = subgroups.size();
  r.index = g.order();
  r.witness_order = 1;
  for (const auto& h : subgroups) {
    if (g.order() / h.size() < r.index && is_normal_abelian(g, h)) {
      r.index = g.order() / h.size();
      r.witness_order = h.size();
    }
  }
  return r;
}

}  // namespace sbcert
