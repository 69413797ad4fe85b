#include "sbcert/cyclotomic_field.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sbcert/error.hpp"
#include "sbcert/linalg.hpp"

namespace sbcert {

namespace detail {

struct FieldData {
  std::int64_t p = 0;
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::vector<std::array<std::int64_t, 3>> cosets;
  // Maps power-basis coordinates of x to the period coordinates of the
  // components (k0, k1, k2) of x over K.
  std::optional<Matrix<Rational>> to_period_coords;
};

}  // namespace detail

namespace {

using Poly = std::vector<Rational>;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Folds a length-p coefficient vector (polynomial mod x^p - 1) onto the power
// basis of length p-1 using zeta^(p-1) = -(1 + ... + zeta^(p-2)).
std::vector<Rational> reduce_cyclic(std::vector<Rational> c) {
  const Rational top = c.back();
  c.pop_back();
  if (!is_zero(top)) {
    for (auto& x : c) x -= top;
  }
  return c;
}

void trim(Poly& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

// Quotient and remainder of f by nonzero g over Q.
std::pair<Poly, Poly> divmod(Poly f, const Poly& g) {
  trim(f);
  Poly q;
  if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, Rational(0));
  const Rational& lead = g.back();
  while (f.size() >= g.size()) {
    const std::size_t shift = f.size() - g.size();
    const Rational c = f.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return {std::move(q), std::move(f)};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Integers v with coords = v / den, den the lcm of the denominators.
std::vector<Integer> scaled_integers(const std::vector<Rational>& coords, Integer& den) {
  den = 1;
  for (const Rational& q : coords) {
    if (q.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), coords[i].get_den_mpz_t());
    out[i] *= coords[i].get_num();
  }
  return out;
}

Matrix<Rational> multiplication_matrix(const FieldElem& x) {
  const CycloField& f = x.field();
  const std::size_t n = f.degree();
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const FieldElem col = x * f.zeta_pow(static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coord(i);
  }
  return m;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t t = 3; t <= n / t; t += 2) {
    if (n % t == 0) return false;
  }
  return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  __int128 result = 1;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result % m);
}

std::int64_t multiplicative_order(std::int64_t t, std::int64_t p) {
  std::int64_t x = mod(t, p);
  std::int64_t n = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>(static_cast<__int128>(x) * mod(t, p) % p);
    ++n;
  }
  return n;
}

CycloField CycloField::make(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p % 3 != 1) {
    throw Error(ErrorCode::WrongResidue,
                std::to_string(p) + " = " + std::to_string(p % 3) + " mod 3, expected 1");
  }
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = (p - 1) / 3;
  for (std::int64_t t = 2; t < p; ++t) {
    if (pow_mod(t, 3, p) == 1) {
      data->d = t;
      break;
    }
  }

  std::vector<bool> used(static_cast<std::size_t>(p), false);
  for (std::int64_t c = 1; c < p; ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    std::array<std::int64_t, 3> coset{};
    std::int64_t m = c;
    for (auto& e : coset) {
      e = m;
      used[static_cast<std::size_t>(m)] = true;
      m = m * data->d % p;
    }
    data->cosets.push_back(coset);
  }

  CycloField field(data);

  // Columns eta_j * zeta^i, ordered i-major, form a Q-basis of L.
  const auto periods = field.gaussian_periods();
  const std::size_t n = field.degree();
  const std::size_t k = static_cast<std::size_t>(data->k);
  Matrix<Rational> basis(n, n, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) {
    const FieldElem z = field.zeta_pow(static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < k; ++j) {
      const FieldElem col = periods[j] * z;
      for (std::size_t r = 0; r < n; ++r) basis(r, i * k + j) = col.coord(r);
    }
  }
  auto inv = inverse(basis, Rational(1));
  if (!inv) throw Error(ErrorCode::SingularBasis, "K-basis of L is singular for p = " + std::to_string(p));
  data->to_period_coords = std::move(*inv);
  return field;
}

std::int64_t CycloField::p() const { return data_->p; }
std::int64_t CycloField::d() const { return data_->d; }
std::int64_t CycloField::k() const { return data_->k; }
std::size_t CycloField::degree() const { return static_cast<std::size_t>(data_->p - 1); }

FieldElem CycloField::zero() const { return FieldElem(*this, std::vector<Rational>(degree(), Rational(0))); }

FieldElem CycloField::one() const { return from_rational(Rational(1)); }

FieldElem CycloField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return FieldElem(*this, std::move(c));
}

FieldElem CycloField::from_coords(std::vector<Rational> coords) const {
  if (coords.size() != degree()) {
    throw Error(ErrorCode::ParamMismatch, "expected " + std::to_string(degree()) + " coordinates, got " +
                                              std::to_string(coords.size()));
  }
  for (auto& c : coords) c.canonicalize();
  return FieldElem(*this, std::move(coords));
}

FieldElem CycloField::zeta_pow(std::int64_t e) const {
  std::vector<Rational> c(static_cast<std::size_t>(p()), Rational(0));
  c[static_cast<std::size_t>(mod(e, p()))] = 1;
  return FieldElem(*this, reduce_cyclic(std::move(c)));
}

FieldElem CycloField::zeta() const { return zeta_pow(1); }

std::vector<FieldElem> CycloField::gaussian_periods() const {
  std::vector<FieldElem> out;
  out.reserve(data_->cosets.size());
  for (const auto& coset : data_->cosets) {
    std::vector<Rational> c(static_cast<std::size_t>(p()), Rational(0));
    for (std::int64_t m : coset) c[static_cast<std::size_t>(m)] += 1;
    out.push_back(FieldElem(*this, reduce_cyclic(std::move(c))));
  }
  return out;
}

const std::vector<std::array<std::int64_t, 3>>& CycloField::period_cosets() const { return data_->cosets; }

bool FieldElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sbcert::is_zero(q); });
}

bool FieldElem::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return sbcert::is_zero(q); });
}

FieldElem FieldElem::operator-() const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return FieldElem(field_, std::move(c));
}

namespace {
void require_same_field(const FieldElem& x, const FieldElem& y) {
  if (!(x.field() == y.field())) {
    throw Error(ErrorCode::ParamMismatch, "elements of Q(zeta_" + std::to_string(x.field().p()) +
                                              ") and Q(zeta_" + std::to_string(y.field().p()) + ")");
  }
}
}  // namespace

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  require_same_field(x, y);
  std::vector<Rational> c(x.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords_[i] + y.coords_[i];
  return FieldElem(x.field_, std::move(c));
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
  require_same_field(x, y);
  std::vector<Rational> c(x.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords_[i] - y.coords_[i];
  return FieldElem(x.field_, std::move(c));
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  require_same_field(x, y);
  const std::size_t n = x.coords_.size();
  const std::size_t p = n + 1;
  // Clear denominators, convolve mod x^p - 1 over Z, then fold zeta^(p-1).
  Integer dx, dy;
  const auto xs = scaled_integers(x.coords_, dx);
  const auto ys = scaled_integers(y.coords_, dy);
  std::vector<Integer> c(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(xs[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(ys[j]) == 0) continue;
      std::size_t e = i + j;
      if (e >= p) e -= p;
      mpz_addmul(c[e].get_mpz_t(), xs[i].get_mpz_t(), ys[j].get_mpz_t());
    }
  }
  const Integer den = dx * dy;
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = Rational(Integer(c[i] - c[n]), den);
    out[i].canonicalize();
  }
  return FieldElem(x.field_, std::move(out));
}

FieldElem operator*(const Rational& s, const FieldElem& x) {
  std::vector<Rational> c(x.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * x.coords_[i];
  return FieldElem(x.field_, std::move(c));
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * inverse(y); }

bool operator<(const FieldElem& x, const FieldElem& y) {
  return std::lexicographical_compare(x.coords_.begin(), x.coords_.end(), y.coords_.begin(), y.coords_.end());
}

FieldElem inverse_by_euclid(const FieldElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q(zeta_p)");
  const std::size_t n = x.field().degree();
  Poly phi(n + 1, Rational(1));
  Poly f(x.coords().begin(), x.coords().end());
  trim(f);

  // Invariant: r_i = s_i * x (mod phi).
  Poly r0 = phi, r1 = f;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // phi is irreducible, so the gcd r0 is a nonzero constant.
  const Rational g = r0[0];
  s0 = divmod(s0, phi).second;
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < s0.size(); ++i) c[i] = s0[i] / g;
  return x.field().from_coords(std::move(c));
}

// x^-1 = sigma(x) sigma^2(x) / n with n = N_{L/K}(x) in K, and
// n^-1 = m / N_{K/Q}(n) where m is the product of the other Q-conjugates of n,
// one for each coset of <d> besides the trivial one.
FieldElem inverse(const FieldElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q(zeta_p)");
  const CycloField& f = x.field();
  if (x.is_rational()) return f.from_rational(1 / x.coord(0));
  const FieldElem y = sigma_pow(1, x) * sigma_pow(2, x);
  const FieldElem n = x * y;
  FieldElem m = f.one();
  const auto& cosets = f.period_cosets();
  for (std::size_t j = 1; j < cosets.size(); ++j) m = m * apply_aut(cosets[j][0], n);
  const FieldElem total = n * m;
  if (!total.is_rational() || is_zero(total.coord(0))) {
    throw Error(ErrorCode::NotInvertible, "norm of a nonzero element is not a nonzero rational");
  }
  return Rational(1 / total.coord(0)) * (y * m);
}

FieldElem inverse_by_linear_solve(const FieldElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q(zeta_p)");
  const FieldElem one = x.field().one();
  const std::vector<Rational> rhs(one.coords().begin(), one.coords().end());
  auto y = solve(multiplication_matrix(x), rhs);
  if (!y) throw Error(ErrorCode::NotInvertible, "multiplication matrix is singular");
  return FieldElem(x.field_, std::move(*y));
}

FieldElem apply_aut(std::int64_t t, const FieldElem& x) {
  const std::int64_t p = x.field().p();
  if (mod(t, p) == 0) {
    throw Error(ErrorCode::BadResidue, std::to_string(t) + " is not a unit mod " + std::to_string(p));
  }
  const std::int64_t tt = mod(t, p);
  std::vector<Rational> c(static_cast<std::size_t>(p), Rational(0));
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (is_zero(x.coords_[i])) continue;
    c[static_cast<std::size_t>(static_cast<std::int64_t>(i) * tt % p)] += x.coords_[i];
  }
  return FieldElem(x.field_, reduce_cyclic(std::move(c)));
}

FieldElem sigma_pow(std::int64_t n, const FieldElem& x) {
  const CycloField& f = x.field();
  return apply_aut(pow_mod(f.d(), mod(n, 3), f.p()), x);
}

FieldElem relative_norm(const FieldElem& x) { return x * sigma_pow(1, x) * sigma_pow(2, x); }

Rational absolute_norm(const FieldElem& x) { return determinant(multiplication_matrix(x)); }

bool is_in_K(const FieldElem& x) { return sigma(x) == x; }

std::vector<Rational> period_coordinates(const FieldElem& x) {
  const Matrix<Rational>& m = *x.field().data_->to_period_coords;
  const std::size_t n = m.rows();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_zero(x.coord(c)) && !is_zero(m(r, c))) acc += m(r, c) * x.coord(c);
    }
    out[r] = acc;
  }
  return out;
}

std::array<FieldElem, 3> decompose_over_K(const FieldElem& x) {
  const CycloField& f = x.field();
  const std::size_t k = static_cast<std::size_t>(f.k());
  const auto c = period_coordinates(x);
  const auto periods = f.gaussian_periods();
  std::array<FieldElem, 3> out{f.zero(), f.zero(), f.zero()};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_zero(c[i * k + j])) out[i] = out[i] + c[i * k + j] * periods[j];
    }
  }
  return out;
}

}  // namespace sbcert
