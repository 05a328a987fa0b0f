#include "corrdyn/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace corrdyn {

namespace {

// n (n-1) ... (n-k+1)
Rational falling(unsigned n, unsigned k) {
  Rational r(1);
  for (unsigned t = 0; t < k; ++t) r *= Rational(n - t);
  return r;
}

std::vector<Rational> powers(const Rational& x, unsigned n) {
  std::vector<Rational> p(n + 1, Rational(1));
  for (unsigned k = 1; k <= n; ++k) p[k] = p[k - 1] * x;
  return p;
}

const Rational* first_nonzero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return &x;
  return nullptr;
}

mpz_class lcm_of_denominators(std::span<const Rational> v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    const mpz_class den = x.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

// Positive divisors of |n|, n != 0. Trial division up to 10^6, then a
// primality test on the cofactor.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2; p <= 1000000UL && mpz_class(p) * p <= n; ++p) {
    unsigned mult = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++mult;
    }
    if (mult != 0) factors.emplace_back(mpz_class(p), mult);
  }
  if (n > 1) {
    if (n > mpz_class("1000000000000") && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::runtime_error("rational_roots: coefficient too large to factor");
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, mult] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= mult; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

// ---- Matrix2 ---------------------------------------------------------------

Matrix2 Matrix2::inverse() const {
  const Rational dt = det();
  if (dt.is_zero()) throw std::domain_error("Matrix2::inverse: singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

// ---- BinaryForm ------------------------------------------------------------

BinaryForm::BinaryForm(unsigned degree) : n_(degree), c_(degree + 1, Rational(0)) {}

BinaryForm::BinaryForm(unsigned degree, std::vector<Rational> coeffs)
    : n_(degree), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("BinaryForm: expected " + std::to_string(degree + 1) +
                                " coefficients, got " + std::to_string(c_.size()));
}

BinaryForm BinaryForm::homogenize(const Polynomial& p, unsigned degree) {
  if (p.degree() > static_cast<int>(degree))
    throw std::invalid_argument("BinaryForm::homogenize: polynomial degree exceeds form degree");
  BinaryForm f(degree);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) f.c_[k] = p.coeffs()[k];
  return f;
}

BinaryForm BinaryForm::monomial(unsigned degree, unsigned k, const Rational& c) {
  if (k > degree) throw std::invalid_argument("BinaryForm::monomial: index exceeds degree");
  BinaryForm f(degree);
  f.c_[k] = c;
  return f;
}

bool BinaryForm::is_zero() const { return first_nonzero(c_) == nullptr; }

Rational BinaryForm::operator()(const Rational& z0, const Rational& z1) const {
  const auto p0 = powers(z0, n_);
  const auto p1 = powers(z1, n_);
  Rational acc(0);
  for (unsigned k = 0; k <= n_; ++k)
    if (!c_[k].is_zero()) acc += c_[k] * p0[n_ - k] * p1[k];
  return acc;
}

Polynomial BinaryForm::dehomogenize() const { return Polynomial(c_); }

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("BinaryForm +: degree mismatch");
  for (unsigned k = 0; k <= n_; ++k) c_[k] += o.c_[k];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.n_ != n_) throw std::invalid_argument("BinaryForm -: degree mismatch");
  for (unsigned k = 0; k <= n_; ++k) c_[k] -= o.c_[k];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.n_ + b.n_);
  for (unsigned i = 0; i <= a.n_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; j <= b.n_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

// ---- BiForm ----------------------------------------------------------------

BiForm::BiForm(unsigned d, unsigned e)
    : d_(d), e_(e), a_(static_cast<std::size_t>(d + 1) * (e + 1), Rational(0)) {}

BiForm::BiForm(unsigned d, unsigned e, std::vector<Rational> row_major)
    : d_(d), e_(e), a_(std::move(row_major)) {
  if (a_.size() != static_cast<std::size_t>(d + 1) * (e + 1))
    throw std::invalid_argument("BiForm: coefficient matrix must be (d+1) x (e+1)");
}

BiForm BiForm::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("BiForm: empty coefficient matrix");
  const auto d = static_cast<unsigned>(rows.size() - 1);
  const auto e = static_cast<unsigned>(rows.front().size() - 1);
  std::vector<Rational> flat;
  flat.reserve(rows.size() * rows.front().size());
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(e) + 1)
      throw std::invalid_argument("BiForm: ragged coefficient matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return BiForm(d, e, std::move(flat));
}

bool BiForm::is_zero() const { return first_nonzero(a_) == nullptr; }

BiForm& BiForm::operator+=(const BiForm& o) {
  if (o.d_ != d_ || o.e_ != e_) throw std::invalid_argument("BiForm +: bidegree mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
  if (o.d_ != d_ || o.e_ != e_) throw std::invalid_argument("BiForm -: bidegree mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

BiForm& BiForm::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

// ---- CovariantForm ---------------------------------------------------------

CovariantForm::CovariantForm(unsigned degree) : n_(degree), c_(degree + 1, Rational(0)) {}

CovariantForm::CovariantForm(unsigned degree, std::vector<Rational> coeffs)
    : n_(degree), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("CovariantForm: expected degree + 1 coefficients");
}

bool CovariantForm::is_zero() const { return first_nonzero(c_) == nullptr; }

Rational CovariantForm::operator()(const Rational& dx, const Rational& dy) const {
  const auto px = powers(dx, n_);
  const auto py = powers(dy, n_);
  Rational acc(0);
  for (unsigned k = 0; k <= n_; ++k) acc += c_[k] * px[k] * py[n_ - k];
  return acc;
}

CovariantForm& CovariantForm::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

// ---- projective equality ---------------------------------------------------

bool projectively_equal(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) return false;
  std::size_t pivot = u.size();
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero()) {
      pivot = k;
      break;
    }
  if (pivot == u.size() || v[pivot].is_zero()) return false;
  // u ~ v iff u * v[p] == v * u[p] componentwise.
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] * v[pivot] != v[k] * u[pivot]) return false;
  return true;
}

bool projectively_equal(const BinaryForm& f, const BinaryForm& g) {
  return f.degree() == g.degree() && projectively_equal(f.coeffs(), g.coeffs());
}

bool projectively_equal(const BiForm& f, const BiForm& g) {
  return f.dx() == g.dx() && f.dy() == g.dy() && projectively_equal(f.row_major(), g.row_major());
}

bool projectively_equal(const CovariantForm& f, const CovariantForm& g) {
  return f.degree() == g.degree() && projectively_equal(f.coeffs(), g.coeffs());
}

// ---- operations ------------------------------------------------------------

Rational evaluate(const BiForm& f, const BiPoint& p) {
  const unsigned d = f.dx(), e = f.dy();
  const auto x0 = powers(p[0], d), x1 = powers(p[1], d);
  const auto y0 = powers(p[2], e), y1 = powers(p[3], e);
  Rational acc(0);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= e; ++j) {
      const Rational& a = f.at(i, j);
      if (!a.is_zero()) acc += a * x0[d - i] * x1[i] * y0[e - j] * y1[j];
    }
  return acc;
}

BinaryForm diagonal_restriction(const BiForm& f) {
  BinaryForm out(f.dx() + f.dy());
  std::vector<Rational> c(out.coeffs());
  for (unsigned i = 0; i <= f.dx(); ++i)
    for (unsigned j = 0; j <= f.dy(); ++j) c[i + j] += f.at(i, j);
  return BinaryForm(out.degree(), std::move(c));
}

BiForm mixed_partial(const BiForm& f, const std::array<unsigned, 4>& orders) {
  const auto [i0, i1, j0, j1] = orders;
  const unsigned d = f.dx(), e = f.dy();
  if (i0 + i1 > d || j0 + j1 > e) {
    const unsigned nd = i0 + i1 > d ? 0 : d - i0 - i1;
    const unsigned ne = j0 + j1 > e ? 0 : e - j0 - j1;
    return BiForm(nd, ne);
  }
  const unsigned nd = d - i0 - i1, ne = e - j0 - j1;
  BiForm out(nd, ne);
  // Monomial (a, b) carries x0^(d-a) x1^a y0^(e-b) y1^b and lands on (a-i1, b-j1).
  for (unsigned a = i1; a <= d; ++a) {
    if (d - a < i0) continue;
    const Rational fx = falling(a, i1) * falling(d - a, i0);
    for (unsigned b = j1; b <= e; ++b) {
      if (e - b < j0) continue;
      const Rational& coef = f.at(a, b);
      if (coef.is_zero()) continue;
      out.at(a - i1, b - j1) = coef * fx * falling(b, j1) * falling(e - b, j0);
    }
  }
  return out;
}

BinaryForm primitive_part(const BinaryForm& f) {
  const Rational* lead = first_nonzero(f.coeffs());
  if (lead == nullptr) return f;
  const mpz_class l = lcm_of_denominators(f.coeffs());
  mpz_class g = 0;
  for (const auto& x : f.coeffs()) {
    const mpz_class v = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(l, g);
  if (lead->sign() < 0) scale = -scale;
  return f * scale;
}

BinaryForm binary_gcd(std::span<const BinaryForm> forms) {
  if (forms.empty()) throw std::invalid_argument("binary_gcd: empty input");
  unsigned max_degree = 0;
  for (const auto& f : forms) max_degree = std::max(max_degree, f.degree());

  bool any = false;
  unsigned z0_power = 0, z1_power = 0;
  Polynomial g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const auto& c = f.coeffs();
    unsigned lo = 0;
    while (c[lo].is_zero()) ++lo;
    unsigned hi = f.degree();
    while (c[hi].is_zero()) --hi;
    // f = z0^(n-hi) z1^lo * (form with nonzero end coefficients)
    const Polynomial core(std::vector<Rational>(c.begin() + lo, c.begin() + hi + 1));
    if (!any) {
      any = true;
      z0_power = f.degree() - hi;
      z1_power = lo;
      g = core.monic();
    } else {
      z0_power = std::min(z0_power, f.degree() - hi);
      z1_power = std::min(z1_power, lo);
      g = gcd(g, core);
    }
  }
  if (!any) return BinaryForm(max_degree);

  const auto core_degree = static_cast<unsigned>(g.degree());
  BinaryForm out(z0_power + z1_power + core_degree);
  std::vector<Rational> c(out.coeffs());
  for (unsigned k = 0; k <= core_degree; ++k) c[z1_power + k] = g[k];
  return primitive_part(BinaryForm(out.degree(), std::move(c)));
}

BinaryForm substitute_linear(const BinaryForm& f, const Matrix2& m) {
  const unsigned n = f.degree();
  const BinaryForm l0(1, {m.a, m.b});
  const BinaryForm l1(1, {m.c, m.d});
  std::vector<BinaryForm> p0{BinaryForm(0, {Rational(1)})}, p1{BinaryForm(0, {Rational(1)})};
  for (unsigned k = 1; k <= n; ++k) {
    p0.push_back(p0.back() * l0);
    p1.push_back(p1.back() * l1);
  }
  BinaryForm out(n);
  for (unsigned k = 0; k <= n; ++k)
    if (!f[k].is_zero()) out += (p0[n - k] * p1[k]) * f[k];
  return out;
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) {
    if (f.degree() < g.degree()) return std::nullopt;
    return BinaryForm(f.degree() - g.degree());
  }
  if (f.degree() < g.degree()) return std::nullopt;
  const auto [q, r] = f.dehomogenize().divmod(g.dehomogenize());
  const unsigned qdeg = f.degree() - g.degree();
  if (!r.is_zero() || q.degree() > static_cast<int>(qdeg)) return std::nullopt;
  return BinaryForm::homogenize(q, qdeg);
}

std::vector<ProjectivePoint> rational_roots(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero form");
  const auto prim = primitive_part(f);
  const auto& c = prim.coeffs();
  const unsigned n = prim.degree();

  std::vector<Rational> affine;
  unsigned lo = 0;
  while (c[lo].is_zero()) ++lo;
  unsigned hi = n;
  while (c[hi].is_zero()) --hi;
  if (lo > 0) affine.emplace_back(0);

  if (hi > lo) {
    const Polynomial core(std::vector<Rational>(c.begin() + lo, c.begin() + hi + 1));
    const auto ps = divisors(core[0].numerator());
    const auto qs = divisors(core.leading().numerator());
    for (const auto& p : ps)
      for (const auto& q : qs) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int s : {1, -1}) {
          const Rational t(mpz_class(s * p), q);
          if (core(t).is_zero()) affine.push_back(t);
        }
      }
  }
  std::sort(affine.begin(), affine.end());
  std::vector<ProjectivePoint> out;
  for (const auto& t : affine) out.push_back({Rational(1), t});
  if (hi < n) out.push_back({Rational(0), Rational(1)});
  return out;
}

}  // namespace corrdyn
