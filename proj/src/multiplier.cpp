#include "corrdyn/multiplier.hpp"

#include <stdexcept>
#include <string>

#include "corrdyn/clebsch_gordan.hpp"
#include "corrdyn/errors.hpp"
#include "corrdyn/resultant.hpp"

namespace corrdyn {

namespace {

// Sum of p^(n-k) q^k c[k] for linear forms p, q.
BinaryForm expand_in(const std::vector<Rational>& c, const BinaryForm& p, const BinaryForm& q) {
  const auto n = static_cast<unsigned>(c.size() - 1);
  std::vector<BinaryForm> pp{BinaryForm(0, {Rational(1)})}, qp{BinaryForm(0, {Rational(1)})};
  for (unsigned k = 1; k <= n; ++k) {
    pp.push_back(pp.back() * p);
    qp.push_back(qp.back() * q);
  }
  BinaryForm out(n);
  for (unsigned k = 0; k <= n; ++k)
    if (!c[k].is_zero()) out += (pp[n - k] * qp[k]) * c[k];
  return out;
}

}  // namespace

DiagonalDerivatives diagonal_derivative_forms(const BiForm& f) {
  const unsigned d = f.dx(), e = f.dy(), n = d + e;
  std::vector<Rational> F(n + 1), X(n + 1), Y(n + 1), W0(n + 1), W1(n + 1);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= e; ++j) {
      const Rational& a = f.at(i, j);
      if (a.is_zero()) continue;
      const long ii = i, jj = j, dd = d, ee = e;
      F[i + j] += a;
      X[i + j] += Rational(dd - 2 * ii) * a;
      Y[i + j] += Rational(ee - 2 * jj) * a;
      W0[i + j] += Rational(dd + ee - 2 * (ii + jj)) * a;
      W1[i + j] += Rational(dd * jj - ee * ii) * a;
    }
  return {BinaryForm(n, std::move(F)), BinaryForm(n, std::move(X)), BinaryForm(n, std::move(Y)),
          BinaryForm(n, std::move(W0)), BinaryForm(n, std::move(W1))};
}

CovariantForm multiplier_form(const Correspondence& f) {
  const unsigned d = f.dx(), e = f.dy();
  if (d + e == 0) throw std::invalid_argument("multiplier_form: bidegree (0, 0) has no fixed points");
  if (f.at(0, 0).is_zero() || f.at(d, e).is_zero())
    throw BadPosition("a fixed point lies at 0 or infinity (a00 * a_de == 0); conjugate by a generic "
                      "Moebius map first");
  const auto dd = diagonal_derivative_forms(f.form());
  const BinaryForm trio[] = {dd.f, dd.diag_x, dd.diag_y};
  const BinaryForm g = binary_gcd(trio);
  if (g.is_zero() || g.degree() >= 1)
    throw IndeterminateMultiplier("F, DiagX and DiagY share a root of degree " +
                                  std::to_string(g.degree()));
  return covariant_resultant(dd.f, dd.diag_x, dd.diag_y);
}

CovariantForm normalized_multiplier_form(const Correspondence& f) {
  CovariantForm r = multiplier_form(f);
  r *= Rational(1) / (f.at(0, 0) * f.at(f.dx(), f.dy()));
  return r;
}

MultiplierSpectrum sigma_spectrum(const CovariantForm& r) {
  if (r[0].is_zero()) throw std::domain_error("sigma_spectrum: dy^n coefficient is zero");
  MultiplierSpectrum s;
  s.n = r.degree();
  s.reference = r[0];
  s.sigma.reserve(s.n + 1);
  for (unsigned i = 0; i <= s.n; ++i) {
    Rational v = r[i] / r[0];
    s.sigma.push_back(i % 2 ? -v : v);
  }
  return s;
}

MultiplierSpectrum rational_fixed_point_oracle(const Correspondence& f) {
  const unsigned n = f.dx() + f.dy();
  const auto dd = diagonal_derivative_forms(f.form());
  if (dd.f.is_zero()) throw std::invalid_argument("oracle: f(z, z) vanishes identically");
  const auto roots = rational_roots(dd.f);
  if (roots.size() != n)
    throw std::invalid_argument("oracle: fixed points are not " + std::to_string(n) +
                                " distinct rationals");
  std::vector<Rational> mult;
  for (const auto& p : roots) {
    if (p.p0.is_zero() || p.p1.is_zero())
      throw std::invalid_argument("oracle: fixed point at 0 or infinity");
    const Rational y = dd.diag_y(p.p0, p.p1);
    if (y.is_zero()) throw std::invalid_argument("oracle: infinite multiplier");
    mult.push_back(-dd.diag_x(p.p0, p.p1) / y);
  }
  // Elementary symmetric functions by the product of (1 + m t).
  std::vector<Rational> sigma{Rational(1)};
  for (const auto& m : mult) {
    sigma.push_back(Rational(0));
    for (std::size_t k = sigma.size() - 1; k > 0; --k) sigma[k] += m * sigma[k - 1];
  }
  return {n, std::move(sigma), Rational(1)};
}

CovariantForm nth_multiplier_form(const Correspondence& f, unsigned n) {
  return multiplier_form(iterate(f, n));
}

std::vector<Rational> dz_coordinates(const CovariantForm& r, unsigned d2, unsigned e2) {
  if (d2 + e2 != r.degree() || r.degree() == 0)
    throw std::invalid_argument("dz_coordinates: basis degrees must sum to deg R >= 1");
  // Linear forms in (dz0, dz1).
  const BinaryForm dx(1, {Rational(1), Rational(e2, 2)});
  const BinaryForm dy(1, {Rational(1), -Rational(d2, 2)});
  // R = sum R[k] dy^(n-k) dx^k.
  return expand_in(r.coeffs(), dy, dx).coeffs();
}

CovariantForm from_dz_coordinates(const std::vector<Rational>& v, unsigned d2, unsigned e2) {
  const unsigned s = d2 + e2;
  if (v.empty() || s + 1 != v.size() || s == 0)
    throw std::invalid_argument("from_dz_coordinates: basis degrees must sum to the degree >= 1");
  // Linear forms in (dy, dx), so index k lands on dx^k dy^(n-k).
  const BinaryForm dz0(1, {Rational(e2, s), Rational(d2, s)});
  const BinaryForm dz1(1, {Rational(-2, s), Rational(2, s)});
  return CovariantForm(s, expand_in(v, dz0, dz1).coeffs());
}

Rational hyperplane_residual(const Correspondence& f) {
  return dz_coordinates(multiplier_form(f), f.dx(), f.dy())[1];
}

Rational index_residual(const MultiplierSpectrum& s) {
  if (s.sigma.size() < 2) throw std::invalid_argument("index_residual: spectrum too short");
  const long d = static_cast<long>(s.sigma.size()) - 2;
  Rational acc(0);
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    Rational term = Rational(d - static_cast<long>(i)) * s.sigma[i];
    acc += i % 2 ? -term : term;
  }
  return acc;
}

Polynomial woods_hole_resultant(const Polynomial& f, const Polynomial& g) {
  const int n = f.degree();
  if (n < 3 || g.degree() > n - 2)
    throw std::invalid_argument("woods_hole: need deg F >= 3 and deg G <= deg F - 2");
  const Polynomial fp = f.derivative();
  std::vector<Polynomial> a, b;
  for (int k = 0; k <= n; ++k) a.emplace_back(f[k]);
  for (int k = 0; k < n; ++k) b.emplace_back(std::vector<Rational>{fp[k], g[k]});
  return resultant_univariate<Polynomial>(a, b, static_cast<unsigned>(n), static_cast<unsigned>(n - 1));
}

Rational woods_hole_residual(const Polynomial& f, const Polynomial& g) {
  return woods_hole_resultant(f, g)[1];
}

bool rho_compatibility_check(const Correspondence& f, const Rational& c0, const Rational& c1) {
  const unsigned d = f.dx(), e = f.dy(), n = d + e;
  const Correspondence image(rho_project(f.form(), c0, c1));
  const auto r1 = dz_coordinates(multiplier_form(image), 1, n - 1);
  auto r2 = dz_coordinates(multiplier_form(f), d, e);
  for (unsigned k = 0; k <= n; ++k) r2[k] *= pow(c0, n - k) * pow(c1, k);
  return projectively_equal(r1, r2);
}

}  // namespace corrdyn
