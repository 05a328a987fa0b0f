#include "corrdyn/resultant.hpp"

namespace corrdyn {

Rational homogeneous_resultant(const BinaryForm& f, const BinaryForm& g) {
  return resultant_univariate<Rational>(f.coeffs(), g.coeffs(), f.degree(), g.degree());
}

CovariantForm covariant_resultant(const BinaryForm& f, const BinaryForm& p, const BinaryForm& q) {
  const unsigned n = f.degree();
  if (n == 0 || p.degree() != n || q.degree() != n)
    throw std::invalid_argument("covariant_resultant: F, P, Q need equal degree n >= 1");
  // Dehomogenize the covariables at dy = 1: entry k of the second argument
  // becomes P[k] s + Q[k] with s = dx/dy.
  std::vector<Polynomial> fr, gr;
  fr.reserve(n + 1);
  gr.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    fr.emplace_back(f[k]);
    gr.emplace_back(std::vector<Rational>{q[k], p[k]});
  }
  const Polynomial r = resultant_univariate<Polynomial>(fr, gr, n, n);
  if (r.degree() > static_cast<int>(n))
    throw std::logic_error("covariant_resultant: result exceeds expected degree");
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) c[k] = r[k];
  return CovariantForm(n, std::move(c));
}

std::pair<Rational, Rational> resultant_shift_invariance(std::span<const Rational> f,
                                                         std::span<const Rational> g,
                                                         const Rational& a) {
  if (f.empty() || g.empty() || g.size() < f.size())
    throw std::invalid_argument("resultant_shift_invariance: need deg g >= deg f");
  const auto d = static_cast<unsigned>(f.size() - 1);
  const auto e = static_cast<unsigned>(g.size() - 1);
  std::vector<Rational> shifted(g.begin(), g.end());
  for (std::size_t k = 0; k < f.size(); ++k) shifted[k] += a * f[k];
  return {resultant_univariate<Rational>(f, g, d, e),
          resultant_univariate<Rational>(f, shifted, d, e)};
}

}  // namespace corrdyn
