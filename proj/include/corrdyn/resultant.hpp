#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corrdyn/forms.hpp"
#include "corrdyn/kernels.hpp"
#include "corrdyn/polynomial.hpp"

namespace corrdyn {

/// Sylvester matrix of f (degree d, ascending coefficients f[0..d]) and g
/// (degree e). The first e rows hold f shifted one column per row, the next
/// d rows hold g. This ascending layout differs from the classical
/// descending one by the sign (-1)^(d*e).
template <class Ring>
Matrix<Ring> sylvester_matrix(std::span<const Ring> f, std::span<const Ring> g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("sylvester_matrix: empty coefficient vector");
  const std::size_t d = f.size() - 1, e = g.size() - 1;
  Matrix<Ring> m(d + e, d + e);
  for (std::size_t r = 0; r < e; ++r)
    for (std::size_t k = 0; k <= d; ++k) m(r, r + k) = f[k];
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t k = 0; k <= e; ++k) m(e + s, s + k) = g[k];
  return m;
}

/// res_{x,(d,e)}(f, g): the Sylvester determinant at declared degrees.
/// Throws std::invalid_argument when a vector length is not degree + 1.
template <class Ring>
Ring resultant_univariate(std::span<const Ring> f, std::span<const Ring> g, unsigned d, unsigned e) {
  if (f.size() != static_cast<std::size_t>(d) + 1 || g.size() != static_cast<std::size_t>(e) + 1)
    throw std::invalid_argument("resultant: coefficient vector length does not match declared degree");
  return kernels::determinant(sylvester_matrix(f, g));
}

/// res_[z0,z1](F, G) := res_{(deg F, deg G)} of the dehomogenizations.
Rational homogeneous_resultant(const BinaryForm& f, const BinaryForm& g);

/// res(F, P dx + Q dy) as a form of degree n in (dx, dy). F, P, Q must share
/// the declared degree n >= 1 (std::invalid_argument otherwise).
CovariantForm covariant_resultant(const BinaryForm& f, const BinaryForm& p, const BinaryForm& q);

/// (res(f, g), res(f, g + a f)) at declared degrees (deg f, deg g). Requires
/// deg g >= deg f so that g + a f keeps its declared degree.
std::pair<Rational, Rational> resultant_shift_invariance(std::span<const Rational> f,
                                                         std::span<const Rational> g,
                                                         const Rational& a);

}  // namespace corrdyn
