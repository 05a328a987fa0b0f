#pragma once

#include <vector>

#include "corrdyn/forms.hpp"

namespace corrdyn {

/// The Clebsch-Gordan components of a bidegree-(d, e) form: parts[m] has
/// degree d + e - 2m for m = 0..min(d, e).
struct CgComponents {
  unsigned d = 0, e = 0;
  std::vector<BinaryForm> parts;

  friend bool operator==(const CgComponents&, const CgComponents&) = default;
};

/// Torus weights (d + e) - 2(i + j) of the coefficient matrix entries under
/// diag(t, 1/t).
struct WeightVector {
  unsigned d = 0, e = 0;
  std::vector<int> weights;  // row-major (d+1) x (e+1)

  int at(unsigned i, unsigned j) const { return weights[i * (e + 1) + j]; }
};

/// Omega^m f restricted to the diagonal, where Omega = d/dx0 d/dy1 -
/// d/dy0 d/dx1. Degree d + e - 2m; throws std::out_of_range unless
/// 0 <= m <= min(d, e).
BinaryForm cayley_omega(const BiForm& f, unsigned m);

CgComponents cg_decompose(const BiForm& f);

/// Unique f with cg_decompose(f) == c. Throws std::invalid_argument if the
/// part degrees do not match the (d, e) profile.
BiForm cg_reconstruct(const CgComponents& c);

/// The form of bidegree (d, e) whose components are (c0 w0, c1 w1, 0, ...).
/// Needs min(d, e) >= 1, deg w0 = d + e, deg w1 = d + e - 2, and nonzero
/// scales; std::invalid_argument otherwise.
BiForm rho_embed(const BinaryForm& w0, const BinaryForm& w1, unsigned d, unsigned e,
                 const Rational& c0 = Rational(1), const Rational& c1 = Rational(1));

/// Image of f in bidegree (1, d + e - 1) with the top two components scaled
/// by (c0, c1).
BiForm rho_project(const BiForm& f, const Rational& c0 = Rational(1),
                   const Rational& c1 = Rational(1));

/// (d + e) - 2(i + j); throws std::out_of_range when i > d or j > e.
int torus_weight(unsigned d, unsigned e, unsigned i, unsigned j);
WeightVector torus_weights(unsigned d, unsigned e);

}  // namespace corrdyn
