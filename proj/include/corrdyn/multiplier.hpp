#pragma once

#include <vector>

#include "corrdyn/correspondence.hpp"
#include "corrdyn/polynomial.hpp"

namespace corrdyn {

/// Diagonal forms of degree d + e built from the coefficient matrix; entry k
/// sums over i + j = k:
///   F      a_ij
///   diag_x (d - 2i) a_ij
///   diag_y (e - 2j) a_ij
///   w0     (d + e - 2(i + j)) a_ij
///   w1     (-e i + d j) a_ij
/// diag_x is (x0 d/dx0 - x1 d/dx1) f on the diagonal. Direct differentiation
/// of the affine chart gives the opposite sign; the multiplier -diag_x/diag_y
/// does not see it. w0 = diag_x + diag_y and 2 w1 = e diag_x - d diag_y.
struct DiagonalDerivatives {
  BinaryForm f, diag_x, diag_y, w0, w1;
};

DiagonalDerivatives diagonal_derivative_forms(const BiForm& f);

/// res(F, diag_x dx + diag_y dy), degree d + e in (dx, dy). At a simple
/// fixed point p of multiplier m = -diag_x(p)/diag_y(p) it carries the factor
/// (dy - m dx).
///
/// Throws std::invalid_argument for bidegree (0, 0), BadPosition when
/// a00 * a_de == 0 (a fixed point at 0 or infinity), and
/// IndeterminateMultiplier when F, diag_x and diag_y share a root.
CovariantForm multiplier_form(const Correspondence& f);

/// multiplier_form(f) / (a00 * a_de). Invariant (not just projectively)
/// under conjugation by determinant-one maps.
CovariantForm normalized_multiplier_form(const Correspondence& f);

/// Elementary symmetric functions of the fixed-point multipliers.
struct MultiplierSpectrum {
  unsigned n = 0;
  std::vector<Rational> sigma;  // length n + 1, sigma[0] == 1
  /// The dy^n coefficient the representative was divided by.
  Rational reference{1};

  friend bool operator==(const MultiplierSpectrum& a, const MultiplierSpectrum& b) {
    return a.n == b.n && a.sigma == b.sigma;
  }
};

/// sigma[i] = (-1)^i R[i] / R[0]. Throws std::domain_error when R[0] == 0
/// (some multiplier is infinite).
MultiplierSpectrum sigma_spectrum(const CovariantForm& r);

/// Brute force: finds the fixed points by the rational root theorem and
/// differentiates at each. Throws std::invalid_argument unless F splits into
/// d + e distinct rational roots away from 0 and infinity with diag_y
/// nonzero at each.
MultiplierSpectrum rational_fixed_point_oracle(const Correspondence& f);

/// multiplier_form(iterate(f, n)).
CovariantForm nth_multiplier_form(const Correspondence& f, unsigned n);

/// Coefficients of R in (dz0)^(n-k) (dz1)^k, where
///   dz0 = (d' dx + e' dy) / (d' + e'),  dz1 = 2 (dx - dy) / (d' + e'),
/// i.e. dx = dz0 + (e'/2) dz1 and dy = dz0 - (d'/2) dz1. Throws
/// std::invalid_argument unless d' + e' == deg R.
std::vector<Rational> dz_coordinates(const CovariantForm& r, unsigned d2, unsigned e2);

/// Inverse of dz_coordinates.
CovariantForm from_dz_coordinates(const std::vector<Rational>& v, unsigned d2, unsigned e2);

/// The (dz0)^(n-1) dz1 coordinate of multiplier_form(f) in the (d, e) basis.
/// Always zero.
Rational hyperplane_residual(const Correspondence& f);

/// sum_i (-1)^i (d - i) sigma_i with d = sigma.size() - 2, the fixed-point
/// index relation for a degree-d map graph of bidegree (d, 1). Throws
/// std::invalid_argument for a spectrum shorter than 2.
Rational index_residual(const MultiplierSpectrum& s);

/// res_x(F, F' + t G) at declared degrees (deg F, deg F - 1), as a
/// polynomial in t. Throws std::invalid_argument unless deg F >= 3 and
/// deg F >= deg G + 2.
Polynomial woods_hole_resultant(const Polynomial& f, const Polynomial& g);

/// The t-coefficient of woods_hole_resultant. Always zero.
Rational woods_hole_residual(const Polynomial& f, const Polynomial& g);

/// Compares multiplier_form of rho_project(f, c0, c1) in the (1, d + e - 1)
/// basis with multiplier_form(f) in the (d, e) basis after the scaling
/// dz0 -> c0 dz0, dz1 -> c1 dz1. Needs min(d, e) >= 1.
bool rho_compatibility_check(const Correspondence& f, const Rational& c0 = Rational(1),
                             const Rational& c1 = Rational(1));

}  // namespace corrdyn
