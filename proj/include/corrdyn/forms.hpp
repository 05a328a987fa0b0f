#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "corrdyn/polynomial.hpp"
#include "corrdyn/rational.hpp"

namespace corrdyn {

/// 2x2 rational matrix [[a, b], [c, d]].
struct Matrix2 {
  Rational a{1}, b{0}, c{0}, d{1};

  Rational det() const { return a * d - b * c; }
  /// Inverse, throws std::domain_error when singular.
  Matrix2 inverse() const;
  friend Matrix2 operator*(const Matrix2& m, const Matrix2& n);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Homogeneous form of declared degree n in (z0, z1). Coefficient k
/// multiplies z0^(n-k) z1^k. Trailing zeros are significant: the declared
/// degree is what resultants see.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0) {}
  /// The zero form of the given degree.
  explicit BinaryForm(unsigned degree);
  /// Throws std::invalid_argument unless coeffs.size() == degree + 1.
  BinaryForm(unsigned degree, std::vector<Rational> coeffs);

  /// Rehomogenizes p(t), t = z1/z0, to the given degree. Throws if
  /// deg p > degree.
  static BinaryForm homogenize(const Polynomial& p, unsigned degree);
  /// z0^(n-k) z1^k scaled by c.
  static BinaryForm monomial(unsigned degree, unsigned k, const Rational& c = Rational(1));

  unsigned degree() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const;

  Rational operator()(const Rational& z0, const Rational& z1) const;
  /// F(1, t), the dehomogenization in t = z1/z0.
  Polynomial dehomogenize() const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Rational& s);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Rational& s) { return a *= s; }
  friend BinaryForm operator*(const Rational& s, BinaryForm a) { return a *= s; }
  /// Product of forms; degrees add.
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  unsigned n_;
  std::vector<Rational> c_;
};

/// Bihomogeneous form of bidegree (d, e): entry (i, j) multiplies
/// x0^(d-i) x1^i y0^(e-j) y1^j.
class BiForm {
 public:
  BiForm() : BiForm(0, 0) {}
  /// The zero form of bidegree (d, e).
  BiForm(unsigned d, unsigned e);
  /// Row-major (d+1) x (e+1) coefficient matrix.
  BiForm(unsigned d, unsigned e, std::vector<Rational> row_major);
  /// Nested rows; throws std::invalid_argument on a ragged or misshapen matrix.
  static BiForm from_rows(const std::vector<std::vector<Rational>>& rows);

  unsigned dx() const { return d_; }
  unsigned dy() const { return e_; }
  const Rational& at(unsigned i, unsigned j) const { return a_[i * (e_ + 1) + j]; }
  Rational& at(unsigned i, unsigned j) { return a_[i * (e_ + 1) + j]; }
  const std::vector<Rational>& row_major() const { return a_; }
  bool is_zero() const;

  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  BiForm& operator*=(const Rational& s);
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend BiForm operator*(BiForm a, const Rational& s) { return a *= s; }
  friend BiForm operator*(const Rational& s, BiForm a) { return a *= s; }
  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  unsigned d_, e_;
  std::vector<Rational> a_;
};

/// Form of degree n in the covariables (dx, dy); coefficient k multiplies
/// dx^k dy^(n-k).
class CovariantForm {
 public:
  CovariantForm() : CovariantForm(0) {}
  explicit CovariantForm(unsigned degree);
  CovariantForm(unsigned degree, std::vector<Rational> coeffs);

  unsigned degree() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const;
  Rational operator()(const Rational& dx, const Rational& dy) const;

  CovariantForm& operator*=(const Rational& s);
  friend CovariantForm operator*(CovariantForm a, const Rational& s) { return a *= s; }
  friend bool operator==(const CovariantForm&, const CovariantForm&) = default;

 private:
  unsigned n_;
  std::vector<Rational> c_;
};

/// True iff one coefficient vector is a nonzero multiple of the other. Two
/// zero vectors are not projectively equal (they name no point).
bool projectively_equal(std::span<const Rational> u, std::span<const Rational> v);
bool projectively_equal(const BinaryForm& f, const BinaryForm& g);
bool projectively_equal(const BiForm& f, const BiForm& g);
bool projectively_equal(const CovariantForm& f, const CovariantForm& g);

/// A point (x0, x1, y0, y1) of the ambient affine 4-space.
using BiPoint = std::array<Rational, 4>;

Rational evaluate(const BiForm& f, const BiPoint& p);

/// F(z) = f(z, z); coefficient k is the sum of a_ij over i + j = k.
BinaryForm diagonal_restriction(const BiForm& f);

/// d^i/dx0^i d^j/dx1^j d^k/dy0^k d^l/dy1^l f. Over-differentiating gives
/// the zero form of bidegree (max(d-i-j, 0), max(e-k-l, 0)).
BiForm mixed_partial(const BiForm& f, const std::array<unsigned, 4>& orders);

/// Greatest common divisor as homogeneous forms over Q, primitive with a
/// positive first nonzero coefficient. Zero inputs are absorbed; an
/// all-zero list yields the zero form of the largest declared degree.
/// Throws std::invalid_argument on an empty list.
BinaryForm binary_gcd(std::span<const BinaryForm> forms);

/// F(a z0 + b z1, c z0 + d z1).
BinaryForm substitute_linear(const BinaryForm& f, const Matrix2& m);

/// Scales to integer coefficients with content 1 and a positive first
/// nonzero coefficient. Zero maps to zero.
BinaryForm primitive_part(const BinaryForm& f);

/// Exact quotient f / g as forms, or nullopt if g does not divide f.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

/// Projective point [p0 : p1].
struct ProjectivePoint {
  Rational p0, p1;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Distinct rational roots of a nonzero form, each normalized to [1 : t] or
/// [0 : 1], in increasing t with [0 : 1] last. Rational root theorem on the
/// primitive integer dehomogenization.
std::vector<ProjectivePoint> rational_roots(const BinaryForm& f);

}  // namespace corrdyn
