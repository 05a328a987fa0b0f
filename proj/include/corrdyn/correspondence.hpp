#pragma once

#include "corrdyn/errors.hpp"
#include "corrdyn/forms.hpp"

namespace corrdyn {

/// A divisorial quasi-correspondence: a nonzero BiForm, meaningful up to a
/// nonzero scalar. operator== is coefficient-exact; use projectively_equal
/// for the semantic comparison.
class Correspondence {
 public:
  /// Throws std::invalid_argument on the zero form.
  explicit Correspondence(BiForm form);

  const BiForm& form() const { return form_; }
  unsigned dx() const { return form_.dx(); }
  unsigned dy() const { return form_.dy(); }
  const Rational& at(unsigned i, unsigned j) const { return form_.at(i, j); }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  BiForm form_;
};

bool projectively_equal(const Correspondence& f, const Correspondence& g);

/// Moebius map z -> (a z + b) / (c z + d), i.e. on homogeneous coordinates
/// [x0 : x1] -> [d x0 + c x1 : b x0 + a x1]. The letter placement follows
/// the graph form (b x0 + a x1) y0 - (d x0 + c x1) y1.
class MoebiusMap {
 public:
  /// Throws std::invalid_argument when a d - b c == 0.
  MoebiusMap(Rational a, Rational b, Rational c, Rational d);
  static MoebiusMap identity() { return {1, 0, 0, 1}; }
  static MoebiusMap from_matrix(const Matrix2& m) { return {m.a, m.b, m.c, m.d}; }

  const Rational& a() const { return m_.a; }
  const Rational& b() const { return m_.b; }
  const Rational& c() const { return m_.c; }
  const Rational& d() const { return m_.d; }
  /// [[a, b], [c, d]]; products of these compose the maps on z.
  const Matrix2& matrix() const { return m_; }
  /// The substitution acting on (x0, x1): [[d, c], [b, a]].
  Matrix2 homogeneous_matrix() const { return {m_.d, m_.c, m_.b, m_.a}; }
  /// Adjugate [[d, -b], [-c, a]], the inverse up to scalar.
  MoebiusMap inverse() const { return {m_.d, -m_.b, -m_.c, m_.a}; }

  /// (g * h)(z) = g(h(z)).
  friend MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h) {
    return from_matrix(g.m_ * h.m_);
  }
  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

 private:
  Matrix2 m_;
};

/// f o g := res_z(f(x, z), g(z, y)), bidegree (d d', e e'). If f is the graph
/// of phi and g the graph of psi, the result is the graph of psi(phi(x)).
/// Throws DegenerateComposition when the resultant vanishes identically.
Correspondence compose(const Correspondence& f, const Correspondence& g);

/// Reference composition: tabulates the resultant grid serially. Always
/// equal to compose().
Correspondence compose_serial(const Correspondence& f, const Correspondence& g);

/// f o f o ... o f (n copies, left fold), bidegree (d^n, e^n). Throws
/// std::invalid_argument for n == 0 and DegenerateComposition carrying the
/// failing step.
Correspondence iterate(const Correspondence& f, unsigned n);

/// (b x0 + a x1) y0 - (d x0 + c x1) y1, the graph of g.
Correspondence moebius_graph(const MoebiusMap& g);

/// f(d x0 + c x1, b x0 + a x1, d y0 + c y1, b y0 + a y1): the points (x, y)
/// with (g(x), g(y)) on f. On graphs this is phi -> g^-1 o phi o g, and
/// conjugate(conjugate(f, h), g) == conjugate(f, h * g) exactly.
Correspondence conjugate(const Correspondence& f, const MoebiusMap& g);

}  // namespace corrdyn
