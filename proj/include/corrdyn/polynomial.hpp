#pragma once

#include <vector>

#include "corrdyn/rational.hpp"

namespace corrdyn {

/// Dense univariate polynomial over the rationals, ascending coefficients,
/// kept trimmed (no trailing zeros; the zero polynomial is empty).
///
/// Serves as the coefficient ring for resultants taken over Q[t] and, via
/// dehomogenization s = dx/dy, over binary forms in the covariables.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> ascending);

  /// The monomial c * t^k.
  static Polynomial monomial(const Rational& c, unsigned k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of t^k, zero beyond the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  struct DivMod;
  /// Euclidean division; throws std::domain_error when dividing by zero.
  DivMod divmod(const Polynomial& divisor) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Quotient of a by b; throws std::domain_error if the division leaves a
/// remainder. Used by fraction-free elimination where divisibility is
/// guaranteed.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace corrdyn
