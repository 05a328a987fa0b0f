#pragma once

#include <stdexcept>
#include <string>

#include "corrdyn/forms.hpp"

namespace corrdyn {

/// A well-formed input that falls in the indeterminacy locus of an
/// operation (the maps involved are only rational maps).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// res_z(f(x,z), g(z,y)) vanished identically: f has a linear factor in y
/// matching a linear factor of g in x.
class DegenerateComposition : public PreconditionError {
 public:
  DegenerateComposition(BinaryForm common_factor, unsigned step, const std::string& what)
      : PreconditionError("DegenerateComposition", what),
        common_factor_(std::move(common_factor)),
        step_(step) {}
  /// gcd of the y-rows of f and the x-columns of g, as a form in the
  /// eliminated variable.
  const BinaryForm& common_factor() const { return common_factor_; }
  /// Iteration step that failed (1 for a plain composition).
  unsigned step() const { return step_; }

 private:
  BinaryForm common_factor_;
  unsigned step_;
};

/// A fixed point sits at 0 or infinity (a00 * a_de == 0).
class BadPosition : public PreconditionError {
 public:
  explicit BadPosition(const std::string& what) : PreconditionError("BadPosition", what) {}
};

/// F, DiagX and DiagY share a root: the multiplier map is undefined there.
class IndeterminateMultiplier : public PreconditionError {
 public:
  explicit IndeterminateMultiplier(const std::string& what)
      : PreconditionError("IndeterminateMultiplier", what) {}
};

/// Malformed interchange document.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace corrdyn
