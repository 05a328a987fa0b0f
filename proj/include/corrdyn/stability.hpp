#pragma once

#include <string_view>

#include "corrdyn/correspondence.hpp"

namespace corrdyn {

/// Stability of a correspondence under the diagonal PGL2 action.
///
/// A point P of the curve f = 0 has multiplicity >= m iff every partial
/// derivative of f of total order m - 1 vanishes at P. In characteristic
/// zero the Euler identities x0 f_x0 + x1 f_x1 = d f (and the same in y)
/// express every partial of lower order as a combination of those of order
/// m - 1, so checking order m - 1 alone suffices. Restricting those partials
/// to the diagonal and taking their homogeneous gcd finds the common diagonal
/// roots exactly, including [1:0] and [0:1]. An all-zero family (for instance
/// f(z, z) == 0 at m = 1) gives the zero gcd: every diagonal point qualifies.
struct StabilityVerdict {
  enum class Verdict { Stable, StrictlySemistable, Unstable };

  Verdict verdict = Verdict::Stable;
  unsigned max_multiplicity = 0;
  /// gcd certificate at max_multiplicity; its roots are the worst points.
  BinaryForm witness;
};

std::string_view to_string(StabilityVerdict::Verdict v);

struct MultiplicityTest {
  bool holds = false;
  BinaryForm witness;  // zero or nonconstant exactly when holds
};

/// Whether some diagonal point of f = 0 has multiplicity >= m. Throws
/// std::out_of_range unless 1 <= m <= d + e.
MultiplicityTest diagonal_multiplicity_at_least(const Correspondence& f, unsigned m);

struct MaxMultiplicity {
  unsigned multiplicity = 0;
  BinaryForm witness;
};

MaxMultiplicity max_diagonal_multiplicity(const Correspondence& f);

/// Stable iff 2 max < d + e, Unstable iff 2 max > d + e. Throws
/// std::invalid_argument for bidegree (0, 0).
StabilityVerdict classify_stability(const Correspondence& f);

}  // namespace corrdyn
