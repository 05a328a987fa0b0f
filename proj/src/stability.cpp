#include "corrdyn/stability.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace corrdyn {

std::string_view to_string(StabilityVerdict::Verdict v) {
  switch (v) {
    case StabilityVerdict::Verdict::Stable:
      return "Stable";
    case StabilityVerdict::Verdict::StrictlySemistable:
      return "StrictlySemistable";
    case StabilityVerdict::Verdict::Unstable:
      return "Unstable";
  }
  return "?";
}

MultiplicityTest diagonal_multiplicity_at_least(const Correspondence& f, unsigned m) {
  const unsigned d = f.dx(), e = f.dy();
  if (m < 1 || m > d + e)
    throw std::out_of_range("diagonal_multiplicity_at_least: m = " + std::to_string(m) +
                            " outside [1, d + e]");
  const unsigned order = m - 1;
  std::vector<BinaryForm> restricted;
  // All (i0, i1, j0, j1) with i0 + i1 = p <= d, j0 + j1 = order - p <= e.
  for (unsigned p = 0; p <= order; ++p) {
    const unsigned q = order - p;
    if (p > d || q > e) continue;
    for (unsigned i1 = 0; i1 <= p; ++i1)
      for (unsigned j1 = 0; j1 <= q; ++j1)
        restricted.push_back(diagonal_restriction(mixed_partial(f.form(), {p - i1, i1, q - j1, j1})));
  }
  BinaryForm g = binary_gcd(restricted);
  const bool holds = g.is_zero() || g.degree() >= 1;
  return {holds, std::move(g)};
}

MaxMultiplicity max_diagonal_multiplicity(const Correspondence& f) {
  const unsigned n = f.dx() + f.dy();
  MaxMultiplicity best;
  best.witness = BinaryForm(0, {Rational(1)});
  for (unsigned m = 1; m <= n; ++m) {
    auto t = diagonal_multiplicity_at_least(f, m);
    if (!t.holds) break;  // monotone in m
    best = {m, std::move(t.witness)};
  }
  return best;
}

StabilityVerdict classify_stability(const Correspondence& f) {
  const unsigned n = f.dx() + f.dy();
  if (n == 0) throw std::invalid_argument("classify_stability: needs d + e >= 1");
  auto [mult, witness] = max_diagonal_multiplicity(f);
  StabilityVerdict v;
  v.max_multiplicity = mult;
  v.witness = std::move(witness);
  if (2 * mult < n)
    v.verdict = StabilityVerdict::Verdict::Stable;
  else if (2 * mult == n)
    v.verdict = StabilityVerdict::Verdict::StrictlySemistable;
  else
    v.verdict = StabilityVerdict::Verdict::Unstable;
  return v;
}

}  // namespace corrdyn
