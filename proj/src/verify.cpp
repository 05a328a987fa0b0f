#include "corrdyn/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "corrdyn/clebsch_gordan.hpp"
#include "corrdyn/errors.hpp"
#include "corrdyn/json_io.hpp"
#include "corrdyn/multiplier.hpp"
#include "corrdyn/random.hpp"
#include "corrdyn/resultant.hpp"
#include "corrdyn/stability.hpp"

namespace corrdyn {

namespace {

struct Outcome {
  enum class Kind { Pass, Fail, Skip } kind = Kind::Pass;
  std::string message;
};

Outcome pass() { return {}; }
Outcome skip() { return {Outcome::Kind::Skip, {}}; }
Outcome fail(std::string why) { return {Outcome::Kind::Fail, std::move(why)}; }
Outcome expect(bool ok, const std::string& why) { return ok ? pass() : fail(why); }

using Check = std::function<Outcome(Rng&, unsigned)>;

struct Identity {
  const char* name;
  Check check;
};

unsigned pick(Rng& rng, unsigned lo, unsigned hi) {
  return static_cast<unsigned>(rng.uniform(lo, std::max(lo, hi)));
}

std::string show(const BiForm& f) { return json_io::to_json(f).dump(); }
std::string show(const std::vector<Rational>& v) { return json_io::rationals(v).dump(); }

Matrix2 invertible(Rng& rng) {
  for (;;) {
    Matrix2 m{rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)};
    if (!m.det().is_zero()) return m;
  }
}

BinaryForm nonzero_form(Rng& rng, unsigned degree) {
  for (;;) {
    BinaryForm f = rng.binary_form(degree, 6);
    if (!f.is_zero()) return f;
  }
}

// ---- forms ----

Outcome evaluate_homogeneity(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap), e = pick(rng, 0, cap);
  const BiForm f = rng.biform(d, e);
  const BiPoint p{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
  const Rational t = rng.nonzero_rational();
  const Rational base = evaluate(f, p);
  const bool x_ok = evaluate(f, {t * p[0], t * p[1], p[2], p[3]}) == pow(t, d) * base;
  const bool y_ok = evaluate(f, {p[0], p[1], t * p[2], t * p[3]}) == pow(t, e) * base;
  return expect(x_ok && y_ok, "homogeneity fails for " + show(f));
}

Outcome diagonal_restriction_law(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap), e = pick(rng, 0, cap);
  const BiForm f = rng.biform(d, e), g = rng.biform(d, e);
  const Rational a = rng.rational(), b = rng.rational();
  if (diagonal_restriction(f * a + g * b) != diagonal_restriction(f) * a + diagonal_restriction(g) * b)
    return fail("not linear on " + show(f));
  const Rational z0 = rng.rational(), z1 = rng.rational();
  return expect(diagonal_restriction(f)(z0, z1) == evaluate(f, {z0, z1, z0, z1}),
                "restriction disagrees with evaluation for " + show(f));
}

Outcome mixed_partials_commute(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 1, cap), e = pick(rng, 1, cap);
  const BiForm f = rng.biform(d, e);
  std::array<unsigned, 4> a{}, b{}, ab{};
  for (int k = 0; k < 4; ++k) {
    a[k] = pick(rng, 0, 1);
    b[k] = pick(rng, 0, 1);
    ab[k] = a[k] + b[k];
  }
  return expect(mixed_partial(mixed_partial(f, a), b) == mixed_partial(f, ab) &&
                    mixed_partial(mixed_partial(f, b), a) == mixed_partial(f, ab),
                "partials do not commute on " + show(f));
}

Outcome gcd_certificate(Rng& rng, unsigned cap) {
  const BinaryForm c = nonzero_form(rng, pick(rng, 0, 2));
  const BinaryForm a = nonzero_form(rng, pick(rng, 0, cap)), b = nonzero_form(rng, pick(rng, 0, cap));
  const BinaryForm zero(pick(rng, 0, cap));
  const BinaryForm inputs[] = {c * a, zero, c * b};
  const BinaryForm g = binary_gcd(inputs);
  for (const auto& in : inputs)
    if (!in.is_zero() && !divide_exact(in, g)) return fail("gcd does not divide an input");
  if (!divide_exact(g, c)) return fail("planted common factor does not divide the gcd");
  return expect(g == primitive_part(g), "gcd not normalized");
}

Outcome substitution_composes(Rng& rng, unsigned cap) {
  const BinaryForm f = rng.binary_form(pick(rng, 0, cap + 1));
  const Matrix2 m{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
  const Matrix2 n{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
  return expect(substitute_linear(substitute_linear(f, m), n) == substitute_linear(f, m * n),
                "F(M)(N) != F(MN)");
}

// ---- resultants ----

Outcome resultant_equivariance(Rng& rng, unsigned cap) {
  const unsigned m = pick(rng, 1, std::min(cap + 1, 4u)), n = pick(rng, 1, std::min(cap + 1, 4u));
  const BinaryForm f = rng.binary_form(m), g = rng.binary_form(n);
  const Matrix2 mat = invertible(rng);
  const Rational lhs = homogeneous_resultant(substitute_linear(f, mat), substitute_linear(g, mat));
  return expect(lhs == pow(mat.det(), m * n) * homogeneous_resultant(f, g),
                "res(F M, G M) != det^(mn) res(F, G)");
}

Outcome resultant_multiplicative(Rng& rng, unsigned cap) {
  const BinaryForm f = rng.binary_form(pick(rng, 1, cap)), g = rng.binary_form(pick(rng, 0, cap)),
                   h = rng.binary_form(pick(rng, 0, cap));
  return expect(homogeneous_resultant(f, g * h) ==
                    homogeneous_resultant(f, g) * homogeneous_resultant(f, h),
                "res(F, GH) != res(F, G) res(F, H)");
}

Outcome resultant_detects_common_factor(Rng& rng, unsigned cap) {
  BinaryForm f = nonzero_form(rng, pick(rng, 1, cap)), g = nonzero_form(rng, pick(rng, 1, cap));
  if (rng.coin()) {
    const BinaryForm l = nonzero_form(rng, 1);
    f = f * l;
    g = g * l;
  }
  const BinaryForm pair[] = {f, g};
  const BinaryForm c = binary_gcd(pair);
  const bool common = c.is_zero() || c.degree() >= 1;
  return expect(homogeneous_resultant(f, g).is_zero() == common,
                "resultant vanishing disagrees with the gcd");
}

Outcome covariant_specializations(Rng& rng, unsigned cap) {
  const unsigned n = pick(rng, 1, cap + 1);
  const BinaryForm f = rng.binary_form(n), p = rng.binary_form(n), q = rng.binary_form(n);
  const CovariantForm r = covariant_resultant(f, p, q);
  return expect(r(0, 1) == homogeneous_resultant(f, q) && r(1, 0) == homogeneous_resultant(f, p),
                "covariant resultant does not specialize correctly");
}

Outcome resultant_shift(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 1, cap), e = pick(rng, d, cap + 1);
  const auto f = rng.binary_form(d).coeffs(), g = rng.binary_form(e).coeffs();
  const auto [r0, r1] = resultant_shift_invariance(f, g, rng.rational());
  return expect(r0 == r1, "res(f, g + a f) != res(f, g)");
}

Outcome bareiss_parallel_matches_serial(Rng& rng, unsigned) {
  const std::size_t n = kernels::kParallelRowThreshold + pick(rng, 0, 6);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.coin() ? rng.rational(9, 3) : Rational(0);
  return expect(kernels::determinant_serial(m) == kernels::determinant_parallel(m),
                "parallel determinant differs from the serial reference");
}

// ---- correspondences ----

Outcome composition_associative(Rng& rng, unsigned cap) {
  const unsigned c = std::min(cap, 2u);
  const auto f = rng.correspondence(pick(rng, 1, c), pick(rng, 1, c));
  const auto g = rng.correspondence(pick(rng, 1, c), pick(rng, 1, c));
  const auto h = rng.correspondence(pick(rng, 1, c), pick(rng, 1, c));
  try {
    return expect(projectively_equal(compose(compose(f, g), h), compose(f, compose(g, h))),
                  "(f g) h != f (g h) for f = " + show(f.form()));
  } catch (const DegenerateComposition&) {
    return skip();
  }
}

Outcome composition_bidegree(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const auto g = rng.correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  try {
    const auto h = compose(f, g);
    return expect(h.dx() == f.dx() * g.dx() && h.dy() == f.dy() * g.dy(), "wrong bidegree");
  } catch (const DegenerateComposition&) {
    return skip();
  }
}

Outcome compose_parallel_matches_serial(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 1, cap), pick(rng, 2, cap));
  const auto g = rng.correspondence(pick(rng, 2, cap), pick(rng, 1, cap));
  try {
    return expect(compose(f, g) == compose_serial(f, g), "grid tabulation is not deterministic");
  } catch (const DegenerateComposition&) {
    return skip();
  }
}

Outcome moebius_graphs_compose(Rng& rng, unsigned) {
  const MoebiusMap g = rng.moebius(), h = rng.moebius();
  return expect(projectively_equal(compose(moebius_graph(g), moebius_graph(h)), moebius_graph(h * g)),
                "graph(g) o graph(h) != graph(h g)");
}

Outcome conjugation_action(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const MoebiusMap g = rng.moebius(), h = rng.moebius();
  return expect(conjugate(conjugate(f, h), g) == conjugate(f, h * g),
                "conjugate(conjugate(f, h), g) != conjugate(f, h g)");
}

Outcome conjugation_inverse(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const MoebiusMap g = rng.moebius();
  return expect(projectively_equal(conjugate(conjugate(f, g), g.inverse()), f),
                "conjugation by g then its adjugate is not the identity");
}

Outcome conjugation_by_graphs(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const MoebiusMap g = rng.moebius();
  const auto via_graphs = compose(compose(moebius_graph(g), f), moebius_graph(g.inverse()));
  return expect(projectively_equal(conjugate(f, g), via_graphs),
                "substitution disagrees with conjugation by graphs");
}

Outcome conjugation_moves_fixed_points(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 0, cap), pick(rng, 1, cap));
  const MoebiusMap g = rng.moebius();
  return expect(diagonal_restriction(conjugate(f, g).form()) ==
                    substitute_linear(diagonal_restriction(f.form()), g.homogeneous_matrix()),
                "diagonal restriction is not equivariant");
}

// ---- Clebsch-Gordan ----

Outcome cayley_linear(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap), e = pick(rng, 0, cap);
  const BiForm f = rng.biform(d, e), g = rng.biform(d, e);
  const Rational a = rng.rational(), b = rng.rational();
  const unsigned m = pick(rng, 0, std::min(d, e));
  return expect(cayley_omega(f * a + g * b, m) == cayley_omega(f, m) * a + cayley_omega(g, m) * b,
                "Omega^m is not linear");
}

Outcome cayley_explicit_value(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap + 2), e = pick(rng, 0, cap + 2);
  const unsigned m = pick(rng, 0, std::min(d, e));
  BiForm f(d, e);
  f.at(0, m) = Rational(1);
  const Rational c = factorial(d) * factorial(m) / factorial(d - m);
  return expect(cayley_omega(f, m) == BinaryForm::monomial(d + e - 2 * m, 0, c),
                "Omega^m x0^d y0^(e-m) y1^m != d! m!/(d-m)! z0^(d+e-2m)");
}

Outcome cg_bijective(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap + 2), e = pick(rng, 0, cap + 2);
  const BiForm f = rng.biform(d, e);
  if (cg_reconstruct(cg_decompose(f)) != f) return fail("reconstruct(decompose(f)) != f");
  CgComponents c{d, e, {}};
  for (unsigned m = 0; m <= std::min(d, e); ++m) c.parts.push_back(rng.binary_form(d + e - 2 * m));
  return expect(cg_decompose(cg_reconstruct(c)) == c, "decompose(reconstruct(c)) != c");
}

Outcome omega0_equivariant(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 0, cap), pick(rng, 1, cap));
  const MoebiusMap g = rng.moebius();
  return expect(cayley_omega(conjugate(f, g).form(), 0) ==
                    substitute_linear(cayley_omega(f.form(), 0), g.homogeneous_matrix()),
                "Omega^0 is not equivariant");
}

Outcome torus_weights_consistent(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap), e = pick(rng, 0, cap);
  const auto f = rng.correspondence(d, e);
  const Rational t = rng.nonzero_rational();
  const auto g = conjugate(f, MoebiusMap(Rational(1) / t, 0, 0, t));
  const auto w = torus_weights(d, e);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= e; ++j) {
      const int k = w.at(i, j);
      const Rational scale = k >= 0 ? pow(t, static_cast<unsigned>(k))
                                    : Rational(1) / pow(t, static_cast<unsigned>(-k));
      if (g.at(i, j) != scale * f.at(i, j)) return fail("torus weight mismatch");
    }
  return pass();
}

Outcome rho_embed_components(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 1, cap), e = pick(rng, 1, cap);
  const BinaryForm w0 = rng.binary_form(d + e), w1 = rng.binary_form(d + e - 2);
  const Rational c0 = rng.nonzero_rational(), c1 = rng.nonzero_rational();
  const auto parts = cg_decompose(rho_embed(w0, w1, d, e, c0, c1)).parts;
  bool ok = parts[0] == w0 * c0 && parts[1] == w1 * c1;
  for (std::size_t m = 2; m < parts.size(); ++m) ok = ok && parts[m].is_zero();
  return expect(ok, "rho embedding has the wrong components");
}

// ---- stability ----

Correspondence diverse_correspondence(Rng& rng, unsigned d, unsigned e) {
  // Half the draws plant a zero corner of random size at ([1:0], [1:0]).
  BiForm f = rng.correspondence(d, e).form();
  if (rng.coin()) {
    const unsigned m = pick(rng, 1, d + e);
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; j <= e; ++j)
        if (i + j < m) f.at(i, j) = Rational(0);
    if (f.is_zero()) f.at(d, e) = Rational(1);
  }
  return conjugate(Correspondence(std::move(f)), rng.moebius());
}

Outcome stability_conjugation_invariant(Rng& rng, unsigned cap) {
  const auto f = diverse_correspondence(rng, pick(rng, 1, cap), pick(rng, 1, cap));
  const auto g = conjugate(f, rng.moebius());
  const auto a = classify_stability(f), b = classify_stability(g);
  return expect(a.verdict == b.verdict && a.max_multiplicity == b.max_multiplicity,
                "stability changed under conjugation for " + show(f.form()));
}

Outcome semistable_parity(Rng& rng, unsigned cap) {
  const auto f = diverse_correspondence(rng, pick(rng, 1, cap), pick(rng, 1, cap));
  const unsigned n = f.dx() + f.dy();
  const auto v = classify_stability(f);
  if (n % 2 == 1 && v.verdict == StabilityVerdict::Verdict::StrictlySemistable)
    return fail("strictly semistable at odd d + e");
  return pass();
}

Outcome unstable_coefficient_matrix(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 1, cap), e = pick(rng, 1, cap), n = d + e;
  // Planted zero corner must classify as unstable.
  const auto planted = rng.planted_unstable(d, e);
  if (classify_stability(planted).verdict != StabilityVerdict::Verdict::Unstable)
    return fail("planted corner not unstable: " + show(planted.form()));
  // Conversely, move a rational destabilizing point to [1:0] and read the
  // zero corner off the coefficient matrix.
  const auto v = classify_stability(planted);
  std::vector<ProjectivePoint> roots;
  if (v.witness.is_zero()) {
    roots.push_back({Rational(1), Rational(0)});
  } else {
    roots = rational_roots(v.witness);
  }
  for (const auto& p : roots) {
    const MoebiusMap g = p.p0.is_zero() ? MoebiusMap(0, 1, 1, 0) : MoebiusMap(1, p.p1, 0, p.p0);
    const auto moved = conjugate(planted, g);
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; j <= e; ++j)
        if (2 * (i + j) <= n && !moved.at(i, j).is_zero())
          return fail("nonzero b_ij inside the corner after moving a witness root");
  }
  return pass();
}

Outcome multiplicity_monotone(Rng& rng, unsigned cap) {
  const auto f = diverse_correspondence(rng, pick(rng, 1, cap), pick(rng, 1, cap));
  bool prev = true;
  for (unsigned m = 1; m <= f.dx() + f.dy(); ++m) {
    const bool now = diagonal_multiplicity_at_least(f, m).holds;
    if (now && !prev) return fail("multiplicity test is not monotone");
    prev = now;
  }
  return pass();
}

// ---- multipliers ----

Outcome spectrum_conjugation_invariant(Rng& rng, unsigned cap) {
  const auto f = rng.good_position_correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const auto g = conjugate(f, rng.moebius());
  try {
    return expect(sigma_spectrum(multiplier_form(f)) == sigma_spectrum(multiplier_form(g)),
                  "spectrum changed under conjugation for " + show(f.form()));
  } catch (const PreconditionError&) {
    return skip();
  } catch (const std::domain_error&) {
    return skip();
  }
}

Outcome multiplier_oracle(Rng& rng, unsigned cap) {
  const auto f = rng.map_graph_with_rational_fixed_points(pick(rng, 1, std::min(cap, 4u)));
  const auto expected = rational_fixed_point_oracle(f);
  const auto got = sigma_spectrum(multiplier_form(f));
  return expect(got == expected,
                "sigma " + show(got.sigma) + " but oracle " + show(expected.sigma));
}

Outcome normalized_sl2_invariant(Rng& rng, unsigned cap) {
  const auto f = rng.good_position_correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const auto g = conjugate(f, rng.sl2_moebius());
  try {
    return expect(normalized_multiplier_form(f) == normalized_multiplier_form(g),
                  "normalized multiplier form changed under SL2 for " + show(f.form()));
  } catch (const PreconditionError&) {
    return skip();
  }
}

Outcome hyperplane_theorem(Rng& rng, unsigned cap) {
  const auto f = rng.good_position_correspondence(pick(rng, 1, cap), pick(rng, 1, cap));
  const Rational r = hyperplane_residual(f);
  return expect(r.is_zero(), "residual " + r.str() + " for " + show(f.form()));
}

Outcome index_theorem(Rng& rng, unsigned cap) {
  const auto f = rng.good_position_map_graph(pick(rng, 1, std::min(cap + 1, 4u)));
  const Rational r = index_residual(sigma_spectrum(multiplier_form(f)));
  return expect(r.is_zero(), "residual " + r.str() + " for " + show(f.form()));
}

Outcome woods_hole(Rng& rng, unsigned cap) {
  const unsigned n = pick(rng, 3, std::min(cap + 3, 6u));
  std::vector<Rational> fc, gc;
  for (unsigned k = 0; k <= n; ++k) fc.push_back(rng.rational());
  while (fc.back().is_zero()) fc.back() = rng.rational();
  const unsigned m = pick(rng, 0, n - 2);
  for (unsigned k = 0; k <= m; ++k) gc.push_back(rng.rational());
  const Rational r = woods_hole_residual(Polynomial(fc), Polynomial(gc));
  return expect(r.is_zero(), "t-coefficient " + r.str());
}

Outcome diagonal_derivative_relations(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap), e = pick(rng, 0, cap), n = d + e;
  const BiForm f = rng.biform(d, e);
  const auto dd = diagonal_derivative_forms(f);
  if (dd.w0 != dd.diag_x + dd.diag_y) return fail("W0 != DiagX + DiagY");
  if (dd.w1 * Rational(2) != dd.diag_x * Rational(e) - dd.diag_y * Rational(d))
    return fail("2 W1 != e DiagX - d DiagY");
  std::vector<Rational> euler(n + 1);
  for (unsigned k = 0; k <= n; ++k) euler[k] = Rational(static_cast<long>(n) - 2 * static_cast<long>(k)) * dd.f[k];
  if (dd.w0 != BinaryForm(n, euler)) return fail("W0 is not the Euler image of F");
  if (std::min(d, e) >= 1) {
    const BinaryForm z0z1 = BinaryForm::monomial(2, 1);
    if (dd.w1 != z0z1 * cayley_omega(f, 1)) return fail("W1 != z0 z1 Omega^1 f");
  } else if (!dd.w1.is_zero()) {
    return fail("W1 nonzero for a form with no Omega^1");
  }
  return pass();
}

Outcome rho_compatible(Rng& rng, unsigned cap) {
  const auto f = rng.good_position_correspondence(2, pick(rng, 2, std::min(cap, 3u)));
  const Rational c0 = rng.nonzero_rational(5, 2), c1 = rng.nonzero_rational(5, 2);
  return expect(rho_compatibility_check(f, c0, c1), "diagram does not commute for " + show(f.form()));
}

Outcome dz_round_trip(Rng& rng, unsigned cap) {
  const unsigned d = pick(rng, 0, cap), e = pick(rng, d == 0 ? 1 : 0, cap);
  const BinaryForm c = rng.binary_form(d + e);
  const CovariantForm r(d + e, c.coeffs());
  return expect(from_dz_coordinates(dz_coordinates(r, d, e), d, e) == r, "dz round trip failed");
}

Outcome iterate_moebius_multiplier(Rng& rng, unsigned) {
  const MoebiusMap g = rng.moebius();
  try {
    return expect(projectively_equal(nth_multiplier_form(moebius_graph(g), 2),
                                     multiplier_form(moebius_graph(g * g))),
                  "second multiplier form of a Moebius graph disagrees with g g");
  } catch (const PreconditionError&) {
    return skip();
  }
}

Outcome serialization_round_trip(Rng& rng, unsigned cap) {
  const auto f = rng.correspondence(pick(rng, 0, cap), pick(rng, 0, cap));
  BiForm scaled = f.form() * rng.nonzero_rational();
  const std::string text = json_io::dump(json_io::to_json(scaled));
  const auto back = json_io::parse_correspondence(text);
  return expect(back.form() == scaled && json_io::dump(json_io::to_json(back)) == text,
                "document does not round-trip: " + text);
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> ids = {
      {"evaluate_homogeneity", evaluate_homogeneity},
      {"diagonal_restriction_law", diagonal_restriction_law},
      {"mixed_partials_commute", mixed_partials_commute},
      {"gcd_certificate", gcd_certificate},
      {"substitution_composes", substitution_composes},
      {"resultant_equivariance", resultant_equivariance},
      {"resultant_multiplicative", resultant_multiplicative},
      {"resultant_detects_common_factor", resultant_detects_common_factor},
      {"covariant_specializations", covariant_specializations},
      {"resultant_shift", resultant_shift},
      {"bareiss_parallel_matches_serial", bareiss_parallel_matches_serial},
      {"composition_associative", composition_associative},
      {"composition_bidegree", composition_bidegree},
      {"compose_parallel_matches_serial", compose_parallel_matches_serial},
      {"moebius_graphs_compose", moebius_graphs_compose},
      {"conjugation_action", conjugation_action},
      {"conjugation_inverse", conjugation_inverse},
      {"conjugation_by_graphs", conjugation_by_graphs},
      {"conjugation_moves_fixed_points", conjugation_moves_fixed_points},
      {"cayley_linear", cayley_linear},
      {"cayley_explicit_value", cayley_explicit_value},
      {"cg_bijective", cg_bijective},
      {"omega0_equivariant", omega0_equivariant},
      {"torus_weights_consistent", torus_weights_consistent},
      {"rho_embed_components", rho_embed_components},
      {"stability_conjugation_invariant", stability_conjugation_invariant},
      {"semistable_parity", semistable_parity},
      {"unstable_coefficient_matrix", unstable_coefficient_matrix},
      {"multiplicity_monotone", multiplicity_monotone},
      {"spectrum_conjugation_invariant", spectrum_conjugation_invariant},
      {"multiplier_oracle", multiplier_oracle},
      {"normalized_sl2_invariant", normalized_sl2_invariant},
      {"hyperplane_theorem", hyperplane_theorem},
      {"index_theorem", index_theorem},
      {"woods_hole", woods_hole},
      {"diagonal_derivative_relations", diagonal_derivative_relations},
      {"rho_compatible", rho_compatible},
      {"dz_round_trip", dz_round_trip},
      {"iterate_moebius_multiplier", iterate_moebius_multiplier},
      {"serialization_round_trip", serialization_round_trip},
  };
  return ids;
}

IdentityResult run_identity(const Identity& id, std::size_t stream, const VerifyOptions& opts) {
  const auto count = static_cast<long>(opts.instances);
  std::vector<Outcome> outcomes(opts.instances);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    Rng rng(opts.seed, stream, static_cast<std::uint64_t>(k));
    try {
      outcomes[k] = id.check(rng, opts.degree_cap);
    } catch (const std::exception& e) {
      outcomes[k] = fail(std::string("exception: ") + e.what());
    }
  }
  IdentityResult r{id.name, 0, 0, 0, {}};
  for (long k = 0; k < count; ++k) {
    switch (outcomes[k].kind) {
      case Outcome::Kind::Pass:
        ++r.passed;
        break;
      case Outcome::Kind::Skip:
        ++r.skipped;
        break;
      case Outcome::Kind::Fail:
        if (r.failed++ == 0) r.first_failure = "instance " + std::to_string(k) + ": " + outcomes[k].message;
        break;
    }
  }
  return r;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.failed == 0; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "corrdyn verify seed=" << options.seed << " degree-cap=" << options.degree_cap
     << " instances=" << options.instances << "\n";
  unsigned failed = 0;
  for (const auto& r : results) {
    const bool good = r.failed == 0;
    failed += good ? 0 : 1;
    os << (good ? "PASS " : "FAIL ") << r.name << " passed=" << r.passed << " failed=" << r.failed
       << " skipped=" << r.skipped << " repro: corrdyn verify --seed " << options.seed
       << " --degree-cap " << options.degree_cap << " --only " << r.name << "\n";
    if (!good) os << "  first failure: " << r.first_failure << "\n";
  }
  os << "summary: " << results.size() << " identities, " << results.size() - failed << " passed, "
     << failed << " failed\n";
  return os.str();
}

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& id : registry()) names.emplace_back(id.name);
  return names;
}

VerifyReport run_verify_suite(const VerifyOptions& opts) {
  if (opts.degree_cap < 2) throw std::invalid_argument("verify: degree cap must be at least 2");
  if (opts.instances == 0) throw std::invalid_argument("verify: instances must be positive");
  const auto& ids = registry();
  if (opts.only && std::none_of(ids.begin(), ids.end(), [&](const auto& id) { return *opts.only == id.name; }))
    throw std::invalid_argument("verify: unknown identity \"" + *opts.only + "\"");
  VerifyReport report{opts, {}};
  for (std::size_t s = 0; s < ids.size(); ++s) {
    if (opts.only && *opts.only != ids[s].name) continue;
    report.results.push_back(run_identity(ids[s], s, opts));
  }
  return report;
}

}  // namespace corrdyn
