#include "doctest.h"

#include "corrdyn/clebsch_gordan.hpp"
#include "corrdyn/correspondence.hpp"
#include "corrdyn/random.hpp"

using namespace corrdyn;

namespace {

BiForm diagonal_form() {  // x0 y1 - x1 y0
  BiForm f(1, 1);
  f.at(0, 1) = 1;
  f.at(1, 0) = -1;
  return f;
}

}  // namespace

TEST_CASE("Omega on the diagonal form") {
  CHECK(cayley_omega(diagonal_form(), 1) == BinaryForm(0, {Rational(2)}));
  CHECK(cayley_omega(diagonal_form(), 0) == diagonal_restriction(diagonal_form()));
  CHECK_THROWS_AS(cayley_omega(diagonal_form(), 2), std::out_of_range);
}

TEST_CASE("explicit value on x0^d y0^(e-m) y1^m") {
  for (unsigned d = 0; d <= 5; ++d)
    for (unsigned e = 0; e <= 5; ++e)
      for (unsigned m = 0; m <= std::min(d, e); ++m) {
        BiForm f(d, e);
        f.at(0, m) = 1;
        const Rational c = factorial(d) * factorial(m) / factorial(d - m);
        CHECK(cayley_omega(f, m) == BinaryForm::monomial(d + e - 2 * m, 0, c));
      }
}

TEST_CASE("decompose fixtures") {
  BiForm x0y0(1, 1);
  x0y0.at(0, 0) = 1;
  const auto c = cg_decompose(x0y0);
  REQUIRE(c.parts.size() == 2);
  CHECK(c.parts[0] == BinaryForm::monomial(2, 0));
  CHECK(c.parts[1].is_zero());

  const auto diag = cg_decompose(diagonal_form());
  CHECK(diag.parts[0].is_zero());
  CHECK(diag.parts[1] == BinaryForm(0, {Rational(2)}));

  for (const auto& p : cg_decompose(BiForm(3, 2)).parts) CHECK(p.is_zero());
}

TEST_CASE("reconstruct fixtures") {
  BiForm x0y0(1, 1);
  x0y0.at(0, 0) = 1;
  CHECK(cg_reconstruct({1, 1, {BinaryForm::monomial(2, 0), BinaryForm(0)}}) == x0y0);
  CHECK(cg_reconstruct({1, 1, {BinaryForm(2), BinaryForm(0, {Rational(2)})}}) == diagonal_form());
  CHECK_THROWS_AS(cg_reconstruct({1, 1, {BinaryForm(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(cg_reconstruct({1, 1, {BinaryForm(1), BinaryForm(0)}}), std::invalid_argument);
}

TEST_CASE("component sizes add up") {
  for (unsigned d = 0; d <= 5; ++d)
    for (unsigned e = 0; e <= 5; ++e) {
      unsigned total = 0;
      for (const auto& p : cg_decompose(BiForm(d, e)).parts) total += p.degree() + 1;
      CHECK(total == (d + 1) * (e + 1));
    }
}

TEST_CASE("decompose and reconstruct are inverse") {
  for (unsigned d = 0; d <= 5; ++d)
    for (unsigned e = 0; e <= 5; ++e) {
      Rng rng(41, d, e);
      for (int k = 0; k < 3; ++k) {
        const BiForm f = rng.biform(d, e);
        CHECK(cg_reconstruct(cg_decompose(f)) == f);
        CgComponents c{d, e, {}};
        for (unsigned m = 0; m <= std::min(d, e); ++m) c.parts.push_back(rng.binary_form(d + e - 2 * m));
        CHECK(cg_decompose(cg_reconstruct(c)) == c);
      }
    }
}

TEST_CASE("rho embedding") {
  Rng rng(42);
  const BinaryForm w0 = rng.binary_form(4), w1 = rng.binary_form(2);
  const auto f = rho_embed(w0, w1, 2, 2);
  const auto c = cg_decompose(f);
  CHECK(c.parts[0] == w0);
  CHECK(c.parts[1] == w1);
  CHECK(c.parts[2].is_zero());

  const auto g = rho_embed(w0, BinaryForm(2), 2, 2);
  CHECK(cayley_omega(g, 1).is_zero());

  // Bidegree (1, n): the embedding reproduces the form.
  const BiForm h = rng.biform(1, 3);
  CHECK(rho_project(h) == h);
  const auto scaled = cg_decompose(rho_project(h, Rational(2), Rational(3)));
  CHECK(scaled.parts[0] == cayley_omega(h, 0) * Rational(2));
  CHECK(scaled.parts[1] == cayley_omega(h, 1) * Rational(3));

  CHECK_THROWS_AS(rho_embed(w0, w1, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(rho_embed(w1, w1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(rho_embed(w0, w1, 2, 2, Rational(0)), std::invalid_argument);
}

TEST_CASE("torus weights") {
  CHECK(torus_weight(2, 1, 0, 0) == 3);
  CHECK(torus_weight(2, 1, 2, 1) == -3);
  CHECK_THROWS_AS(torus_weight(2, 1, 3, 0), std::out_of_range);
  const auto w = torus_weights(3, 2);
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 2; ++j) CHECK(w.at(i, j) == -w.at(3 - i, 2 - j));
}

TEST_CASE("torus action scales coefficients by their weight") {
  Rng rng(43);
  const auto f = rng.correspondence(3, 2);
  const Rational t(3, 2);
  const auto g = conjugate(f, MoebiusMap(Rational(1) / t, 0, 0, t));
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 2; ++j) {
      const int k = torus_weight(3, 2, i, j);
      const Rational s = k >= 0 ? pow(t, k) : Rational(1) / pow(t, -k);
      CHECK(g.at(i, j) == s * f.at(i, j));
    }
}

TEST_CASE("Omega is linear and Omega^0 is equivariant") {
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng(44, 0, k);
    const BiForm f = rng.biform(3, 2), g = rng.biform(3, 2);
    const Rational a = rng.rational(), b = rng.rational();
    for (unsigned m = 0; m <= 2; ++m)
      CHECK(cayley_omega(f * a + g * b, m) == cayley_omega(f, m) * a + cayley_omega(g, m) * b);
    if (f.is_zero()) continue;
    const MoebiusMap h = rng.moebius();
    CHECK(cayley_omega(conjugate(Correspondence(f), h).form(), 0) ==
          substitute_linear(cayley_omega(f, 0), h.homogeneous_matrix()));
  }
}
