#include "doctest.h"

#include "corrdyn/errors.hpp"
#include "corrdyn/multiplier.hpp"
#include "corrdyn/random.hpp"
#include "corrdyn/resultant.hpp"

using namespace corrdyn;

namespace {

BinaryForm form(std::vector<Rational> c) {
  const auto n = static_cast<unsigned>(c.size() - 1);
  return BinaryForm(n, std::move(c));
}

std::vector<Rational> q(std::initializer_list<Rational> c) { return c; }

// Graph of z -> (2z - 1)/z: x0 y0 - 2 x1 y0 + x1 y1, double fixed point 1.
Correspondence double_fixed_point() {
  BiForm f(1, 1);
  f.at(0, 0) = 1;
  f.at(1, 0) = -2;
  f.at(1, 1) = 1;
  return Correspondence(std::move(f));
}

Correspondence square_graph() {
  BiForm f(2, 1);
  f.at(2, 0) = 1;
  f.at(0, 1) = -1;
  return Correspondence(std::move(f));
}

// z -> z^2 moved so that its fixed points sit at 1/2, 2/3 and 1.
Correspondence moved_square() { return conjugate(square_graph(), MoebiusMap(1, 1, 1, 2).inverse()); }

}  // namespace

TEST_CASE("diagonal derivative forms of the double fixed point map") {
  const auto dd = diagonal_derivative_forms(double_fixed_point().form());
  CHECK(dd.f == form({1, -2, 1}));
  CHECK(dd.diag_x == form({1, 2, -1}));
  CHECK(dd.diag_y == form({1, -2, -1}));
  CHECK(dd.w0 == dd.diag_x + dd.diag_y);
  CHECK(dd.w1 == form({0, 2, 0}));
}

TEST_CASE("diagonal derivative relations on random forms") {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng(61, 0, k);
    const auto d = static_cast<unsigned>(rng.uniform(1, 4)), e = static_cast<unsigned>(rng.uniform(1, 4));
    const BiForm f = rng.biform(d, e);
    const auto dd = diagonal_derivative_forms(f);
    CHECK(dd.w0 == dd.diag_x + dd.diag_y);
    CHECK(dd.w1 * Rational(2) == dd.diag_x * Rational(e) - dd.diag_y * Rational(d));
  }
  // Symmetric matrices give equal x and y forms.
  BiForm s(2, 2);
  s.at(0, 1) = s.at(1, 0) = 3;
  s.at(0, 2) = s.at(2, 0) = -1;
  s.at(1, 1) = 5;
  const auto dd = diagonal_derivative_forms(s);
  CHECK(dd.diag_x == dd.diag_y);
}

TEST_CASE("diagonal derivative sign against direct differentiation") {
  // diag_x is (x0 d/dx0 - x1 d/dx1) f on the diagonal; the affine chart
  // derivative z d/dz f(1, z, 1, w) at w = z is its negative half plus a
  // multiple of F.
  Rng rng(62);
  const BiForm f = rng.biform(3, 2);
  const auto dd = diagonal_derivative_forms(f);
  const BiForm fx0 = mixed_partial(f, {1, 0, 0, 0}), fx1 = mixed_partial(f, {0, 1, 0, 0});
  for (long t = -3; t <= 3; ++t) {
    const Rational z(t, 2);
    const Rational direct = evaluate(fx0, {1, z, 1, z}) - z * evaluate(fx1, {1, z, 1, z});
    CHECK(dd.diag_x(1, z) == direct);
  }
}

TEST_CASE("multiplier form fixtures") {
  const auto r = multiplier_form(double_fixed_point());
  CHECK(projectively_equal(r, CovariantForm(2, {1, -2, 1})));
  const auto s = sigma_spectrum(r);
  CHECK(s.sigma == q({1, 2, 1}));

  CHECK_THROWS_AS(multiplier_form(square_graph()), BadPosition);

  const auto moved = moved_square();
  CHECK(sigma_spectrum(multiplier_form(moved)).sigma == q({1, 2, 0, 0}));
  CHECK(rational_fixed_point_oracle(moved).sigma == q({1, 2, 0, 0}));
}

TEST_CASE("indeterminate multiplier at a singular fixed point") {
  // (x0 - x1)(y0 - y1) is singular at ([1:1], [1:1]).
  BiForm f(1, 1);
  f.at(0, 0) = 1;
  f.at(0, 1) = -1;
  f.at(1, 0) = -1;
  f.at(1, 1) = 1;
  try {
    multiplier_form(Correspondence(f));
    FAIL("expected IndeterminateMultiplier");
  } catch (const IndeterminateMultiplier& e) {
    CHECK(e.kind() == "IndeterminateMultiplier");
  }
}

TEST_CASE("sigma spectrum fixtures") {
  CHECK(sigma_spectrum(CovariantForm(2, {1, -2, 1})).sigma == q({1, 2, 1}));
  CHECK(sigma_spectrum(CovariantForm(3, {1, 0, 0, 0})).sigma == q({1, 0, 0, 0}));
  // dy (dy - 2 dx) dy
  CHECK(sigma_spectrum(CovariantForm(3, {1, -2, 0, 0})).sigma == q({1, 2, 0, 0}));
  CHECK_THROWS_AS(sigma_spectrum(CovariantForm(2, {0, 1, 1})), std::domain_error);
}

TEST_CASE("oracle rejects repeated fixed points") {
  CHECK_THROWS_AS(rational_fixed_point_oracle(double_fixed_point()), std::invalid_argument);
  CHECK_THROWS_AS(rational_fixed_point_oracle(square_graph()), std::invalid_argument);
}

TEST_CASE("oracle agreement on seeded map graphs") {
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng(63, 0, k);
    const auto f = rng.map_graph_with_rational_fixed_points(static_cast<unsigned>(rng.uniform(1, 4)));
    CHECK(sigma_spectrum(multiplier_form(f)) == rational_fixed_point_oracle(f));
  }
}

TEST_CASE("dz coordinates") {
  CHECK(dz_coordinates(CovariantForm(2, {1, -2, 1}), 1, 1) == q({0, 0, 1}));
  // (dz0)^n is (d dx + e dy)^n / (d + e)^n; coefficient k goes with dy^(n-k) dx^k.
  const CovariantForm dz0(3, {Rational(8, 27), Rational(4, 9), Rational(2, 9), Rational(1, 27)});
  CHECK(dz_coordinates(dz0, 1, 2) == q({1, 0, 0, 0}));
  CHECK_THROWS_AS(dz_coordinates(dz0, 1, 1), std::invalid_argument);
  Rng rng(64);
  for (int k = 0; k < 10; ++k) {
    const CovariantForm r(4, rng.binary_form(4).coeffs());
    CHECK(from_dz_coordinates(dz_coordinates(r, 1, 3), 1, 3) == r);
    CHECK(from_dz_coordinates(dz_coordinates(r, 2, 2), 2, 2) == r);
  }
}

TEST_CASE("hyperplane and index residuals") {
  CHECK(hyperplane_residual(double_fixed_point()).is_zero());
  CHECK(hyperplane_residual(moved_square()).is_zero());
  CHECK(index_residual({3, q({1, 2, 0, 0}), 1}).is_zero());
  CHECK(index_residual({2, q({1, 2, 1}), 1}).is_zero());
  CHECK(index_residual({3, q({1, 0, 0, 0}), 1}) == Rational(2));
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng(65, 0, k);
    const auto d = static_cast<unsigned>(rng.uniform(1, 3)), e = static_cast<unsigned>(rng.uniform(1, 3));
    CHECK(hyperplane_residual(rng.good_position_correspondence(d, e)).is_zero());
    const auto g = rng.good_position_map_graph(static_cast<unsigned>(rng.uniform(1, 4)));
    CHECK(index_residual(sigma_spectrum(multiplier_form(g))).is_zero());
  }
}

TEST_CASE("a sign flip in diag_y breaks both theorems") {
  // Mutation check: the residual tests must notice a wrong convention.
  int index_broken = 0, hyperplane_broken = 0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    Rng rng(66, 0, k);
    const auto g = rng.good_position_map_graph(2);
    const auto dd = diagonal_derivative_forms(g.form());
    const auto mutant = covariant_resultant(dd.f, dd.diag_x, dd.diag_y * Rational(-1));
    if (!mutant[0].is_zero() && !index_residual(sigma_spectrum(mutant)).is_zero()) ++index_broken;
    if (!dz_coordinates(mutant, g.dx(), g.dy())[1].is_zero()) ++hyperplane_broken;
  }
  CHECK(index_broken > 0);
  CHECK(hyperplane_broken > 0);
}

TEST_CASE("Woods Hole resultant") {
  const Polynomial cube({-1, 0, 0, 1});
  CHECK(woods_hole_resultant(cube, Polynomial(Rational(1))) == Polynomial({27, 0, 0, 1}));
  CHECK(woods_hole_residual(cube, Polynomial(Rational(1))).is_zero());
  const Polynomial x3({0, 0, 0, 1}), x(std::vector<Rational>{0, 1});
  CHECK(is_zero(woods_hole_resultant(x3, x)));
  CHECK_THROWS_AS(woods_hole_resultant(Polynomial({1, 0, 1}), Polynomial()), std::invalid_argument);
  CHECK_THROWS_AS(woods_hole_resultant(cube, Polynomial({0, 0, 1})), std::invalid_argument);
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng(67, 0, k);
    const auto n = static_cast<unsigned>(rng.uniform(3, 6));
    std::vector<Rational> f, g;
    for (unsigned i = 0; i <= n; ++i) f.push_back(rng.rational());
    f.back() = rng.nonzero_rational();
    for (unsigned i = 0; i + 2 <= n; ++i) g.push_back(rng.rational());
    CHECK(woods_hole_residual(Polynomial(f), Polynomial(g)).is_zero());
  }
}

TEST_CASE("normalized form is SL2 invariant") {
  int checked = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    Rng rng(68, 0, k);
    const auto f = rng.good_position_correspondence(2, static_cast<unsigned>(rng.uniform(1, 3)));
    const auto g = conjugate(f, rng.sl2_moebius());
    try {
      CHECK(normalized_multiplier_form(f) == normalized_multiplier_form(g));
      ++checked;
    } catch (const BadPosition&) {
    }
  }
  CHECK(checked >= 15);
}

TEST_CASE("rho compatibility") {
  for (std::uint64_t k = 0; k < 10; ++k) {
    Rng rng(69, 0, k);
    const auto f = rng.good_position_correspondence(2, static_cast<unsigned>(rng.uniform(2, 3)));
    CHECK(rho_compatibility_check(f));
    CHECK(rho_compatibility_check(f, Rational(2), Rational(3)));
  }
  Rng rng(70);
  CHECK(rho_compatibility_check(rng.good_position_correspondence(1, 3)));
}

TEST_CASE("multipliers of iterates") {
  const auto f = moved_square();
  CHECK(nth_multiplier_form(f, 1) == multiplier_form(f));
  // z^4 fixes 0, infinity (multiplier 0) and the cube roots of unity (4).
  const auto s2 = sigma_spectrum(nth_multiplier_form(f, 2));
  CHECK(s2.n == 5);
  CHECK(s2.sigma == q({1, 12, 48, 64, 0, 0}));
  CHECK(index_residual(s2).is_zero());
}
