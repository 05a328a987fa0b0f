#include "doctest.h"

#include "corrdyn/forms.hpp"
#include "corrdyn/random.hpp"

using namespace corrdyn;

namespace {

BinaryForm form(std::vector<Rational> c) {
  const auto n = static_cast<unsigned>(c.size() - 1);
  return BinaryForm(n, std::move(c));
}

}  // namespace

TEST_CASE("rational parse and canonical text") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("12").str() == "12");
  CHECK(Rational::parse("123456789012345678901234567890/2").str() == "61728394506172839450617283945");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/-4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(factorial(5) == Rational(120));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("polynomial division and gcd") {
  const Polynomial a({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  const Polynomial b({Rational(1), Rational(-2), Rational(1)});  // (t - 1)^2
  CHECK(gcd(a, b) == Polynomial({Rational(-1), Rational(1)}));
  const auto [q, r] = a.divmod(Polynomial({Rational(-1), Rational(1)}));
  CHECK(q == Polynomial({Rational(1), Rational(1)}));
  CHECK(is_zero(r));
  CHECK_THROWS(exact_div(a, b));
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("biform evaluation fixtures") {
  BiForm unit(1, 1);
  unit.at(0, 0) = 1;
  CHECK(evaluate(unit, {1, 0, 1, 0}) == Rational(1));

  BiForm square(2, 1);  // x1^2 y0 - x0^2 y1
  square.at(2, 0) = 1;
  square.at(0, 1) = -1;
  CHECK(evaluate(square, {1, 2, 1, 4}) == Rational(0));
  CHECK(evaluate(BiForm(2, 3), {3, 5, 7, 11}) == Rational(0));
}

TEST_CASE("diagonal restriction fixtures") {
  BiForm diag(1, 1);  // x0 y1 - x1 y0
  diag.at(0, 1) = 1;
  diag.at(1, 0) = -1;
  CHECK(diagonal_restriction(diag) == BinaryForm(2));

  BiForm square(2, 1);
  square.at(2, 0) = 1;
  square.at(0, 1) = -1;
  CHECK(diagonal_restriction(square) == form({0, -1, 1, 0}));

  BiForm moebius(1, 1);  // x0 y0 - 2 x1 y0 + x1 y1
  moebius.at(0, 0) = 1;
  moebius.at(1, 0) = -2;
  moebius.at(1, 1) = 1;
  CHECK(diagonal_restriction(moebius) == form({1, -2, 1}));
}

TEST_CASE("mixed partial fixtures") {
  BiForm diag(1, 1);
  diag.at(0, 1) = 1;
  diag.at(1, 0) = -1;
  CHECK(mixed_partial(diag, {1, 0, 0, 1}) == BiForm(0, 0, {Rational(1)}));
  CHECK(mixed_partial(diag, {0, 1, 1, 0}) == BiForm(0, 0, {Rational(-1)}));
  CHECK(mixed_partial(diag, {0, 0, 0, 0}) == diag);
  const BiForm over = mixed_partial(diag, {2, 0, 0, 0});
  CHECK(over.dx() == 0);
  CHECK(over.dy() == 1);
  CHECK(over.is_zero());
}

TEST_CASE("binary gcd fixtures") {
  CHECK(binary_gcd(std::vector<BinaryForm>{form({0, 0, 1, 0}), form({0, 1, 0, 0})}) == form({0, 1, 0}));
  CHECK(binary_gcd(std::vector<BinaryForm>{BinaryForm(2), form({1, 0, -1})}) == form({1, 0, -1}));
  CHECK(binary_gcd(std::vector<BinaryForm>{form({1, 0, -1}), form({1, -2, 1})}) == form({1, -1}));
  CHECK(binary_gcd(std::vector<BinaryForm>{BinaryForm(3), BinaryForm(1)}) == BinaryForm(3));
  // Scaling does not change the normalized answer.
  CHECK(binary_gcd(std::vector<BinaryForm>{form({Rational(-3, 2), Rational(3, 2)})}) == form({1, -1}));
  CHECK_THROWS_AS(binary_gcd(std::vector<BinaryForm>{}), std::invalid_argument);
}

TEST_CASE("gcd divides every input on a seeded corpus") {
  for (std::uint64_t k = 0; k < 60; ++k) {
    Rng rng(11, 0, k);
    const BinaryForm c = rng.binary_form(static_cast<unsigned>(rng.uniform(0, 3)));
    const BinaryForm f = c * rng.binary_form(static_cast<unsigned>(rng.uniform(0, 3)));
    const BinaryForm g = c * rng.binary_form(static_cast<unsigned>(rng.uniform(0, 3)));
    const BinaryForm d = binary_gcd(std::vector<BinaryForm>{f, g});
    if (d.is_zero()) {
      CHECK(f.is_zero());
      CHECK(g.is_zero());
      continue;
    }
    if (!f.is_zero()) CHECK(divide_exact(f, d).has_value());
    if (!g.is_zero()) CHECK(divide_exact(g, d).has_value());
    if (!c.is_zero()) CHECK(divide_exact(d, c).has_value());
  }
}

TEST_CASE("substitute linear fixtures") {
  CHECK(substitute_linear(form({0, 1, 0}), Matrix2{}) == form({0, 1, 0}));
  CHECK(substitute_linear(form({1, 0, 0}), Matrix2{0, 1, 1, 0}) == form({0, 0, 1}));
  CHECK(substitute_linear(form({1, -1}), Matrix2{1, 1, 0, 1}) == form({1, 0}));
}

TEST_CASE("substitution composes as matrix product") {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng(12, 0, k);
    const BinaryForm f = rng.binary_form(static_cast<unsigned>(rng.uniform(0, 4)));
    const Matrix2 m{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    const Matrix2 n{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    CHECK(substitute_linear(substitute_linear(f, m), n) == substitute_linear(f, m * n));
  }
}

TEST_CASE("rational roots include the point at infinity") {
  // z1 (2 z1 - z0) (z1 + 3 z0) z0 -> roots t = 0, 1/2, -3 and [0:1]
  const BinaryForm f = form({0, 1}) * form({-1, 2}) * form({3, 1}) * form({1, 0});
  const auto roots = rational_roots(f);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == ProjectivePoint{1, -3});
  CHECK(roots[1] == ProjectivePoint{1, 0});
  CHECK(roots[2] == ProjectivePoint{1, Rational(1, 2)});
  CHECK(roots[3] == ProjectivePoint{0, 1});
  CHECK(rational_roots(form({1, 0, 1})).empty());
}

TEST_CASE("projective equality") {
  CHECK(projectively_equal(form({1, 2}), form({-2, -4})));
  CHECK_FALSE(projectively_equal(form({1, 2}), form({1, 3})));
  CHECK_FALSE(projectively_equal(BinaryForm(1), BinaryForm(1)));
  CHECK_THROWS_AS(BinaryForm(2, {Rational(1)}), std::invalid_argument);
}
