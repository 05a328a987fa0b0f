#include "doctest.h"

#include <set>
#include <stdexcept>

#include "corrdyn/verify.hpp"

using namespace corrdyn;

TEST_CASE("identity names are unique") {
  const auto names = identity_names();
  CHECK(names.size() >= 30);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}

TEST_CASE("suite is deterministic and green") {
  VerifyOptions o;
  o.seed = 11;
  o.degree_cap = 3;
  o.instances = 4;
  const auto a = run_verify_suite(o), b = run_verify_suite(o);
  CHECK(a.text() == b.text());
  CHECK(a.ok());
  CHECK(a.results.size() == identity_names().size());
  for (const auto& r : a.results) CHECK(r.passed + r.failed + r.skipped == o.instances);
}

TEST_CASE("only runs the named identity with the same streams") {
  VerifyOptions all;
  all.seed = 5;
  all.instances = 3;
  const auto full = run_verify_suite(all);
  VerifyOptions one = all;
  one.only = "woods_hole";
  const auto single = run_verify_suite(one);
  REQUIRE(single.results.size() == 1);
  for (const auto& r : full.results)
    if (r.name == "woods_hole") {
      CHECK(r.passed == single.results[0].passed);
      CHECK(r.skipped == single.results[0].skipped);
    }
  CHECK(single.text().find("repro: corrdyn verify --seed 5 --degree-cap 3 --only woods_hole") !=
        std::string::npos);
}

TEST_CASE("invalid options") {
  VerifyOptions o;
  o.degree_cap = 1;
  CHECK_THROWS_AS(run_verify_suite(o), std::invalid_argument);
  o.degree_cap = 3;
  o.instances = 0;
  CHECK_THROWS_AS(run_verify_suite(o), std::invalid_argument);
  o.instances = 1;
  o.only = "missing";
  CHECK_THROWS_AS(run_verify_suite(o), std::invalid_argument);
}
