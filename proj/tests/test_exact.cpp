#include <doctest.h>

#include "polyreg/bernoulli.hpp"
#include "polyreg/error.hpp"
#include "polyreg/rational.hpp"

using namespace polyreg;

TEST_CASE("rational arithmetic and parsing") {
  const Rational a = Rational::parse("-6/8"), b(1, 4);
  CHECK(a == Rational(-3, 4));
  CHECK(a + b == Rational(-1, 2));
  CHECK(a * b == Rational(-3, 16));
  CHECK(a / b == Rational(-3));
  CHECK(a.to_string() == "-3/4");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(b / Rational(0), Error);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("beta numbers") {
  CHECK(beta(0) == Rational(1));
  CHECK(beta(1) == Rational(-1));
  CHECK(beta(2) == Rational(1, 3));
  CHECK(beta(3).is_zero());
  CHECK(beta(4) == Rational(-1, 45));
  CHECK(beta(6) == Rational(2, 945));
  for (int k = 3; k < 60; k += 2) CHECK(beta(k).is_zero());
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(4) == Rational(-1, 30));
  // B_4 from β_4 = -1/45 by B_k = β_k k! / 2^k
  CHECK(bernoulli(4) == beta(4) * Rational(24, 16));
  // independent route: Σ_{j<k} C(k+1, j) B_j = -(k+1) B_k
  for (int k = 0; k <= 30; ++k) CHECK(beta(k) == beta_from_bernoulli_recurrence(k));
}

TEST_CASE("beta_{k,p}") {
  for (int k = 0; k <= 10; ++k) CHECK(beta_kp(k, 1) == -beta(k + 1));
  CHECK(beta_kp(0, 2) == Rational(1, 3));
  CHECK(beta_kp(1, 2).is_zero());
  CHECK(beta_kp_recursive(0, 2) == Rational(1, 3));
  CHECK(beta_kp_recursive(2, 3) == beta_kp(2, 3));
  for (int m = 1; m <= 10; ++m) {
    CHECK(beta_kp(0, 2 * m) == Rational(1, 2 * m + 1));
    CHECK(beta_kp(0, 2 * m + 1) == Rational(1, 2 * m + 1));
    CHECK(beta_kp(1, 2 * m - 1).abs() == Rational(1, (2 * m - 1) * (2 * m + 1)));
  }
}

TEST_CASE("identity suites") {
  const Report grid = verify_radema(50);
  CHECK(grid.pass());
  CHECK(grid.notes.contains("sign_beta_{1,2m-1}"));
  CHECK(verify_recursions(40, 40).pass());
  const Report prop = verify_proposition(30, 30);
  CHECK(prop.pass());
  CHECK(prop.notes.contains("quadratic_identity_resolution"));
}

TEST_CASE("proposition instances") {
  CHECK(proposition_lhs(3, 1, 0).is_zero());
  // the n - 1 variant of the linear identity does not hold
  CHECK_FALSE(proposition_lhs(4, 1, -1).is_zero());
  // quadratic identity: i from 2 to n - 2 with (n + 1) β_n
  for (int n = 4; n <= 30; ++n) CHECK(quadratic_lhs(n, 2, 2, 1).is_zero());
  CHECK(quadratic_lhs(4, 2, 2, 0) == Rational(1, 45));
}
