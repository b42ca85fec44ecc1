#include <doctest.h>

#include <random>

#include "polyreg/error.hpp"
#include "polyreg/rational_function.hpp"

using namespace polyreg;

namespace {
RationalFunction F(const char* s) { return RationalFunction::parse(s); }
using cplx = std::complex<double>;
const std::vector<std::string> T = {"t"};
}  // namespace

TEST_CASE("field operations") {
  const RationalFunction f = F("(t+1)/(t-1)");
  CHECK(F("t").one_minus() == F("1-t"));
  CHECK((f * (RationalFunction(Rational(1)) / f)).is_one());
  const RationalFunction g = f * F("(t-1)/(t+2)");
  CHECK(g == F("(t+1)/(t+2)"));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 5; ++i) {
    const cplx x(u(rng), u(rng));
    CHECK(std::abs(g.eval(T, {x}) - (x + 1.0) / (x + 2.0)) < 1e-12);
  }
  CHECK(F("(t^2-1)/(t-1)") == F("t+1"));
  CHECK(F("2*t/(4*t^2)").to_string() == F("1/(2*t)").to_string());
  CHECK_THROWS_AS(F("1/(t-t)"), Error);
  CHECK_THROWS_AS(F("(t+"), Error);
}

TEST_CASE("multivariate functions") {
  const RationalFunction f = F("(x*y-1)/(x+y)");
  CHECK(f.variables() == std::vector<std::string>{"x", "y"});
  CHECK(F("(x^2-y^2)/(x-y)").equals(F("x+y")));
  const RationalFunction fx = f.partial("x");
  // d/dx (xy - 1)/(x + y) = (y^2 + 1)/(x + y)^2
  CHECK(fx.equals(F("(y^2+1)/(x+y)^2")));
}

TEST_CASE("evaluation") {
  CHECK(std::abs(F("t^2+1").eval(T, {cplx(0, 1)})) < 1e-15);
  CHECK_THROWS_AS(F("1/t").eval(T, {cplx(0)}), Error);
  try {
    (void)F("1/t").eval(T, {cplx(0)});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
  CHECK(F("(2+t)/(1+t)").eval(T, {cplx(1)}) == cplx(1.5));
}

TEST_CASE("derivatives") {
  CHECK(F("t^2").dir_derivative(T, {cplx(3)}, {cplx(1)}) == cplx(6));
  CHECK(F("7/3").dir_derivative(T, {cplx(3)}, {cplx(1)}) == cplx(0));
  CHECK(std::abs(F("1/t").dir_derivative(T, {cplx(2)}, {cplx(1)}) - cplx(-0.25)) < 1e-15);
  // central difference cross-check
  const double h = 1e-6;
  const cplx fd = (F("1/t").eval(T, {cplx(2 + h)}) - F("1/t").eval(T, {cplx(2 - h)})) / (2 * h);
  CHECK(std::abs(fd - cplx(-0.25)) < 1e-8);
}

TEST_CASE("valuations") {
  CHECK(F("t^3/(1+t)").ord_at(Valuation::at(0)) == 3);
  CHECK(F("t").ord_at(Valuation::at(1)) == 0);
  CHECK(F("(t^2+1)/t^5").ord_at(Valuation::infinity()) == 3);
  CHECK(F("(t-1)^2/(t+3)").ord_at(Valuation::at(1)) == 2);
  CHECK(F("1/(t-2)").ord_at(Valuation::at(2)) == -1);
  CHECK(F("t^2*(2+t)").unit_part(Valuation::at(0)) == Rational(2));
  CHECK(F("(2+t)/(1+t)").unit_part(Valuation::at(0)) == Rational(2));
  CHECK(F("t^3").unit_part(Valuation::infinity()) == Rational(1));
  CHECK(F("(3*t^2+1)/(2*t)").unit_part(Valuation::infinity()) == Rational(3, 2));
  CHECK(Valuation::parse("inf").is_infinity());
  CHECK(Valuation::parse("∞").is_infinity());
  CHECK(Valuation::parse("-2/3").point == Rational(-2, 3));
}
