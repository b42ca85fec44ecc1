#include <doctest.h>

#include <cmath>

#include "polyreg/error.hpp"
#include "polyreg/form.hpp"
#include "polyreg/polylog.hpp"

using namespace polyreg;

namespace {
RationalFunction F(const char* s) { return RationalFunction::parse(s); }
Form P(const char* s) { return Form::parse(s); }
EvalPoint at_t(cplx x) { return {{"t"}, {x}}; }
}  // namespace

TEST_CASE("wedge algebra") {
  const RationalFunction g = F("t+1"), h = F("t-3"), f = F("2*t");
  CHECK(wedge(Form::dlog(g), Form::dlog(g)).is_zero());
  CHECK(wedge(Form::darg(g), Form::dlog(h)) == -wedge(Form::dlog(h), Form::darg(g)));
  CHECK(wedge(wedge(Form::log_abs(g), Form::darg(f)), Form::darg(h)) ==
        wedge(Form::log_abs(g), wedge(Form::darg(f), Form::darg(h))));
  CHECK_THROWS_AS(Form::dlog(g) + Form::log_abs(g), Error);
}

TEST_CASE("alpha") {
  const RationalFunction f = F("t"), g = F("1-t");
  CHECK(alpha(f, f).is_zero());
  CHECK(alpha(f, g) == -alpha(g, f));
  // hand evaluation at t = 2 + i, v = 1
  const cplx t(2, 1), v(1);
  const double want = -std::log(std::abs(1.0 - t)) * (v / t).real() + std::log(std::abs(t)) * (-v / (1.0 - t)).real();
  CHECK(std::abs(evaluate(alpha(g, f), at_t(t), {{v}}) - cplx(want)) < 1e-14);
}

TEST_CASE("sv_pq") {
  const RationalFunction f = F("(1-t)/(1+t)");
  CHECK(sv_pq(2, 1, f) == wedge(Form::polylog(2, f), Form::dlog(f)));
  CHECK(sv_pq(1, 1, f) == alpha(f.one_minus(), f));
  CHECK(sv_pq(1, 3, f) == wedge(Form::log_abs(f, 2), alpha(f.one_minus(), f)));
  CHECK(sv_pq(3, 2, f) == wedge(wedge(Form::polylog(3, f), Form::log_abs(f)), Form::dlog(f)));
}

TEST_CASE("exterior derivative") {
  const RationalFunction f = F("(1-t)/(1+t)"), g = F("t+2"), h = F("t-5");
  CHECK(exterior_derivative(wedge(Form::log_abs(g), Form::darg(h))) == wedge(Form::dlog(g), Form::darg(h)));
  CHECK(exterior_derivative(Form::polylog(2, f)) ==
        wedge(Form::log_abs(f), Form::darg(f.one_minus())) - wedge(Form::log_abs(f.one_minus()), Form::darg(f)));
  CHECK(exterior_derivative(Form::polylog(3, f)) ==
        wedge(Form::polylog(2, f), Form::darg(f)) - sv_pq(1, 2, f).scaled(Rational(1, 3)));
  CHECK(exterior_derivative(Form::dlog(g)).is_zero());
  // d^2 = 0 holds up to the pair relations, so it is checked numerically
  // (two variables: a 3-form in one complex variable vanishes anyway)
  const Form dd = exterior_derivative(
      exterior_derivative(wedge(wedge(Form::polylog(4, F("(1-x)/(1+y)")), Form::log_abs(F("x-y"))), Form::darg(F("x+y+2")))));
  CHECK(dd.degree() == 3);
  CHECK_FALSE(dd.is_zero());
  GenericPointSampler s({"x", "y"}, dd.functions(), 9);
  for (int i = 0; i < 5; ++i) {
    const EvalPoint x = s.next();
    CHECK(std::abs(evaluate(dd, x, {s.random_vector(), s.random_vector(), s.random_vector()})) < 1e-12);
  }
}

TEST_CASE("weighted alternation") {
  const std::vector<RationalFunction> g = {F("t+1"), F("t+2"), F("t+3")};
  CHECK(weighted_alternation({true, 0, 0}, {g[0]}) == Form::log_abs(g[0]));
  CHECK(weighted_alternation({true, 0, 1}, {g[0], g[1]}) ==
        wedge(Form::log_abs(g[0]), Form::darg(g[1])) - wedge(Form::log_abs(g[1]), Form::darg(g[0])));
  for (const AlternationPattern p : {AlternationPattern{true, 1, 1}, AlternationPattern{false, 2, 1},
                                     AlternationPattern{true, 0, 2}, AlternationPattern{false, 0, 3}})
    CHECK(weighted_alternation(p, g) == alternation_brute_force(p, g));
}

TEST_CASE("evaluation") {
  const RationalFunction t = F("t");
  CHECK(evaluate(Form::dlog(t), at_t(2), {{1}}) == cplx(0.5));
  CHECK(std::abs(evaluate(Form::darg(t), at_t(cplx(0, 1)), {{1}}) - cplx(0, -1)) < 1e-15);
  // 2x2 determinant of the covectors of dlog|g| and d i arg g
  const RationalFunction g = F("t^2+3");
  const cplx x(0.7, -0.4), v(1, 2), w(-0.5, 0.3);
  const cplx dg = 2.0 * x / (x * x + 3.0);
  const cplx a1 = (dg * v).real(), a2 = (dg * w).real();
  const cplx b1 = cplx(0, (dg * v).imag()), b2 = cplx(0, (dg * w).imag());
  CHECK(std::abs(evaluate(wedge(Form::dlog(g), Form::darg(g)), at_t(x), {{v}, {w}}) - (a1 * b2 - a2 * b1)) < 1e-14);
  CHECK(std::abs(evaluate(Form::polylog(2, t), at_t(cplx(0, 1)), {}) - sv_polylog(2, cplx(0, 1))) < 1e-15);
}

TEST_CASE("numeric derivative") {
  CHECK(std::abs(numeric_d(Form::log_abs(F("t")), at_t(3), {{1}}) - cplx(1.0 / 3)) < 1e-6);
  CHECK(std::abs(numeric_d(Form::dlog(F("t")), at_t(cplx(1.2, 0.4)), {{1}, {cplx(0, 1)}})) < 1e-6);
  const Form l3 = Form::polylog(3, F("t"));
  GenericPointSampler s({"t"}, l3.functions(), 17);
  for (int i = 0; i < 10; ++i) {
    const EvalPoint x = s.next();
    const auto v = s.random_vector();
    CHECK(std::abs(numeric_d(l3, x, {v}) - evaluate(exterior_derivative(l3), x, {v})) < 1e-5);
  }
}

TEST_CASE("parse round trip") {
  const RationalFunction f = F("(1-t)/(1+t)"), g = F("t+2");
  const Form a = wedge(wedge(Form::polylog(3, f), Form::log_abs(g, 2)), Form::darg(g)).scaled(Rational(-2, 7)) +
                 wedge(Form::log_abs(f), Form::dlog(f));
  CHECK(P(a.to_string().c_str()) == a);
  CHECK(P("alpha(1-t, t)") == alpha(F("1-t"), F("t")));
  CHECK(P("L{1,2}(t)") == sv_pq(1, 2, F("t")));
  CHECK(P("log|t| * darg(t+1) ^ dlog|t-1|") ==
        wedge(wedge(Form::log_abs(F("t")), Form::darg(F("t+1"))), Form::dlog(F("t-1"))));
  CHECK_THROWS_AS(P("log|t| ^"), Error);
}
