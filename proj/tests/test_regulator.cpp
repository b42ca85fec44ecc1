#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyreg/bernoulli.hpp"
#include "polyreg/error.hpp"
#include "polyreg/golden.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/regulator.hpp"

using namespace polyreg;
using std::numbers::pi;

namespace {
RationalFunction F(const char* s) { return RationalFunction::parse(s); }
ChainElement E(const char* s) { return ChainElement::parse(s); }
}  // namespace

TEST_CASE("r_map examples") {
  const RationalFunction f = F("(1-t)/(1+t)"), g = F("t+3"), g1 = F("t+2"), g2 = F("t-5");
  CHECK(r_map(E("{(1-t)/(1+t)}_2 ⊗ (t+3)")) ==
        wedge(Form::polylog(2, f), Form::darg(g)) - wedge(Form::log_abs(g), alpha(f.one_minus(), f)).scaled(Rational(1, 3)));
  CHECK(r_map(E("(t+2) ∧ (t-5)")) ==
        wedge(Form::log_abs(g1), Form::darg(g2)).scaled(-1) + wedge(Form::log_abs(g2), Form::darg(g1)));
  for (int n = 2; n <= 8; ++n) {
    Form want = wedge(Form::polylog(n, f), Form::darg(g));
    for (int k = 1; k < n; ++k) want = want - wedge(sv_pq(n - k, k, f), Form::log_abs(g)).scaled(beta(k + 1));
    CHECK(r_map(E(("{(1-t)/(1+t)}_" + std::to_string(n) + " ⊗ (t+3)").c_str())) == want);
  }
  const Form r5 = wedge(Form::polylog(4, f), Form::darg(g)) -
                  wedge(wedge(Form::polylog(3, f), Form::dlog(f)), Form::log_abs(g)).scaled(Rational(1, 3)) +
                  wedge(wedge(alpha(f.one_minus(), f), Form::log_abs(f, 2)), Form::log_abs(g)).scaled(Rational(1, 45));
  CHECK(r_map(E("{(1-t)/(1+t)}_4 ⊗ (t+3)")) == r5);
  CHECK(r_map(E("{0}_3 ⊗ t")).is_zero());
  CHECK(r_map(E("{t}_3 ⊗ (t+1) ∧ (t+1)")).is_zero());
  CHECK(r_map(E("{t}_3 ⊗ (t+1)")).degree() == 1);
  CHECK(r_map(E("{t}_3 ⊗ (t+1) ∧ (t+2)")).degree() == 2);
}

TEST_CASE("holomorphic part") {
  const EvalPoint x{{"t"}, {cplx(2)}};
  CHECK(holomorphic_part({F("t")}, x, {{1}}) == cplx(0.5));
  CHECK(holomorphic_part({F("7")}, x, {{1}}) == cplx(0));
  GenericPointSampler s({"x", "y"}, {F("x"), F("1-x")}, 3);
  const EvalPoint p = s.next();
  const auto v = s.random_vector(), w = s.random_vector();
  const cplx a = p.x[0], b = 1.0 - p.x[0];
  const cplx a1 = v[0] / a, a2 = w[0] / a, b1 = -v[0] / b, b2 = -w[0] / b;
  CHECK(std::abs(holomorphic_part({F("x"), F("1-x")}, p, {v, w}) - pi_projection(2, a1 * b2 - a2 * b1)) < 1e-14);
  CHECK(holomorphic_part({F("x"), F("x")}, p, {v, w}) == cplx(0));
}

TEST_CASE("twist") {
  CHECK(in_twist(cplx(0, 2), 2, 1e-8));
  CHECK_FALSE(in_twist(cplx(1, 2), 2, 1e-8));
  CHECK(in_twist(cplx(3, 0), 3, 1e-8));
  CHECK(in_twist(cplx(3, 1e-12), 3, 1e-8));
}

TEST_CASE("chain map at generic points") {
  RegulatorConfig cfg;
  for (const char* e : {"{(1-t)/(1+t)}_2 ⊗ t", "{(x-y+1)/(x+2*y)}_3 ⊗ x ∧ y", "{3}_2 ⊗ t ∧ (t+1)",
                        "{(1-t)/(1+t)}_4 ⊗ t ∧ (t+2)"}) {
    const Report r = chain_check(E(e), cfg);
    CHECK_MESSAGE(r.pass(), r.to_text());
  }
  // the tolerance is honoured
  const ChainElement e = E("{(1-t)/(1+t)}_3 ⊗ t");
  RegulatorConfig strict = cfg;
  strict.tol = 1e-30;
  CHECK_FALSE(chain_check(e, strict).pass());
}

TEST_CASE("top cycle") {
  RegulatorConfig cfg;
  CHECK(top_check({F("t"), F("1-t")}, cfg).pass());
  CHECK(top_check({F("x"), F("y"), F("x+y")}, cfg).pass());
}

TEST_CASE("loop residues") {
  RegulatorConfig cfg;
  const Report w2 = loop_residue_check(E("(t+2) ∧ t"), Rational(0), cfg);
  CHECK_MESSAGE(w2.pass(), w2.to_text());
  const Report w3 = loop_residue_check(E("{(2+t)/(1+t)}_3 ⊗ t"), Rational(0), cfg);
  CHECK_MESSAGE(w3.pass(), w3.to_text());
  // the raw loop of (t+2) ∧ t approaches -2πi log 2
  const Form r = r_map(E("(t+2) ∧ t"));
  const cplx want(0, -2 * pi * std::log(2.0));
  const cplx ccw = loop_integral(r, "t", Rational(0), 1e-3, 256), cw = loop_integral(r, "t", Rational(0), 1e-3, 256, true);
  CHECK(std::abs(ccw - want) < 1e-2);
  CHECK(std::abs(cw + ccw) < 1e-12);
  CHECK(residue_value(E("{2}_3")) == sv_polylog(3, 2));
  CHECK(std::abs(residue_value(E("-(2)")) + std::log(2.0)) < 1e-15);
}

TEST_CASE("extrapolation recovers the constant of the model") {
  const std::vector<double> radii{1e-2, 3e-3, 1e-3};
  std::vector<cplx> values;
  for (double e : radii) values.push_back(cplx(1.5, -2) + cplx(0.3, 0) * e * std::log(e) + cplx(0, 4) * e);
  CHECK(std::abs(extrapolate_to_zero(radii, values) - cplx(1.5, -2)) < 1e-10);
}

TEST_CASE("config validation") {
  RegulatorConfig cfg;
  cfg.loop_radii = {1e-3, 1e-2};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.loop_nodes = 8;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("golden records") {
  const auto entries = load_golden_dir(default_golden_dir());
  CHECK(entries.size() >= 11);
  const Report r = golden_formula_tests();
  CHECK_MESSAGE(r.pass(), r.to_text());
  const auto parsed = parse_golden("# c\nname: x\nelement: t ∧ (t+1)\nexpect: -log|t|·darg(t+1)\n  + log|t+1|·darg(t)\n");
  REQUIRE(parsed.size() == 1);
  CHECK(r_map(E(parsed[0].element.c_str())) == Form::parse(parsed[0].expect));
}
