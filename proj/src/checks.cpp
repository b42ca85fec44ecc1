#include "polyreg/checks.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polyreg/bernoulli.hpp"
#include "polyreg/error.hpp"
#include "polyreg/form.hpp"
#include "polyreg/polylog.hpp"

namespace polyreg {

namespace {

// fixed 50 digits: no global precision state involved
using Big = boost::multiprecision::mpfr_float_50;

// G = (π/8) log(2 + √3) + (3/8) Σ_k (k!)^2 / ((2k)! (2k+1)^2)
Big catalan_oracle() {
  Big term = 1, sum = 0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= Big(k) / (2 * (2 * k - 1));  // (k!)^2/(2k)! from the previous k
    const Big add = term / Big((2 * k + 1) * (2 * k + 1));
    sum += add;
    if (add < Big("1e-60")) break;
  }
  const Big pi = boost::multiprecision::atan(Big(1)) * 4;
  return pi / 8 * boost::multiprecision::log(2 + boost::multiprecision::sqrt(Big(3))) + Big(3) / 8 * sum;
}

// ζ(3) = (5/2) Σ_{k>=1} (-1)^{k+1} / (k^3 C(2k, k))
Big apery_oracle() {
  Big binom = 1, sum = 0;
  for (int k = 1; k < 200; ++k) {
    binom = binom * (2 * k) * (2 * k - 1) / (Big(k) * k);
    const Big add = 1 / (Big(k) * k * k * binom);
    sum += (k % 2 == 1) ? add : -add;
    if (add < Big("1e-60")) break;
  }
  return sum * 5 / 2;
}

double big_diff(const std::string& value, const Big& oracle) {
  return static_cast<double>(boost::multiprecision::abs(Big(value) - oracle));
}

CaseResult numeric_case(const std::string& input, double defect, double tol, nlohmann::json details = {}) {
  CaseResult c;
  c.input = input;
  c.max_defect = defect;
  c.tol = tol;
  c.pass = defect < tol;
  if (!details.is_null()) c.details = std::move(details);
  return c;
}

}  // namespace

Report beta_values_check() {
  Report r;
  r.suite = "beta-values";
  const std::vector<std::pair<int, Rational>> want = {
      {0, Rational(1)}, {1, Rational(-1)}, {2, Rational(1, 3)}, {4, Rational(-1, 45)}, {6, Rational(2, 945)}};
  for (auto& [k, v] : want) {
    const Rational got = beta(k);
    const bool ok = got == v;
    r.add({"beta_" + std::to_string(k) + " = " + v.to_string(), ok ? 0.0 : 1.0, 0.0, ok, {{"got", got.to_string()}}});
  }
  bool odd_ok = true;
  for (int k = 3; k <= 63; k += 2) odd_ok = odd_ok && beta(k).is_zero();
  r.add({"beta_k = 0 for odd 3 <= k <= 63", odd_ok ? 0.0 : 1.0, 0.0, odd_ok, {}});
  bool route_ok = true;
  for (int k = 0; k <= 40; ++k) route_ok = route_ok && beta(k) == beta_from_bernoulli_recurrence(k);
  r.add({"beta_k from the Bernoulli recurrence, k <= 40", route_ok ? 0.0 : 1.0, 0.0, route_ok, {}});
  r.notes["convention"] = "B_1 = -1/2";
  return r;
}

std::string beta_table_tsv(int max_k, int max_p) {
  if (max_k < 0 || max_p < 1) fail(ErrorKind::InvalidArgument, "beta table needs max_k >= 0 and max_p >= 1");
  const BetaTable t(max_k, max_p);
  std::ostringstream os;
  os << "k\tp\tnumerator\tdenominator\n";
  for (int k = 0; k <= max_k; ++k)
    for (int p = 0; p <= max_p; ++p) {
      const Rational& v = p == 0 ? t.beta(k) : t.beta_kp(k, p);
      os << k << '\t' << p << '\t' << v.numerator().get_str() << '\t' << v.denominator().get_str() << '\n';
    }
  return os.str();
}

nlohmann::json beta_table_json(int max_k, int max_p) {
  if (max_k < 0 || max_p < 1) fail(ErrorKind::InvalidArgument, "beta table needs max_k >= 0 and max_p >= 1");
  const BetaTable t(max_k, max_p);
  nlohmann::json beta = nlohmann::json::array(), rows = nlohmann::json::array();
  for (int k = 0; k <= max_k + max_p; ++k) beta.push_back(t.beta(k).to_string());
  for (int k = 0; k <= max_k; ++k)
    for (int p = 0; p <= max_p; ++p)
      rows.push_back({{"k", k}, {"p", p}, {"value", (p == 0 ? t.beta(k) : t.beta_kp(k, p)).to_string()}});
  return {{"max_k", max_k}, {"max_p", max_p}, {"beta", beta}, {"beta_kp", rows}};
}

Report polylog_values_check(int precision_bits, double tol) {
  Report r;
  r.suite = "sv-polylog-values";
  double real_line = 0;
  for (int j = 1; j < 20; ++j) real_line = std::max(real_line, std::abs(sv_polylog(2, cplx(j / 20.0, 0.0))));
  r.add(numeric_case("L2(x) = 0 for x = 0.05, 0.10, ..., 0.95", real_line, 1e-10));

  const Big g = catalan_oracle();
  const cplx li = sv_polylog(2, cplx(0, 1));
  r.add(numeric_case("L2(i) = i*G, 53 bits", std::abs(li - cplx(0, static_cast<double>(g))), tol,
                     {{"value_im", format_double(li.imag())}}));
  PolylogOptions hp;
  hp.precision_bits = std::max(precision_bits, 128);
  const auto h2 = sv_polylog_hp(2, "0", "1", hp);
  const double hp_tol = std::max(1e-30, std::pow(2.0, -hp.precision_bits + 8));
  r.add(numeric_case("L2(i) = i*G, " + std::to_string(hp.precision_bits) + " bits", big_diff(h2.im, g) + big_diff(h2.re, Big(0)),
                     hp_tol, {{"value_im", h2.im}, {"route", to_string(h2.route)}}));

  const Big z3 = apery_oracle();
  const cplx l3 = sv_polylog(3, cplx(1, 0));
  r.add(numeric_case("L3(1) = zeta(3), 53 bits", std::abs(l3 - static_cast<double>(z3)), tol,
                     {{"value_re", format_double(l3.real())}}));
  const auto h3 = sv_polylog_hp(3, "1", "0", hp);
  r.add(numeric_case("L3(1) = zeta(3), " + std::to_string(hp.precision_bits) + " bits", big_diff(h3.re, z3), hp_tol,
                     {{"value_re", h3.re}, {"route", to_string(h3.route)}}));
  r.notes["oracles"] = "Catalan by the Ramanujan series, zeta(3) by the Apery series, 50 digits";
  return r;
}

Report dpolylog_check(const std::vector<int>& ns, int points, unsigned long seed, double tol) {
  Report r;
  r.suite = "dpolylog";
  const std::vector<std::string> args = {"t", "(1-t)/(1+t)", "(t^2+1)/(t-2)", "3*t/(t^2-t+1)"};
  for (int n : ns) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "d L^_n needs n >= 1");
    double defect = 0, scale = 0;
    int evaluated = 0;
    for (std::size_t a = 0; a < args.size(); ++a) {
      const RationalFunction f = RationalFunction::parse(args[a]);
      const Form l = Form::polylog(n, f);
      const Form d = exterior_derivative(l);
      GenericPointSampler s({"t"}, l.functions(), seed + 1000 * static_cast<unsigned long>(n) + a);
      const int here = points / static_cast<int>(args.size()) + (static_cast<int>(a) < points % static_cast<int>(args.size()) ? 1 : 0);
      for (int i = 0; i < here; ++i) {
        const EvalPoint x = s.next();
        const std::vector<cplx> v = s.random_vector();
        const cplx sym = evaluate(d, x, {v});
        const cplx fd = numeric_d(l, x, {v});
        defect = std::max(defect, std::abs(sym - fd));
        scale = std::max(scale, std::abs(sym));
        ++evaluated;
      }
    }
    r.add(numeric_case("d L" + std::to_string(n) + " vs central differences", defect, tol,
                       {{"points", evaluated}, {"max_abs_dL", format_double(scale)}}));
  }
  r.notes["arguments"] = args;
  r.notes["step"] = "1e-5 * (1 + |x|)";
  return r;
}

Report form_invariants_check(int samples, unsigned long seed, double tol) {
  Report r;
  r.suite = "form-invariants";
  const std::vector<std::string> fs = {"(x-2*y+1)/(x+y)", "x*y+3", "(x+1)/(y-2)"};
  double pair1 = 0, pair2 = 0, dd = 0;
  unsigned long k = 0;
  for (auto& text : fs) {
    const RationalFunction f = RationalFunction::parse(text), g = f.one_minus();
    const Form a1 = wedge(Form::dlog(g), Form::darg(f)), b1 = wedge(Form::dlog(f), Form::darg(g));
    const Form a2 = wedge(Form::dlog(g), Form::dlog(f)), b2 = wedge(Form::darg(g), Form::darg(f));
    const RationalFunction h = RationalFunction::parse("x-y");
    const Form a = wedge(wedge(Form::polylog(3, f), Form::log_abs(h)), Form::darg(h));
    const Form dda = exterior_derivative(exterior_derivative(a));
    std::vector<RationalFunction> all = a.functions();
    all.push_back(f);
    all.push_back(g);
    GenericPointSampler s({"x", "y"}, all, seed + k++);
    for (int i = 0; i < samples; ++i) {
      const EvalPoint x = s.next();
      const auto v = s.random_vector(), w = s.random_vector(), u = s.random_vector();
      pair1 = std::max(pair1, std::abs(evaluate(a1, x, {v, w}) - evaluate(b1, x, {v, w})));
      pair2 = std::max(pair2, std::abs(evaluate(a2, x, {v, w}) + evaluate(b2, x, {v, w})));
      dd = std::max(dd, std::abs(evaluate(dda, x, {v, w, u})));
    }
  }
  r.add(numeric_case("dlog|1-f| ^ darg f = dlog|f| ^ darg(1-f)", pair1, tol));
  r.add(numeric_case("dlog|1-f| ^ dlog|f| = -darg(1-f) ^ darg f", pair2, tol));
  r.add(numeric_case("d(d(L3(f) log|x-y| darg(x-y))) = 0", dd, tol));
  r.notes["functions"] = fs;
  return r;
}

}  // namespace polyreg
