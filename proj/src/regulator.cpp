#include "polyreg/regulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "polyreg/bernoulli.hpp"
#include "polyreg/error.hpp"
#include "polyreg/polylog.hpp"

namespace polyreg {

void RegulatorConfig::validate() const {
  if (!(tol > 0)) fail(ErrorKind::InvalidArgument, "tol must be positive");
  if (samples < 1) fail(ErrorKind::InvalidArgument, "samples must be at least 1");
  if (vector_tuples < 1) fail(ErrorKind::InvalidArgument, "vector_tuples must be at least 1");
  if (!(fd_step > 0)) fail(ErrorKind::InvalidArgument, "fd_step must be positive");
  if (loop_radii.empty()) fail(ErrorKind::InvalidArgument, "loop_radii is empty");
  for (std::size_t i = 0; i < loop_radii.size(); ++i) {
    if (!(loop_radii[i] > 0)) fail(ErrorKind::InvalidArgument, "loop radii must be positive");
    if (i > 0 && !(loop_radii[i] < loop_radii[i - 1]))
      fail(ErrorKind::InvalidArgument, "loop radii must be strictly decreasing");
  }
  if (loop_nodes < 64) fail(ErrorKind::InvalidArgument, "loop_nodes must be at least 64");
}

namespace {

Form one() { return Form::constant(Rational(1)); }

Form depth_term(const ChainTerm& t) {
  const int n = t.depth;
  const int m = static_cast<int>(t.wedge.size());
  if (t.argument_infinite || t.argument.is_zero()) return Form(m);
  const RationalFunction& f = t.argument;
  const BetaTable& bt = default_beta_table();

  Form first(m);
  for (int p = 0; 2 * p <= m; ++p) {
    Form a = weighted_alternation({false, 2 * p, m - 2 * p}, t.wedge);
    first = first + a.scaled(Rational(1, 2 * p + 1));
  }
  Form r = wedge(Form::polylog(n, f), m == 0 ? one() : first);
  // every L^_{n-k,k}(c) vanishes for constant c
  if (m == 0 || f.is_constant()) return r;
  for (int k = 1; k <= n - 1; ++k) {
    const Form lk = sv_pq(n - k, k, f);
    for (int p = 1; p <= m; ++p) {
      const Rational& b = bt.beta_kp(k, p);
      if (b.is_zero()) continue;
      Form a = weighted_alternation({true, p - 1, m - p}, t.wedge);
      r = r + wedge(lk, a).scaled(b);
    }
  }
  return r;
}

Form wedge_term(const ChainTerm& t) {
  const int m = static_cast<int>(t.wedge.size());
  Form r(m - 1);
  for (int p = 0; 2 * p + 1 <= m; ++p) {
    Form a = weighted_alternation({true, 2 * p, m - 1 - 2 * p}, t.wedge);
    r = r - a.scaled(Rational(1, 2 * p + 1));
  }
  return r;
}

std::vector<std::string> element_variables(const ChainElement& e) {
  std::set<std::string> vs;
  for (auto& t : e.terms()) {
    if (t.depth > 0 && !t.argument_infinite)
      for (auto& v : t.argument.variables()) vs.insert(v);
    for (auto& g : t.wedge)
      for (auto& v : g.variables()) vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

std::vector<RationalFunction> merged_functions(std::initializer_list<const Form*> forms) {
  std::vector<RationalFunction> out;
  for (const Form* f : forms)
    for (auto& g : f->functions())
      if (!g.is_constant()) out.push_back(g);
  return out;
}

cplx twist_offender(cplx v, int weight) {
  // component that must vanish for v ∈ i^{weight-1} R
  return (weight - 1) % 2 == 0 ? cplx(0, v.imag()) : cplx(v.real(), 0);
}

std::string join(const std::vector<RationalFunction>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ";" : "") + fs[i].to_string();
  return s;
}

}  // namespace

Form r_term(const ChainTerm& t) {
  if (t.depth == 1) fail(ErrorKind::InvalidArgument, "depth-1 terms are not part of the complex");
  Form r = t.depth == 0 ? wedge_term(t) : depth_term(t);
  return r.scaled(Rational(t.coefficient));
}

Form r_map(const ChainElement& e) {
  if (e.weight() < 2) fail(ErrorKind::InvalidArgument, "r_map needs weight >= 2");
  Form r(e.degree() - 1);
  for (auto& t : e.terms()) r = r + r_term(t);
  return r;
}

cplx holomorphic_part(const std::vector<RationalFunction>& fs, const EvalPoint& x,
                      const std::vector<std::vector<cplx>>& vectors) {
  const std::size_t n = fs.size();
  if (vectors.size() != n) fail(ErrorKind::InvalidArgument, "holomorphic_part needs one vector per function");
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx val, der;
      fs[i].eval_with_derivative(x.variables, x.x, vectors[j], val, der);
      if (val == 0.0) fail(ErrorKind::Domain, "non-generic point: " + fs[i].to_string() + " vanishes");
      a[i * n + j] = fs[i].is_constant() ? 0.0 : der / val;
    }
  // determinant by elimination
  cplx det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const cplx f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return n % 2 == 1 ? cplx(det.real(), 0) : cplx(0, det.imag());
}

bool in_twist(cplx v, int weight, double tol) {
  return std::abs(twist_offender(v, weight)) <= tol * std::max(1.0, std::abs(v));
}

Report chain_check(const ChainElement& e, const RegulatorConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.suite = "chain-check";
  const int N = e.weight();
  if (e.degree() >= N) fail(ErrorKind::InvalidArgument, "chain_check needs an element below the top degree");
  const Form r = r_map(e);
  const Form dr = exterior_derivative(r);
  const ChainElement de = delta(e);
  const Form rde = de.is_zero() ? Form(dr.degree()) : r_map(de);
  const int q = e.degree() - 1;

  const std::vector<std::string> vars = element_variables(e);
  GenericPointSampler sampler(vars, merged_functions({&r, &rde}), cfg.seed);
  double defect = 0, scale = 0, twist = 0;
  bool twist_ok = true;
  for (int s = 0; s < cfg.samples; ++s) {
    const EvalPoint x = sampler.next();
    for (int j = 0; j < cfg.vector_tuples; ++j) {
      std::vector<std::vector<cplx>> vs;
      for (int i = 0; i <= q; ++i) vs.push_back(sampler.random_vector());
      const cplx a = evaluate(dr, x, vs);
      const cplx b = evaluate(rde, x, vs);
      const cplx c = evaluate(r, x, std::vector<std::vector<cplx>>(vs.begin(), vs.begin() + q));
      defect = std::max(defect, std::abs(a - b));
      scale = std::max(scale, std::abs(a));
      for (cplx v : {a, b, c}) {
        twist = std::max(twist, std::abs(twist_offender(v, N)) / std::max(1.0, std::abs(v)));
        if (!in_twist(v, N, cfg.twist_tol)) twist_ok = false;
      }
    }
  }
  CaseResult c;
  c.input = e.to_string();
  c.max_defect = defect;
  c.tol = cfg.tol;
  c.pass = defect < cfg.tol && twist_ok;
  c.details = {{"weight", N},
               {"variables", vars.size()},
               {"form_degree", q},
               {"max_abs_dr", format_double(scale)},
               {"twist_defect", format_double(twist)},
               {"twist_tol", format_double(cfg.twist_tol)},
               {"twist_pass", twist_ok},
               {"r_terms", r.size()},
               {"dr_terms", dr.size()},
               {"r_delta_terms", rde.size()}};
  rep.add(std::move(c));
  return rep;
}

Report top_check(const std::vector<RationalFunction>& fs, const RegulatorConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.suite = "top-check";
  const int n = static_cast<int>(fs.size());
  if (n < 2) fail(ErrorKind::InvalidArgument, "top_check needs at least two functions");
  ChainTerm t;
  t.depth = 0;
  t.wedge = fs;
  const ChainElement e(t);
  const Form dr = e.is_zero() ? Form(n) : exterior_derivative(r_map(e));

  std::set<std::string> vset;
  for (auto& f : fs)
    for (auto& v : f.variables()) vset.insert(v);
  const std::vector<std::string> vars(vset.begin(), vset.end());
  std::vector<RationalFunction> checked;
  for (auto& f : fs)
    if (!f.is_constant()) checked.push_back(f);
  for (auto& g : dr.functions())
    if (!g.is_constant()) checked.push_back(g);
  GenericPointSampler sampler(vars, checked, cfg.seed);
  double defect = 0, scale = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    const EvalPoint x = sampler.next();
    for (int j = 0; j < cfg.vector_tuples; ++j) {
      std::vector<std::vector<cplx>> vs;
      for (int i = 0; i < n; ++i) vs.push_back(sampler.random_vector());
      const cplx a = evaluate(dr, x, vs);
      const cplx h = holomorphic_part(fs, x, vs);
      defect = std::max(defect, std::abs(a + h));
      scale = std::max(scale, std::abs(h));
    }
  }
  CaseResult c;
  c.input = join(fs);
  c.max_defect = defect;
  c.tol = cfg.tol;
  c.pass = defect < cfg.tol;
  c.details = {{"n", n},
               {"variables", vars.size()},
               {"max_abs_holomorphic", format_double(scale)},
               {"repeated_entry", e.is_zero()}};
  rep.add(std::move(c));
  return rep;
}

cplx loop_integral(const Form& one_form, const std::string& variable, const Rational& a, double radius, int nodes,
                   bool clockwise) {
  if (one_form.degree() != 1 && !one_form.is_zero()) fail(ErrorKind::InvalidArgument, "loop integral of a non-1-form");
  if (one_form.is_zero()) return 0.0;
  const double pi = std::numbers::pi;
  const double center = a.to_double();
  const double dir = clockwise ? -1.0 : 1.0;
  cplx sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double th = dir * 2 * pi * j / nodes;
    const cplx u = std::polar(1.0, th);
    EvalPoint x{{variable}, {center + radius * u}};
    // d t / d θ along the loop
    const std::vector<cplx> v{dir * cplx(0, 1) * radius * u};
    sum += evaluate(one_form, x, {v});
  }
  return sum * (2 * pi / nodes);
}

cplx extrapolate_to_zero(const std::vector<double>& radii, const std::vector<cplx>& values) {
  if (radii.size() != values.size() || radii.empty()) fail(ErrorKind::InvalidArgument, "extrapolation data mismatch");
  const std::size_t k = std::min<std::size_t>(3, radii.size());
  auto basis = [](std::size_t i, double e) { return i == 0 ? 1.0 : i == 1 ? e * std::log(e) : e; };
  // normal equations, real matrix, complex right-hand side
  std::vector<double> m(k * k, 0.0);
  std::vector<cplx> rhs(k, 0.0);
  for (std::size_t r = 0; r < radii.size(); ++r)
    for (std::size_t i = 0; i < k; ++i) {
      rhs[i] += basis(i, radii[r]) * values[r];
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] += basis(i, radii[r]) * basis(j, radii[r]);
    }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
    if (m[piv * k + c] == 0) fail(ErrorKind::Convergence, "degenerate extrapolation radii");
    for (std::size_t j = 0; j < k; ++j) std::swap(m[c * k + j], m[piv * k + j]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = m[r * k + c] / m[c * k + c];
      for (std::size_t j = 0; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
      rhs[r] -= f * rhs[c];
    }
  }
  return rhs[0] / m[0];
}

cplx residue_value(const ChainElement& r) {
  cplx total = 0.0;
  for (auto& t : r.terms()) {
    if (t.depth >= 2) {
      if (!t.wedge.empty()) fail(ErrorKind::InvalidArgument, "residue value needs a degree-1 element");
      if (t.argument_infinite || t.argument.is_zero()) continue;
      if (!t.argument.is_constant()) fail(ErrorKind::InvalidArgument, "residue value needs constant entries");
      total += static_cast<double>(t.coefficient) *
               sv_polylog(t.depth, cplx(t.argument.constant_value().to_double(), 0.0));
    } else {
      if (t.wedge.size() != 1) fail(ErrorKind::InvalidArgument, "residue value needs a degree-1 element");
      if (!t.wedge[0].is_constant()) fail(ErrorKind::InvalidArgument, "residue value needs constant entries");
      total += static_cast<double>(t.coefficient) * std::log(std::abs(t.wedge[0].constant_value().to_double()));
    }
  }
  return total;
}

Report loop_residue_check(const ChainElement& e, const Rational& a, const RegulatorConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.suite = "loop-check";
  const std::vector<std::string> vars = element_variables(e);
  if (vars.size() != 1) fail(ErrorKind::InvalidArgument, "loop check needs a univariate element");
  const Form r = r_map(e);
  if (r.degree() != 1 && !r.is_zero()) fail(ErrorKind::InvalidArgument, "loop check needs r(e) to be a 1-form");

  const ChainElement res = residue(e, Valuation::at(a));
  const cplx two_pi_i(0, 2 * std::numbers::pi);
  const cplx expected = two_pi_i * residue_value(res);
  const double scale = std::max(1.0, std::abs(expected));

  for (bool cw : {false, true}) {
    std::vector<cplx> vals;
    nlohmann::json raw = nlohmann::json::array();
    for (double eps : cfg.loop_radii) {
      const cplx v = loop_integral(r, vars[0], a, eps, cfg.loop_nodes, cw);
      vals.push_back(v);
      raw.push_back({{"radius", format_double(eps)}, {"re", format_double(v.real())}, {"im", format_double(v.imag())}});
    }
    const cplx c = extrapolate_to_zero(cfg.loop_radii, vals);
    const cplx want = cw ? -expected : expected;
    CaseResult cr;
    cr.input = e.to_string() + " at t=" + a.to_string() + (cw ? " clockwise" : " counterclockwise");
    cr.max_defect = std::abs(c - want) / scale;
    cr.tol = 1e-3;
    cr.pass = cr.max_defect < cr.tol;
    cr.details = {{"residue", res.to_string()},
                  {"expected_re", format_double(want.real())},
                  {"expected_im", format_double(want.imag())},
                  {"extrapolated_re", format_double(c.real())},
                  {"extrapolated_im", format_double(c.imag())},
                  {"defect", std::abs(expected) >= 1.0 ? "relative" : "absolute"},
                  {"nodes", cfg.loop_nodes},
                  {"loops", raw}};
    rep.add(std::move(cr));
  }
  return rep;
}

}  // namespace polyreg
