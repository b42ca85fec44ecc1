#pragma once

#include <string>
#include <vector>

#include "polyreg/chain.hpp"
#include "polyreg/form.hpp"
#include "polyreg/report.hpp"

namespace polyreg {

struct RegulatorConfig {
  double tol = 1e-6;
  int samples = 20;
  unsigned long seed = 1;
  double fd_step = 1e-5;
  std::vector<double> loop_radii{1e-2, 3e-3, 1e-3};
  int loop_nodes = 256;
  int vector_tuples = 3;
  double twist_tol = 1e-8;

  // tol > 0, radii positive and strictly decreasing, loop_nodes >= 64.
  void validate() const;
};

// r on a single term. {f}_n ⊗ g_1 ∧ ... ∧ g_m (n >= 2, m >= 0):
//   L^_n(f) · A_m{Σ_p 1/(2p+1) dlog^{2p} darg^{m-2p}}
//   + Σ_{k=1}^{n-1} Σ_{p=1}^{m} β_{k,p} L^_{n-k,k}(f) ∧ A_m{log|g_1| dlog^{p-1} darg^{m-p}}
// g_1 ∧ ... ∧ g_m:  -A_m{Σ_p 1/(2p+1) log|g_1| dlog^{2p} darg^{m-1-2p}}.
// {0}, {∞} give 0; {1} gives the constant L^_n(1).
Form r_term(const ChainTerm& t);

// Z-linear extension; weight >= 2.
Form r_map(const ChainElement& e);

// π_n(dlog f_1 ∧ ... ∧ dlog f_n) on the vectors (real part for odd n,
// i times the imaginary part for even n).
cplx holomorphic_part(const std::vector<RationalFunction>& fs, const EvalPoint& x,
                      const std::vector<std::vector<cplx>>& vectors);

// v ∈ i^{n-1} R up to tol * max(1, |v|).
bool in_twist(cplx v, int weight, double tol);

// max |d r(e) - r(δ e)| over generic points of the variables of e and random
// vector tuples. Also records max |d r(e)| and the twist test of every value.
Report chain_check(const ChainElement& e, const RegulatorConfig& cfg);

// max |d r(f_1 ∧ ... ∧ f_n) + π_n(dlog f_1 ∧ ... ∧ dlog f_n)|.
Report top_check(const std::vector<RationalFunction>& fs, const RegulatorConfig& cfg);

// Loop integral of the 1-form r(e) around t = a, extrapolated to radius 0 and
// compared with 2πi times r applied to the residue of e at a; the clockwise
// loop must give the negative.
Report loop_residue_check(const ChainElement& e, const Rational& a, const RegulatorConfig& cfg);

// Raw loop value at one radius (counterclockwise unless clockwise is set);
// nodes-point trapezoid rule.
cplx loop_integral(const Form& one_form, const std::string& variable, const Rational& a, double radius, int nodes,
                   bool clockwise = false);

// c of the fit c + b ε log ε + d ε (least squares when more than 3 radii).
cplx extrapolate_to_zero(const std::vector<double>& radii, const std::vector<cplx>& values);

// Value of r on a constant element of weight n-1 >= 1 and degree 1: Σ c L^_n(x)
// over {x}_n terms, Σ c log|x| over weight-1 wedges.
cplx residue_value(const ChainElement& r);

}  // namespace polyreg
