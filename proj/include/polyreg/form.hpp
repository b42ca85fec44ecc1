#pragma once

#include <complex>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "polyreg/rational_function.hpp"

namespace polyreg {

// Scalar factor: L^_p(f) (p >= 2) or log|g|.
struct Scalar {
  enum class Kind { Polylog, LogAbs };
  Kind kind = Kind::LogAbs;
  int p = 0;  // polylog index; 0 for log|g|
  RationalFunction f;

  static Scalar polylog(int p, const RationalFunction& f) { return {Kind::Polylog, p, f}; }
  static Scalar log_abs(const RationalFunction& g) { return {Kind::LogAbs, 0, g}; }
  std::string to_string() const;
  static int compare(const Scalar& a, const Scalar& b);
  bool operator<(const Scalar& o) const { return compare(*this, o) < 0; }
  bool operator==(const Scalar& o) const { return compare(*this, o) == 0; }
};

// 1-form generator: dlog|g| or d i arg g.
struct Generator {
  enum class Kind { DLog, DArg };
  Kind kind = Kind::DLog;
  RationalFunction g;

  static Generator dlog(const RationalFunction& g) { return {Kind::DLog, g}; }
  static Generator darg(const RationalFunction& g) { return {Kind::DArg, g}; }
  std::string to_string() const;
  // dlog before darg, then by function
  static int compare(const Generator& a, const Generator& b);
  bool operator<(const Generator& o) const { return compare(*this, o) < 0; }
  bool operator==(const Generator& o) const { return compare(*this, o) == 0; }
};

// Monomial: product of scalar powers times a wedge of generators in canonical
// order (sign absorbed into the coefficient).
struct Monomial {
  std::vector<std::pair<Scalar, int>> scalars;  // sorted, powers >= 1
  std::vector<Generator> generators;            // sorted, no repeats
  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const;
};

// Degree-homogeneous differential form at the generic point with exact
// rational coefficients. Relations between generators of different functions
// (for instance dlog|1-f| ∧ d i arg f = dlog|f| ∧ d i arg(1-f)) are not
// applied; equality up to them is decided numerically.
class Form {
 public:
  Form() = default;                  // zero form of degree 0
  explicit Form(int degree) : degree_(degree) {}
  static Form constant(const Rational& c);
  static Form scalar(const Scalar& s, int power = 1);
  static Form polylog(int p, const RationalFunction& f);  // L^_1 expands to -log|1-f|
  static Form log_abs(const RationalFunction& g, int power = 1);
  static Form dlog(const RationalFunction& g);
  static Form darg(const RationalFunction& g);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form scaled(const Rational& c) const;
  bool operator==(const Form& o) const;

  // "L2(f)·log|g|^2·dlog|f|∧darg(g)" with "(p/q)·" coefficients; stable order.
  std::string to_string() const;
  // Inverse of to_string; also accepts '*' for '·', '^' for '∧' (unless
  // followed by an exponent), alpha(f,g), L{p,q}(f) and bracketed sums.
  static Form parse(const std::string& text);

  // Every function occurring in a scalar or generator (with 1 - f for L^_p(f)).
  std::vector<RationalFunction> functions() const;

  // Internal: add coefficient * monomial, canonicalizing the monomial.
  void add_term(const Rational& c, std::vector<std::pair<Scalar, int>> scalars, std::vector<Generator> gens);

 private:
  int degree_ = 0;
  std::map<Monomial, Rational> terms_;
};

Form wedge(const Form& a, const Form& b);

// α(f, g) = -log|f| dlog|g| + log|g| dlog|f|.
Form alpha(const RationalFunction& f, const RationalFunction& g);

// L^_{p,q}(f) = L^_p(f) log^{q-1}|f| dlog|f| (p >= 2), α(1-f, f) log^{q-1}|f| (p = 1).
Form sv_pq(int p, int q, const RationalFunction& f);

// d(L^_n(f)) from the differential equations of the single-valued polylogs.
Form d_polylog(int n, const RationalFunction& f);

// Leibniz rule with d log|g| = dlog|g| and closed generators.
Form exterior_derivative(const Form& a);

// Slot pattern of a weighted alternation: an optional log|.| slot followed by
// `dlog` dlog-slots and `darg` darg-slots, m = log + dlog + darg.
struct AlternationPattern {
  bool log_slot = false;
  int dlog = 0;
  int darg = 0;
  int slots() const { return (log_slot ? 1 : 0) + dlog + darg; }
};

// A_m{pattern}(g_1, ..., g_m): sum over distinct slot assignments with the
// sign of the induced permutation (= Alt_m divided by the stabilizer order).
Form weighted_alternation(const AlternationPattern& pattern, const std::vector<RationalFunction>& g);

// Brute force (1 / |Stab|) Σ_{σ ∈ S_m} sgn(σ) pattern(g_σ(1), ..., g_σ(m)); test oracle.
Form alternation_brute_force(const AlternationPattern& pattern, const std::vector<RationalFunction>& g);

// ---- numeric evaluation ----

using cplx = std::complex<double>;

// A point of C^d with named coordinates.
struct EvalPoint {
  std::vector<std::string> variables;
  std::vector<cplx> x;
};

struct EvalOptions {
  int precision_bits = 53;
  double pole_threshold = 1e-12;
};

// Scalars through sv_polylog and log|.|; dlog|g|(v) = Re(Dg v / g),
// d i arg g(v) = i Im(Dg v / g); wedges as determinants over the vectors.
cplx evaluate(const Form& a, const EvalPoint& at, const std::vector<std::vector<cplx>>& vectors,
              const EvalOptions& opt = {});

// Alternating central-difference approximation of (da)(v_0, ..., v_k) with
// step h = step * (1 + |x|).
cplx numeric_d(const Form& a, const EvalPoint& at, const std::vector<std::vector<cplx>>& vectors,
               double step = 1e-5, const EvalOptions& opt = {});

// Rejection sampler on the box |Re|, |Im| <= radius per coordinate: every
// function must satisfy 1e-3 <= |h(x)| <= 1e3 (and so must 1 - f for the
// polylog arguments, which are included by Form::functions()).
class GenericPointSampler {
 public:
  GenericPointSampler(std::vector<std::string> variables, std::vector<RationalFunction> functions,
                      unsigned long seed, double radius = 2.0);
  EvalPoint next();
  std::vector<cplx> random_vector();

 private:
  std::vector<std::string> vars_;
  std::vector<RationalFunction> fns_;
  std::mt19937_64 rng_;
  double radius_;
  double uniform();  // [0, 1)
};

}  // namespace polyreg
