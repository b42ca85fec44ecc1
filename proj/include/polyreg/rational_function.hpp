#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polyreg/polynomial.hpp"

namespace polyreg {

// A place of Q(t): a rational point t = a (uniformizer t - a) or infinity
// (uniformizer 1/t).
struct Valuation {
  enum class Kind { Finite, Infinity };
  Kind kind = Kind::Finite;
  Rational point;

  static Valuation at(const Rational& a) { return {Kind::Finite, a}; }
  static Valuation infinity() { return {Kind::Infinity, Rational(0)}; }
  bool is_infinity() const { return kind == Kind::Infinity; }
  // "a" or "inf"; parse accepts the same plus "∞".
  std::string to_string() const;
  static Valuation parse(const std::string& text);
};

// Element of Q(x_1, ..., x_d).
//
// Univariate functions are stored in lowest terms with a monic denominator,
// so equal functions have equal representations. Multivariate functions are
// only content-normalized (denominator primitive with integer coefficients
// and positive leading coefficient), with exact cancellation when one side
// divides the other; use equals() for mathematical equality.
class RationalFunction {
 public:
  RationalFunction() = default;  // zero
  RationalFunction(const Rational& c);  // NOLINT
  RationalFunction(const Polynomial& p);  // NOLINT
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction variable(const std::string& name) { return Polynomial::variable(name); }
  // Text syntax, e.g. "(t^2+1)/(t-1)" or "(x*y - 1)/(x + y)".
  static RationalFunction parse(const std::string& text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::vector<std::string> variables() const;
  bool is_univariate() const { return variables().size() <= 1; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return is_constant() && constant_value().is_one(); }
  Rational constant_value() const;  // requires is_constant()

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction one_minus() const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  // Representation equality (canonical in one variable).
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  // Mathematical equality by cross-multiplication.
  bool equals(const RationalFunction& o) const;
  static int compare(const RationalFunction& a, const RationalFunction& b);

  RationalFunction partial(const std::string& var) const;

  // Throws Error(Pole) when |den(x)| <= pole_threshold * (1 + |num(x)|).
  std::complex<double> eval(const std::vector<std::string>& names, const std::vector<std::complex<double>>& x,
                            double pole_threshold = 1e-12) const;
  // sum_j (d f / d x_j)(x) v_j from the exact partial derivatives.
  std::complex<double> dir_derivative(const std::vector<std::string>& names,
                                      const std::vector<std::complex<double>>& x,
                                      const std::vector<std::complex<double>>& v,
                                      double pole_threshold = 1e-12) const;
  // f(x) and Df(x; v) in one pass.
  void eval_with_derivative(const std::vector<std::string>& names, const std::vector<std::complex<double>>& x,
                            const std::vector<std::complex<double>>& v, std::complex<double>& value,
                            std::complex<double>& derivative, double pole_threshold = 1e-12) const;

  // Univariate valuation data.
  int ord_at(const Valuation& v) const;
  Rational unit_part(const Valuation& v) const;

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_{Rational(1)};
  void normalize();
};

}  // namespace polyreg
