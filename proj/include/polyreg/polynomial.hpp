#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyreg/rational.hpp"

namespace polyreg {

// Sparse polynomial over Q in named variables. Variables are kept sorted and
// only those that actually occur are stored, so a polynomial with a single
// variable is univariate regardless of how it was built.
class Polynomial {
 public:
  using Monomial = std::vector<int>;  // exponents, aligned with variables()
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  static Polynomial variable(const std::string& name);
  static Polynomial from_terms(std::vector<std::string> vars, Terms terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  Rational constant_value() const;  // requires is_constant()

  int degree(const std::string& var) const;
  int total_degree() const;
  // Leading term in lex order of the sorted variables.
  const Rational& leading_coefficient() const;
  Monomial leading_monomial() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Polynomial derivative(const std::string& var) const;

  // Point given by coordinate names and values; variables missing from
  // `names` are an invalid argument.
  std::complex<double> eval(const std::vector<std::string>& names, const std::vector<std::complex<double>>& x) const;
  // Univariate (or constant) exact evaluation.
  Rational eval(const Rational& x) const;

  // Positive rational c with this / c having coprime integer coefficients.
  Rational content() const;

  // q with a = q * b, if b divides a exactly (lex-order division).
  static std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

  // Univariate only.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic

  std::string to_string() const;
  // Total order over representations (variables, then terms).
  static int compare(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<std::string> vars_;
  Terms terms_;
  void trim();
  Polynomial with_variables(const std::vector<std::string>& vars) const;
  static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b);
};

}  // namespace polyreg
