#include "polyreg/rational_function.hpp"

#include <algorithm>

#include "polyreg/error.hpp"

namespace polyreg {

std::string Valuation::to_string() const { return is_infinity() ? "inf" : point.to_string(); }

Valuation Valuation::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "inf" || s == "infinity" || s == "∞") return infinity();
  return at(Rational::parse(s));
}

RationalFunction::RationalFunction(const Rational& c) : num_(c) {}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  std::vector<std::string> vars;
  std::set_union(num_.variables().begin(), num_.variables().end(), den_.variables().begin(),
                 den_.variables().end(), std::back_inserter(vars));
  if (vars.size() <= 1) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
      Polynomial q, r;
      Polynomial::divmod(num_, g, q, r);
      num_ = q;
      Polynomial::divmod(den_, g, q, r);
      den_ = q;
    }
    Rational lc = den_.leading_coefficient();
    num_ = num_.scaled(lc.inverse());
    den_ = den_.scaled(lc.inverse());
    return;
  }
  if (auto q = Polynomial::exact_divide(num_, den_)) {
    num_ = *q;
    den_ = Polynomial(Rational(1));
    return;
  }
  if (auto q = Polynomial::exact_divide(den_, num_)) {
    num_ = Polynomial(Rational(1));
    den_ = *q;
  }
  // cancel the common monomial factor
  std::vector<std::string> nv = vars;
  auto min_exponents = [&](const Polynomial& p) {
    std::vector<int> mins(nv.size(), 1 << 30);
    for (auto& [m, c] : p.terms()) {
      std::vector<int> full(nv.size(), 0);
      for (std::size_t j = 0; j < m.size(); ++j) {
        auto pos = std::find(nv.begin(), nv.end(), p.variables()[j]) - nv.begin();
        full[static_cast<std::size_t>(pos)] = m[j];
      }
      for (std::size_t j = 0; j < nv.size(); ++j) mins[j] = std::min(mins[j], full[j]);
    }
    return mins;
  };
  auto a = min_exponents(num_), b = min_exponents(den_);
  Polynomial::Monomial common(nv.size());
  bool any = false;
  for (std::size_t j = 0; j < nv.size(); ++j) {
    common[j] = std::min(a[j], b[j]);
    any = any || common[j] > 0;
  }
  if (any) {
    Polynomial mono = Polynomial::from_terms(nv, {{common, Rational(1)}});
    num_ = *Polynomial::exact_divide(num_, mono);
    den_ = *Polynomial::exact_divide(den_, mono);
  }
  Rational cd = den_.content();
  if (den_.leading_coefficient().sign() < 0) cd = -cd;
  num_ = num_.scaled(cd.inverse());
  den_ = den_.scaled(cd.inverse());
}

std::vector<std::string> RationalFunction::variables() const {
  std::vector<std::string> vars;
  std::set_union(num_.variables().begin(), num_.variables().end(), den_.variables().begin(),
                 den_.variables().end(), std::back_inserter(vars));
  return vars;
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::one_minus() const { return RationalFunction(Rational(1)) - *this; }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of the zero function");
  return {den_, num_};
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
}

bool RationalFunction::equals(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

int RationalFunction::compare(const RationalFunction& a, const RationalFunction& b) {
  int c = Polynomial::compare(a.num_, b.num_);
  return c != 0 ? c : Polynomial::compare(a.den_, b.den_);
}

RationalFunction RationalFunction::partial(const std::string& var) const {
  Polynomial dn = num_.derivative(var), dd = den_.derivative(var);
  return {dn * den_ - num_ * dd, den_ * den_};
}

std::complex<double> RationalFunction::eval(const std::vector<std::string>& names,
                                            const std::vector<std::complex<double>>& x,
                                            double pole_threshold) const {
  const auto n = num_.eval(names, x);
  const auto d = den_.eval(names, x);
  if (std::abs(d) <= pole_threshold * (1.0 + std::abs(n))) fail(ErrorKind::Pole, "evaluation at a pole of " + to_string());
  return n / d;
}

void RationalFunction::eval_with_derivative(const std::vector<std::string>& names,
                                            const std::vector<std::complex<double>>& x,
                                            const std::vector<std::complex<double>>& v, std::complex<double>& value,
                                            std::complex<double>& derivative, double pole_threshold) const {
  if (v.size() != names.size()) fail(ErrorKind::InvalidArgument, "tangent vector length does not match the point");
  const auto n = num_.eval(names, x);
  const auto d = den_.eval(names, x);
  if (std::abs(d) <= pole_threshold * (1.0 + std::abs(n))) fail(ErrorKind::Pole, "evaluation at a pole of " + to_string());
  std::complex<double> dn = 0, dd = 0;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (v[j] == 0.0) continue;
    dn += num_.derivative(names[j]).eval(names, x) * v[j];
    dd += den_.derivative(names[j]).eval(names, x) * v[j];
  }
  value = n / d;
  derivative = (dn * d - n * dd) / (d * d);
}

std::complex<double> RationalFunction::dir_derivative(const std::vector<std::string>& names,
                                                      const std::vector<std::complex<double>>& x,
                                                      const std::vector<std::complex<double>>& v,
                                                      double pole_threshold) const {
  std::complex<double> value, der;
  eval_with_derivative(names, x, v, value, der, pole_threshold);
  return der;
}

namespace {

const std::string& single_variable(const RationalFunction& f, std::string& storage) {
  auto vars = f.variables();
  if (vars.size() > 1) fail(ErrorKind::InvalidArgument, "valuations need a univariate function");
  storage = vars.empty() ? std::string() : vars[0];
  return storage;
}

// Multiplicity of (t - a) in p and the cofactor.
int strip_root(Polynomial& p, const std::string& var, const Rational& a) {
  if (var.empty()) return 0;
  const Polynomial lin = Polynomial::variable(var) - Polynomial(a);
  int e = 0;
  while (!p.is_zero()) {
    Polynomial q, r;
    Polynomial::divmod(p, lin, q, r);
    if (!r.is_zero()) break;
    p = q;
    ++e;
  }
  return e;
}

}  // namespace

int RationalFunction::ord_at(const Valuation& v) const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "valuation of the zero function");
  std::string storage;
  const std::string& var = single_variable(*this, storage);
  if (v.is_infinity()) {
    if (var.empty()) return 0;
    return den_.degree(var) - num_.degree(var);
  }
  Polynomial n = num_, d = den_;
  return strip_root(n, var, v.point) - strip_root(d, var, v.point);
}

Rational RationalFunction::unit_part(const Valuation& v) const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "unit part of the zero function");
  std::string storage;
  const std::string& var = single_variable(*this, storage);
  if (v.is_infinity()) return num_.leading_coefficient() / den_.leading_coefficient();
  Polynomial n = num_, d = den_;
  strip_root(n, var, v.point);
  strip_root(d, var, v.point);
  Rational u = n.eval(v.point) / d.eval(v.point);
  if (u.is_zero()) fail(ErrorKind::Internal, "unit part vanished");
  return u;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  // a bare power of one variable needs no brackets as a denominator
  const auto& [m, c] = *den_.terms().begin();
  const bool bare = den_.terms().size() == 1 && c.is_one() &&
                    std::count_if(m.begin(), m.end(), [](int e) { return e > 0; }) == 1;
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace polyreg
