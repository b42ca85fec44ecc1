#include "polyreg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "polyreg/error.hpp"

namespace polyreg {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
  if (name.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
  Polynomial p;
  p.vars_ = {name};
  p.terms_[{1}] = Rational(1);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, Terms terms) {
  std::vector<std::size_t> order(vars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  Polynomial p;
  for (auto i : order) p.vars_.push_back(vars[i]);
  if (std::adjacent_find(p.vars_.begin(), p.vars_.end()) != p.vars_.end())
    fail(ErrorKind::InvalidArgument, "duplicate variable name");
  for (auto& [m, c] : terms) {
    if (m.size() != vars.size()) fail(ErrorKind::InvalidArgument, "monomial length mismatch");
    Monomial mm(vars.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (m[order[j]] < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
      mm[j] = m[order[j]];
    }
    p.terms_[mm] += c;
  }
  p.trim();
  return p;
}

void Polynomial::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (auto& [m, c] : terms_)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] != 0) used[j] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (std::size_t j = 0; j < vars_.size(); ++j)
    if (used[j]) nv.push_back(vars_[j]);
  Terms nt;
  for (auto& [m, c] : terms_) {
    Monomial mm;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (used[j]) mm.push_back(m[j]);
    nt[mm] += c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

std::vector<std::string> Polynomial::merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> pos;
  for (auto& v : vars_) pos.push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
  Polynomial p;
  p.vars_ = vars;
  for (auto& [m, c] : terms_) {
    Monomial mm(vars.size(), 0);
    for (std::size_t j = 0; j < m.size(); ++j) mm[pos[j]] = m[j];
    p.terms_[mm] = c;
  }
  return p;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "polynomial is not constant");
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return is_zero() ? -1 : 0;
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m[j]);
  return d;
}

int Polynomial::total_degree() const {
  if (is_zero()) return -1;
  int d = 0;
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

const Rational& Polynomial::leading_coefficient() const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

Polynomial::Monomial Polynomial::leading_monomial() const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  auto vars = Polynomial::merged(a.vars_, b.vars_);
  Polynomial p = a.with_variables(vars);
  Polynomial q = b.with_variables(vars);
  for (auto& [m, c] : q.terms_) p.terms_[m] += c;
  p.trim();
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  auto vars = Polynomial::merged(a.vars_, b.vars_);
  Polynomial p = a.with_variables(vars);
  Polynomial q = b.with_variables(vars);
  Polynomial r;
  r.vars_ = vars;
  for (auto& [m1, c1] : p.terms_)
    for (auto& [m2, c2] : q.terms_) {
      Polynomial::Monomial m(vars.size());
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = m1[j] + m2[j];
      r.terms_[m] += c1 * c2;
    }
  r.trim();
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial p = *this;
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1)), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {};
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  Polynomial p;
  p.vars_ = vars_;
  for (auto& [m, c] : terms_) {
    if (m[j] == 0) continue;
    Monomial mm = m;
    --mm[j];
    p.terms_[mm] += c * Rational(m[j]);
  }
  p.trim();
  return p;
}

std::complex<double> Polynomial::eval(const std::vector<std::string>& names,
                                      const std::vector<std::complex<double>>& x) const {
  std::vector<std::complex<double>> vals;
  for (auto& v : vars_) {
    auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) fail(ErrorKind::InvalidArgument, "no value for variable '" + v + "'");
    vals.push_back(x.at(static_cast<std::size_t>(it - names.begin())));
  }
  std::complex<double> s = 0;
  for (auto& [m, c] : terms_) {
    std::complex<double> t = c.to_double();
    for (std::size_t j = 0; j < m.size(); ++j)
      for (int e = 0; e < m[j]; ++e) t *= vals[j];
    s += t;
  }
  return s;
}

Rational Polynomial::eval(const Rational& x) const {
  if (vars_.size() > 1) fail(ErrorKind::InvalidArgument, "exact evaluation needs a univariate polynomial");
  Rational s;
  for (auto& [m, c] : terms_) s += c * (m.empty() ? Rational(1) : x.pow(m[0]));
  return s;
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(1);
  Integer g = 0, l = 1;
  for (auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return Rational(g, l);
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  auto vars = merged(a.vars_, b.vars_);
  Polynomial r = a.with_variables(vars);
  Polynomial d = b.with_variables(vars);
  Polynomial q;
  q.vars_ = vars;
  const Monomial lm = d.terms_.rbegin()->first;
  const Rational lc = d.terms_.rbegin()->second;
  while (!r.is_zero()) {
    r = r.with_variables(vars);
    const Monomial rm = r.terms_.rbegin()->first;
    Monomial qm(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      qm[j] = rm[j] - lm[j];
      if (qm[j] < 0) return std::nullopt;
    }
    Polynomial t;
    t.vars_ = vars;
    t.terms_[qm] = r.terms_.rbegin()->second / lc;
    q.terms_[qm] += t.terms_[qm];
    r = r - t * d;
  }
  q.trim();
  return q;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  auto vars = merged(a.vars_, b.vars_);
  if (vars.size() > 1) fail(ErrorKind::InvalidArgument, "divmod needs univariate polynomials");
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  q = Polynomial();
  r = a;
  const std::string var = vars.empty() ? std::string() : vars[0];
  const int db = b.is_constant() ? 0 : b.degree(var);
  const Rational lc = b.leading_coefficient();
  while (!r.is_zero()) {
    const int dr = r.is_constant() ? 0 : r.degree(var);
    if (dr < db) break;
    Polynomial t = Polynomial(r.leading_coefficient() / lc);
    if (dr > db) t = t * variable(var).pow(static_cast<unsigned>(dr - db));
    q = q + t;
    r = r - t * b;
  }
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(x.leading_coefficient().inverse());
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[j];
      if (m[j] > 1) mono += "^" + std::to_string(m[j]);
    }
    Rational a = c.abs();
    if (c.sign() < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (mono.empty())
      os << a.to_string();
    else if (a.is_one())
      os << mono;
    else
      os << a.to_string() << "*" << mono;
    first = false;
  }
  return os.str();
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
  auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia == a.terms_.rend() && ib == b.terms_.rend()) return 0;
  return ia == a.terms_.rend() ? -1 : 1;
}

}  // namespace polyreg
