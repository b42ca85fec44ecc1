#include "polyreg/form.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "polyreg/bernoulli.hpp"
#include "polyreg/error.hpp"

namespace polyreg {

std::string Scalar::to_string() const {
  if (kind == Kind::LogAbs) return "log|" + f.to_string() + "|";
  return "L" + std::to_string(p) + "(" + f.to_string() + ")";
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.kind != b.kind) return a.kind == Kind::Polylog ? -1 : 1;
  if (a.p != b.p) return a.p > b.p ? -1 : 1;
  return RationalFunction::compare(a.f, b.f);
}

std::string Generator::to_string() const {
  return kind == Kind::DLog ? "dlog|" + g.to_string() + "|" : "darg(" + g.to_string() + ")";
}

int Generator::compare(const Generator& a, const Generator& b) {
  if (a.kind != b.kind) return a.kind == Kind::DLog ? -1 : 1;
  return RationalFunction::compare(a.g, b.g);
}

bool Monomial::operator<(const Monomial& o) const {
  const std::size_t n = std::min(scalars.size(), o.scalars.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = Scalar::compare(scalars[i].first, o.scalars[i].first);
    if (c != 0) return c < 0;
    if (scalars[i].second != o.scalars[i].second) return scalars[i].second > o.scalars[i].second;
  }
  if (scalars.size() != o.scalars.size()) return scalars.size() > o.scalars.size();
  if (generators.size() != o.generators.size()) return generators.size() < o.generators.size();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    int c = Generator::compare(generators[i], o.generators[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool Monomial::operator==(const Monomial& o) const { return !(*this < o) && !(o < *this); }

void Form::add_term(const Rational& c, std::vector<std::pair<Scalar, int>> scalars, std::vector<Generator> gens) {
  if (c.is_zero()) return;
  if (!terms_.empty() && static_cast<int>(gens.size()) != degree_)
    fail(ErrorKind::Internal, "adding a term of the wrong degree to a form");
  degree_ = static_cast<int>(gens.size());
  Rational coef = c;
  // scalars: vanishing factors, merge powers
  std::sort(scalars.begin(), scalars.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Scalar, int>> merged;
  for (auto& [s, k] : scalars) {
    if (k <= 0) fail(ErrorKind::Internal, "non-positive scalar power");
    if (s.kind == Scalar::Kind::Polylog) {
      if (s.p < 2) fail(ErrorKind::Internal, "L^_1 must be expanded before building a term");
      if (s.f.is_zero()) return;
    } else {
      if (s.f.is_zero()) fail(ErrorKind::Domain, "log|0| in a form");
      if (s.f.is_constant() && s.f.constant_value().abs().is_one()) return;
    }
    if (!merged.empty() && merged.back().first == s)
      merged.back().second += k;
    else
      merged.emplace_back(s, k);
  }
  // generators: constants are closed and zero, sort with sign
  for (auto& g : gens) {
    if (g.g.is_zero()) fail(ErrorKind::Domain, "dlog or darg of 0 in a form");
    if (g.g.is_constant()) return;
  }
  for (std::size_t i = 1; i < gens.size(); ++i)
    for (std::size_t j = i; j > 0; --j) {
      int cmp = Generator::compare(gens[j - 1], gens[j]);
      if (cmp == 0) return;
      if (cmp < 0) break;
      std::swap(gens[j - 1], gens[j]);
      coef = -coef;
    }
  Monomial m{std::move(merged), std::move(gens)};
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), coef);
  } else {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::constant(const Rational& c) {
  Form f;
  f.add_term(c, {}, {});
  return f;
}

Form Form::scalar(const Scalar& s, int power) {
  if (s.kind == Scalar::Kind::Polylog && s.p == 1) {
    Form base = log_abs(s.f.one_minus()).scaled(Rational(-1));
    Form r = constant(Rational(1));
    for (int i = 0; i < power; ++i) r = wedge(r, base);
    return r;
  }
  Form f;
  f.add_term(Rational(1), {{s, power}}, {});
  return f;
}

Form Form::polylog(int p, const RationalFunction& f) {
  if (p < 1) fail(ErrorKind::InvalidArgument, "L^_p needs p >= 1");
  return scalar(Scalar::polylog(p, f));
}

Form Form::log_abs(const RationalFunction& g, int power) { return scalar(Scalar::log_abs(g), power); }

Form Form::dlog(const RationalFunction& g) {
  Form f(1);
  f.add_term(Rational(1), {}, {Generator::dlog(g)});
  return f;
}

Form Form::darg(const RationalFunction& g) {
  Form f(1);
  f.add_term(Rational(1), {}, {Generator::darg(g)});
  return f;
}

Form Form::operator+(const Form& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (degree_ != o.degree_) fail(ErrorKind::InvalidArgument, "adding forms of different degrees");
  Form r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(c, m.scalars, m.generators);
  return r;
}

Form Form::operator-() const { return scaled(Rational(-1)); }
Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::scaled(const Rational& c) const {
  Form r(degree_);
  if (c.is_zero()) return r;
  for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool Form::operator==(const Form& o) const {
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && terms_ == o.terms_;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (c.sign() < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    std::vector<std::string> parts;
    for (auto& [s, k] : m.scalars) parts.push_back(s.to_string() + (k > 1 ? "^" + std::to_string(k) : ""));
    std::string w;
    for (std::size_t i = 0; i < m.generators.size(); ++i) w += (i ? "∧" : "") + m.generators[i].to_string();
    if (!w.empty()) parts.push_back(w);
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "·" : "") + parts[i];
    if (body.empty())
      os << a.to_string();
    else if (a.is_one())
      os << body;
    else if (a.is_integer())
      os << a.to_string() << "·" << body;
    else
      os << "(" << a.to_string() << ")·" << body;
    first = false;
  }
  return os.str();
}

std::vector<RationalFunction> Form::functions() const {
  std::vector<RationalFunction> out;
  auto push = [&out](const RationalFunction& f) {
    if (f.is_constant()) return;
    for (auto& g : out)
      if (g == f) return;
    out.push_back(f);
  };
  for (auto& [m, c] : terms_) {
    for (auto& [s, k] : m.scalars) {
      push(s.f);
      if (s.kind == Scalar::Kind::Polylog) push(s.f.one_minus());
    }
    for (auto& g : m.generators) push(g.g);
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form r(a.degree() + b.degree());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      auto scalars = ma.scalars;
      scalars.insert(scalars.end(), mb.scalars.begin(), mb.scalars.end());
      auto gens = ma.generators;
      gens.insert(gens.end(), mb.generators.begin(), mb.generators.end());
      r.add_term(ca * cb, std::move(scalars), std::move(gens));
    }
  return r;
}

Form alpha(const RationalFunction& f, const RationalFunction& g) {
  return wedge(Form::log_abs(g), Form::dlog(f)) - wedge(Form::log_abs(f), Form::dlog(g));
}

Form sv_pq(int p, int q, const RationalFunction& f) {
  if (p < 1 || q < 1) fail(ErrorKind::InvalidArgument, "L^_{p,q} needs p, q >= 1");
  Form logs = q > 1 ? Form::log_abs(f, q - 1) : Form::constant(Rational(1));
  if (p == 1) return wedge(logs, alpha(f.one_minus(), f));
  return wedge(wedge(Form::polylog(p, f), logs), Form::dlog(f));
}

Form d_polylog(int n, const RationalFunction& f) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "d L^_n needs n >= 1");
  const RationalFunction g = f.one_minus();
  if (f.is_constant()) return Form(1);
  if (n == 1) return -Form::dlog(g);
  if (n == 2)
    return wedge(Form::log_abs(f), Form::darg(g)) - wedge(Form::log_abs(g), Form::darg(f));
  Form r = wedge(Form::polylog(n - 1, f), Form::darg(f));
  const BetaTable& bt = default_beta_table();
  for (int k = 2; k <= n - 1; ++k) {
    const Rational& b = bt.beta(k);
    if (b.is_zero()) continue;
    r = r - sv_pq(n - k, k, f).scaled(b);
  }
  return r;
}

Form exterior_derivative(const Form& a) {
  Form r(a.degree() + 1);
  for (auto& [m, c] : a.terms()) {
    Form rest_gens(m.generators.size());
    rest_gens.add_term(Rational(1), {}, m.generators);
    for (std::size_t i = 0; i < m.scalars.size(); ++i) {
      const auto& [s, k] = m.scalars[i];
      std::vector<std::pair<Scalar, int>> others;
      for (std::size_t j = 0; j < m.scalars.size(); ++j)
        if (j != i) others.push_back(m.scalars[j]);
      if (k > 1) others.emplace_back(s, k - 1);
      Form coeff(0);
      coeff.add_term(c * Rational(k), others, {});
      Form ds = s.kind == Scalar::Kind::LogAbs ? Form::dlog(s.f) : d_polylog(s.p, s.f);
      r = r + wedge(wedge(coeff, ds), rest_gens);
    }
  }
  return r;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void add_pattern_term(Form& out, const AlternationPattern& pat, const std::vector<RationalFunction>& g,
                      const std::vector<int>& order, const Rational& c) {
  std::size_t pos = 0;
  std::vector<std::pair<Scalar, int>> scalars;
  std::vector<Generator> gens;
  if (pat.log_slot) scalars.emplace_back(Scalar::log_abs(g[static_cast<std::size_t>(order[pos++])]), 1);
  for (int i = 0; i < pat.dlog; ++i) gens.push_back(Generator::dlog(g[static_cast<std::size_t>(order[pos++])]));
  for (int i = 0; i < pat.darg; ++i) gens.push_back(Generator::darg(g[static_cast<std::size_t>(order[pos++])]));
  for (auto& [s, k] : scalars)
    if (s.f.is_zero()) fail(ErrorKind::Domain, "log|0| in an alternation");
  out.add_term(c, std::move(scalars), std::move(gens));
}

void check_pattern(const AlternationPattern& pattern, const std::vector<RationalFunction>& g) {
  if (pattern.dlog < 0 || pattern.darg < 0) fail(ErrorKind::InvalidArgument, "negative slot count");
  if (pattern.slots() != static_cast<int>(g.size()))
    fail(ErrorKind::InvalidArgument, "alternation pattern has " + std::to_string(pattern.slots()) + " slots for " +
                                         std::to_string(g.size()) + " functions");
}

}  // namespace

Form weighted_alternation(const AlternationPattern& pattern, const std::vector<RationalFunction>& g) {
  check_pattern(pattern, g);
  const int m = static_cast<int>(g.size());
  Form out(pattern.dlog + pattern.darg);
  std::vector<int> logs;
  if (pattern.log_slot)
    for (int l = 0; l < m; ++l) logs.push_back(l);
  else
    logs.push_back(-1);
  for (int l : logs) {
    std::vector<int> rest;
    for (int i = 0; i < m; ++i)
      if (i != l) rest.push_back(i);
    // subsets of `rest` of size pattern.dlog via a selection mask
    std::vector<bool> mask(rest.size(), false);
    std::fill(mask.begin(), mask.begin() + pattern.dlog, true);
    do {
      std::vector<int> order;
      if (l >= 0) order.push_back(l);
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (mask[i]) order.push_back(rest[i]);
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (!mask[i]) order.push_back(rest[i]);
      add_pattern_term(out, pattern, g, order, Rational(permutation_sign(order)));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

Form alternation_brute_force(const AlternationPattern& pattern, const std::vector<RationalFunction>& g) {
  check_pattern(pattern, g);
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  const Rational weight =
      Rational(1) / Rational(Integer(factorial(static_cast<unsigned>(pattern.dlog)) * factorial(static_cast<unsigned>(pattern.darg))));
  Form out(pattern.dlog + pattern.darg);
  do {
    add_pattern_term(out, pattern, g, perm, weight * Rational(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace polyreg
