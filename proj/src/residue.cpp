#include <random>
#include <set>

#include "polyreg/chain.hpp"
#include "polyreg/error.hpp"

namespace polyreg {

namespace {

// θ with the uniformizer slot read first (the library convention) or last.
ChainElement theta_impl(const std::vector<RationalFunction>& wedge, const Valuation& v, bool uniformizer_last) {
  const int q = static_cast<int>(wedge.size());
  if (q == 0) fail(ErrorKind::InvalidArgument, "θ of an empty wedge");
  std::vector<int> ord(static_cast<std::size_t>(q));
  std::vector<RationalFunction> unit(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    ord[i] = wedge[i].ord_at(v);
    unit[i] = RationalFunction(wedge[i].unit_part(v));
  }
  std::vector<ChainTerm> terms;
  for (int i = 0; i < q; ++i) {
    if (ord[i] == 0) continue;
    ChainTerm t;
    const int sign = uniformizer_last ? ((q - 1 - i) % 2 == 0 ? 1 : -1) : (i % 2 == 0 ? 1 : -1);
    t.coefficient = sign * ord[i];
    for (int j = 0; j < q; ++j)
      if (j != i) t.wedge.push_back(unit[j]);
    if (t.wedge.empty()) continue;  // Λ^0 is handled by the callers
    terms.push_back(std::move(t));
  }
  return {q - 1, q - 1, std::move(terms)};
}

ChainElement residue_impl(const ChainElement& e, const Valuation& v, bool uniformizer_last) {
  const int w = e.weight() - 1;
  const int d = e.degree() - 1;
  if (e.weight() < 2) fail(ErrorKind::InvalidArgument, "residue needs weight >= 2");
  std::vector<ChainTerm> out;
  for (const auto& t : e.terms()) {
    if (t.wedge.empty()) continue;  // degree-one elements map to zero
    for (auto& g : t.wedge)
      if (!g.is_univariate()) fail(ErrorKind::InvalidArgument, "residue needs univariate functions");
    ChainTerm head;
    head.depth = t.depth;
    if (t.depth > 0) {
      if (t.argument_infinite) {
        head.argument_infinite = true;
      } else if (t.argument.is_zero()) {
        head.argument = t.argument;
      } else {
        if (!t.argument.is_univariate()) fail(ErrorKind::InvalidArgument, "residue needs univariate functions");
        if (t.argument.ord_at(v) != 0) continue;  // s_v kills non-units
        head.argument = RationalFunction(t.argument.unit_part(v));
      }
    }
    if (t.wedge.size() == 1) {
      // θ(g) = ord_v(g) in Λ^0; only possible in front of a symbol {f}_p
      if (t.depth == 0) fail(ErrorKind::InvalidArgument, "residue of a weight-one wedge");
      const int o = t.wedge[0].ord_at(v);
      if (o == 0) continue;
      head.coefficient = t.coefficient * o;
      out.push_back(head);
      continue;
    }
    ChainElement th = theta_impl(t.wedge, v, uniformizer_last);
    for (const auto& u : th.terms()) {
      ChainTerm n = head;
      n.coefficient = t.coefficient * u.coefficient;
      n.wedge = u.wedge;
      out.push_back(std::move(n));
    }
  }
  return {w, d, std::move(out)};
}

// Prime factorization of |x| as (prime, exponent) pairs.
std::vector<std::pair<std::string, Integer>> factor(const Rational& x) {
  std::map<std::string, Integer> out;
  auto run = [&](Integer n, int sign) {
    n = abs(n);
    for (Integer p = 2; p * p <= n; ++p) {
      if (p > 1000000) break;
      while (n % p == 0) {
        out[p.get_str()] += sign;
        n /= p;
      }
    }
    if (n > 1) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        fail(ErrorKind::Unsupported, "cannot factor " + n.get_str() + " for the Q* normal form");
      out[n.get_str()] += sign;
    }
  };
  run(x.numerator(), 1);
  run(x.denominator(), -1);
  std::vector<std::pair<std::string, Integer>> v;
  for (auto& [p, e] : out)
    if (e != 0) v.emplace_back(p, e);
  return v;
}

// Primes compare numerically; keys are decimal strings.
bool prime_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

ChainElement theta(const std::vector<RationalFunction>& wedge, const Valuation& v) {
  if (wedge.size() < 2) fail(ErrorKind::InvalidArgument, "θ of a single entry is the integer ord_v; use ord_at");
  for (auto& g : wedge)
    if (!g.is_univariate()) fail(ErrorKind::InvalidArgument, "θ needs univariate functions");
  return theta_impl(wedge, v, false);
}

ChainElement residue(const ChainElement& e, const Valuation& v) { return residue_impl(e, v, false); }

QChain QChain::from(const ChainElement& e) {
  QChain out;
  for (const auto& t : e.terms()) {
    std::string arg;
    if (t.depth > 0) {
      if (t.special_argument()) continue;
      if (!t.argument.is_constant()) fail(ErrorKind::InvalidArgument, "Q normal form needs constant entries");
      arg = t.argument.constant_value().to_string();
    }
    // multilinear expansion over the prime basis
    std::map<std::vector<std::string>, Rational> acc{{{}, Rational(t.coefficient)}};
    for (const auto& g : t.wedge) {
      if (!g.is_constant()) fail(ErrorKind::InvalidArgument, "Q normal form needs constant entries");
      const auto fac = factor(g.constant_value());
      std::map<std::vector<std::string>, Rational> next;
      for (const auto& [basis, c] : acc)
        for (const auto& [p, ex] : fac) {
          if (std::find(basis.begin(), basis.end(), p) != basis.end()) continue;
          std::vector<std::string> nb = basis;
          auto pos = std::upper_bound(nb.begin(), nb.end(), p, prime_less);
          const long after = nb.end() - pos;  // p moves past these to reach its slot
          nb.insert(pos, p);
          Rational term = c * Rational(ex);
          if (after % 2 == 1) term = -term;
          next[nb] += term;
        }
      acc.clear();
      for (auto& [b, c] : next)
        if (!c.is_zero()) acc[b] = c;
    }
    for (auto& [b, c] : acc) {
      Rational& slot = out.c_[{t.depth, arg, b}];
      slot += c;
      if (slot.is_zero()) out.c_.erase({t.depth, arg, b});
    }
  }
  return out;
}

QChain QChain::scaled(const Rational& s) const {
  QChain out;
  if (s.is_zero()) return out;
  for (auto& [k, c] : c_) out.c_[k] = c * s;
  return out;
}

std::string QChain::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [k, c] : c_) {
    const auto& [depth, arg, primes] = k;
    s += first ? "" : " + ";
    s += "(" + c.to_string() + ")";
    if (depth > 0) s += "{" + arg + "}_" + std::to_string(depth);
    for (std::size_t i = 0; i < primes.size(); ++i)
      s += std::string(i == 0 && depth > 0 ? " ⊗ " : (i == 0 ? " " : " ∧ ")) + primes[i];
    first = false;
  }
  return s;
}

namespace {

// Roots at 0 and 1 only with units_only unset; those arguments reduce to a
// unit at every place and keep the residue informative.
RationalFunction random_function(std::mt19937_64& rng, bool units_only = false) {
  static const int roots[] = {-2, -1, 2, 3, 0, 1};
  static const Rational scalars[] = {Rational(1), Rational(-1), Rational(2), Rational(3), Rational(1, 2),
                                     Rational(-2, 3), Rational(5)};
  std::uniform_int_distribution<int> nfac(1, 3), pick_root(0, units_only ? 3 : 5), pick_exp(-2, 2),
      pick_scalar(0, 6);
  RationalFunction f(scalars[pick_scalar(rng)]);
  const RationalFunction t = RationalFunction::variable("t");
  const int k = nfac(rng);
  for (int i = 0; i < k; ++i) {
    int e = pick_exp(rng);
    if (e == 0) e = 1;
    f = f * (t - RationalFunction(Rational(roots[pick_root(rng)]))).pow(e);
  }
  if (f.is_constant()) f = f * t;
  return f;
}

ChainElement random_element(int weight, std::mt19937_64& rng) {
  // p = weight is left out: ∂ and δ∂ of {f}_n both vanish identically
  std::uniform_int_distribution<int> pick_p(2, weight - 1), nterms(1, 3), coef(-3, 3);
  const int p = pick_p(rng);
  std::vector<ChainTerm> terms;
  const int k = nterms(rng);
  std::uniform_int_distribution<int> special(0, 9);
  for (int i = 0; i < k; ++i) {
    ChainTerm t;
    t.depth = p;
    t.coefficient = coef(rng);
    if (t.coefficient == 0) t.coefficient = 1;
    // now and then an argument reducing to 1 or to a non-unit at the places
    const int s = special(rng);
    const RationalFunction tt = RationalFunction::variable("t");
    if (s == 0)
      t.argument = tt + RationalFunction(1);
    else if (s == 1)
      t.argument = tt;
    else
      t.argument = random_function(rng, s < 8);
    for (int j = 0; j < weight - p; ++j) t.wedge.push_back(random_function(rng));
    if (canonicalize_wedge(t.wedge) == 0) t.wedge.back() = t.wedge.back() * RationalFunction(7);
    terms.push_back(std::move(t));
  }
  return {weight, weight - p + 1, std::move(terms)};
}

struct SignTally {
  int plus = 0, minus = 0, uninformative = 0, mismatched = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
};

// compares ∂δ e with δ∂ e, returns +1, -1, 0 (both sides zero) or 2 (neither sign)
int compare_sides(const ChainElement& e, const Valuation& v, bool uniformizer_last, std::string& lhs_s,
                  std::string& rhs_s) {
  ChainElement lhs = residue_impl(delta(e), v, uniformizer_last);
  ChainElement r = residue_impl(e, v, uniformizer_last);
  ChainElement rhs = r.degree() < r.weight() && r.weight() >= 1 ? delta(r) : ChainElement(r.weight(), r.degree() + 1, {});
  QChain a = QChain::from(lhs), b = QChain::from(rhs);
  lhs_s = a.to_string();
  rhs_s = b.to_string();
  if (a.is_zero() && b.is_zero()) return 0;
  if (a == b) return 1;
  if (a == b.scaled(Rational(-1))) return -1;
  return 2;
}

}  // namespace

Report residue_chain_check(int weight, int samples, unsigned long seed) {
  if (weight < 3) fail(ErrorKind::InvalidArgument, "residue_chain_check needs weight >= 3");
  if (samples < 1) fail(ErrorKind::InvalidArgument, "residue_chain_check needs samples >= 1");
  std::mt19937_64 rng(seed);
  const std::vector<Valuation> places = {Valuation::at(Rational(0)), Valuation::at(Rational(1)), Valuation::infinity()};
  std::vector<ChainElement> elements;
  for (int i = 0; i < samples; ++i) elements.push_back(random_element(weight, rng));
  Report r;
  r.suite = "residue-morphism";
  std::map<std::string, std::pair<int, int>> depth_signs;
  SignTally all, alt;
  std::map<std::string, SignTally> per_place;
  for (const auto& e : elements)
    for (const auto& v : places) {
      std::string ls, rs, ls2, rs2;
      const int s = compare_sides(e, v, false, ls, rs);
      const int s2 = compare_sides(e, v, true, ls2, rs2);
      auto& pp = per_place[v.to_string()];
      for (SignTally* tally : {&all, &pp}) {
        if (s == 1) ++tally->plus;
        if (s == -1) ++tally->minus;
        if (s == 0) ++tally->uninformative;
        if (s == 2) ++tally->mismatched;
      }
      if (s2 == 1) ++alt.plus;
      if (s2 == -1) ++alt.minus;
      if (s2 == 2) ++alt.mismatched;
      const std::string depth_key = "depth " + std::to_string(e.terms().empty() ? 0 : e.terms().front().depth);
      if (s == 1) ++depth_signs[depth_key].first;
      if (s == -1) ++depth_signs[depth_key].second;
      const bool odd = s == 2 || (s == 1 && all.minus > 0) || (s == -1 && all.plus > 0);
      if (odd && all.counterexamples.size() < 5)
        all.counterexamples.push_back({{"element", e.to_string()}, {"place", v.to_string()}, {"d_delta", ls},
                                       {"delta_d", rs}, {"sign", s == 2 ? "none" : (s == 1 ? "+1" : "-1")}});
    }
  const std::string tag = "weight " + std::to_string(weight) + ", " + std::to_string(samples) +
                          " elements x places {0, 1, inf}";
  for (auto& [place, t] : per_place) {
    const bool ok = t.mismatched == 0 && (t.plus == 0 || t.minus == 0);
    r.add({"d_v delta = eps delta d_v at t=" + place + ", " + tag, ok ? 0.0 : 1.0, 0.0, ok,
           {{"plus", t.plus}, {"minus", t.minus}, {"zero_both_sides", t.uninformative}, {"neither", t.mismatched}}});
  }
  nlohmann::json by_depth = nlohmann::json::object();
  for (auto& [k, pm] : depth_signs) by_depth[k] = {{"plus", pm.first}, {"minus", pm.second}};
  const bool consistent = all.mismatched == 0 && (all.plus == 0 || all.minus == 0) && (all.plus + all.minus) > 0;
  const int eps = all.minus > 0 && all.plus == 0 ? -1 : 1;
  nlohmann::json details = {{"plus", all.plus}, {"minus", all.minus}, {"zero_both_sides", all.uninformative},
                            {"neither", all.mismatched}, {"by_depth", by_depth}};
  if (consistent) details["epsilon"] = eps;
  if (!all.counterexamples.empty()) details["counterexamples"] = all.counterexamples;
  r.add({"single sign eps across all elements and places, " + tag, consistent ? 0.0 : 1.0, 0.0, consistent, details});
  r.notes["theta_convention"] =
      "theta(pi ^ u_1 ^ ... ^ u_{n-1}) = u_1 ^ ... ^ u_{n-1} (uniformizer slot first)";
  r.notes["uniformizer_last_convention"] = {{"plus", alt.plus}, {"minus", alt.minus}, {"neither", alt.mismatched}};
  r.notes["normal_form"] = "compared in (Z[P^1(Q)] (x) Lambda Q*) (x) Q via prime exponents; {0},{1},{inf} dropped";
  return r;
}

Report delta_squared_check(int max_weight, int samples, unsigned long seed) {
  std::mt19937_64 rng(seed);
  Report r;
  r.suite = "delta-squared";
  int failures = 0, checked = 0;
  nlohmann::json first_failure;
  for (int i = 0; i < samples; ++i) {
    std::uniform_int_distribution<int> pick_w(3, std::max(3, max_weight));
    const int w = pick_w(rng);
    ChainElement e = random_element(w, rng);
    if (e.degree() + 1 >= e.weight()) {
      // δ² needs two steps below the top; pad with a lower-degree shape
      std::vector<ChainTerm> terms;
      ChainTerm t;
      t.depth = w;
      t.argument = random_function(rng);
      terms.push_back(t);
      e = ChainElement(w, 1, terms);
    }
    ChainElement dd = delta(delta(e));
    ++checked;
    if (!dd.is_zero()) {
      ++failures;
      if (first_failure.is_null()) first_failure = {{"element", e.to_string()}, {"delta_delta", dd.to_string()}};
    }
  }
  nlohmann::json details = {{"checked", checked}};
  if (!first_failure.is_null()) details["first_failure"] = first_failure;
  r.add({"delta(delta(e)) = 0 on " + std::to_string(samples) + " random elements, weights 3.." +
             std::to_string(std::max(3, max_weight)),
         failures == 0 ? 0.0 : 1.0, 0.0, failures == 0, details});
  return r;
}

}  // namespace polyreg
