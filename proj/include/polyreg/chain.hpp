#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "polyreg/rational_function.hpp"
#include "polyreg/report.hpp"

namespace polyreg {

// coefficient * {f}_p ⊗ g_1 ∧ ... ∧ g_q, or a pure wedge when depth == 0.
struct ChainTerm {
  long coefficient = 1;
  int depth = 0;
  RationalFunction argument;       // unused for pure wedges
  bool argument_infinite = false;  // the symbol {∞}_p
  std::vector<RationalFunction> wedge;

  int weight() const { return depth + static_cast<int>(wedge.size()); }
  // Position in the complex B_n -> B_{n-1} ⊗ F* -> ... -> Λ^n F*.
  int degree() const { return depth == 0 ? weight() : static_cast<int>(wedge.size()) + 1; }
  // The symbols {0}_p, {1}_p, {∞}_p.
  bool special_argument() const;
};

// Sorts the entries into canonical order and returns the permutation sign, or
// 0 when the wedge vanishes (a repeated entry, or an entry equal to 1).
int canonicalize_wedge(std::vector<RationalFunction>& wedge);

// Formal integer combination of chain terms of one weight and one degree.
// Terms are kept canonical: wedges sorted, like terms merged, zeros dropped.
class ChainElement {
 public:
  ChainElement() = default;
  ChainElement(int weight, int degree, std::vector<ChainTerm> terms);
  explicit ChainElement(ChainTerm term);

  // "3*{(1-t)/t}_2 ⊗ t ∧ (1+t)"; "(x)" may replace ⊗ and "^" may replace ∧.
  static ChainElement parse(const std::string& text);

  int weight() const { return weight_; }
  int degree() const { return degree_; }
  const std::vector<ChainTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ChainElement operator+(const ChainElement& o) const;
  ChainElement operator-(const ChainElement& o) const;
  ChainElement scaled(long c) const;
  bool operator==(const ChainElement& o) const;

  std::string to_string() const;

 private:
  int weight_ = 0;
  int degree_ = 0;
  std::vector<ChainTerm> terms_;
  void normalize();
};

// {f}_p ⊗ ω -> {f}_{p-1} ⊗ f ∧ ω (p >= 3), {f}_2 ⊗ ω -> (1-f) ∧ f ∧ ω;
// {0}, {1}, {∞} map to 0. Top-degree elements are an invalid argument.
ChainElement delta(const ChainElement& e);

// θ(g_1 ∧ ... ∧ g_q) = Σ_i (-1)^{i-1} ord(g_i) ū_1 ∧ ..(omit i).. ∧ ū_q with
// constant (residue field) entries.
ChainElement theta(const std::vector<RationalFunction>& wedge, const Valuation& v);

// ∂_v = s_v ⊗ θ on a univariate element; weight drops by one.
ChainElement residue(const ChainElement& e, const Valuation& v);

// Image of an element with constant entries in (Z[P^1(Q)] ⊗ Λ Q*) ⊗ Q:
// wedges expanded over prime exponent vectors (signs and torsion vanish),
// {0}, {1}, {∞} dropped. Keys: (depth, argument, primes of the basis wedge).
class QChain {
 public:
  using Key = std::tuple<int, std::string, std::vector<std::string>>;
  static QChain from(const ChainElement& e);
  const std::map<Key, Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool operator==(const QChain& o) const { return c_ == o.c_; }
  QChain scaled(const Rational& s) const;
  std::string to_string() const;

 private:
  std::map<Key, Rational> c_;
};

// Formal check of ∂_v ∘ δ = ε δ ∘ ∂_v over random univariate elements of the
// given weight and the places t = 0, t = 1, ∞.
Report residue_chain_check(int weight, int samples, unsigned long seed);

// δ ∘ δ = 0 on random elements of weights 2..max_weight.
Report delta_squared_check(int max_weight, int samples, unsigned long seed);

}  // namespace polyreg
