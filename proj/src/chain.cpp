#include "polyreg/chain.hpp"

#include <algorithm>
#include <sstream>

#include "polyreg/error.hpp"

namespace polyreg {

bool ChainTerm::special_argument() const {
  if (depth == 0) return false;
  if (argument_infinite) return true;
  return argument.is_zero() || argument.is_one();
}

int canonicalize_wedge(std::vector<RationalFunction>& wedge) {
  for (auto& g : wedge) {
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "wedge entry 0 is not in F*");
    if (g.is_one()) return 0;
  }
  // insertion sort keeps the parity bookkeeping obvious
  int sign = 1;
  for (std::size_t i = 1; i < wedge.size(); ++i)
    for (std::size_t j = i; j > 0; --j) {
      int c = RationalFunction::compare(wedge[j - 1], wedge[j]);
      if (c == 0) return 0;
      if (c < 0) break;
      std::swap(wedge[j - 1], wedge[j]);
      sign = -sign;
    }
  return sign;
}

namespace {

int compare_terms(const ChainTerm& a, const ChainTerm& b) {
  if (a.depth != b.depth) return a.depth > b.depth ? -1 : 1;
  if (a.depth > 0) {
    if (a.argument_infinite != b.argument_infinite) return a.argument_infinite ? 1 : -1;
    if (!a.argument_infinite) {
      int c = RationalFunction::compare(a.argument, b.argument);
      if (c != 0) return c;
    }
  }
  if (a.wedge.size() != b.wedge.size()) return a.wedge.size() < b.wedge.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.wedge.size(); ++i) {
    int c = RationalFunction::compare(a.wedge[i], b.wedge[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

ChainElement::ChainElement(int weight, int degree, std::vector<ChainTerm> terms)
    : weight_(weight), degree_(degree), terms_(std::move(terms)) {
  normalize();
}

ChainElement::ChainElement(ChainTerm term) : weight_(term.weight()), degree_(term.degree()) {
  terms_.push_back(std::move(term));
  normalize();
}

void ChainElement::normalize() {
  for (auto& t : terms_) {
    if (t.depth == 1 || t.depth < 0) fail(ErrorKind::InvalidArgument, "chain terms need depth 0 or p >= 2");
    if (t.weight() != weight_) fail(ErrorKind::InvalidArgument, "chain terms of different weights");
    if (t.degree() != degree_) fail(ErrorKind::InvalidArgument, "chain terms of different degrees");
    if (t.depth == 0 && t.wedge.empty()) fail(ErrorKind::InvalidArgument, "empty pure wedge");
    if (t.depth > 0 && t.argument_infinite) t.argument = RationalFunction();
    t.coefficient *= canonicalize_wedge(t.wedge);
  }
  std::sort(terms_.begin(), terms_.end(), [](const ChainTerm& a, const ChainTerm& b) { return compare_terms(a, b) < 0; });
  std::vector<ChainTerm> merged;
  for (auto& t : terms_) {
    if (t.coefficient == 0) continue;
    if (!merged.empty() && compare_terms(merged.back(), t) == 0)
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(std::move(t));
    if (merged.back().coefficient == 0) merged.pop_back();
  }
  terms_ = std::move(merged);
}

ChainElement ChainElement::operator+(const ChainElement& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (weight_ != o.weight_ || degree_ != o.degree_)
    fail(ErrorKind::InvalidArgument, "adding chain elements of different weight or degree");
  std::vector<ChainTerm> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return {weight_, degree_, std::move(t)};
}

ChainElement ChainElement::operator-(const ChainElement& o) const { return *this + o.scaled(-1); }

ChainElement ChainElement::scaled(long c) const {
  std::vector<ChainTerm> t = terms_;
  for (auto& x : t) x.coefficient *= c;
  return {weight_, degree_, std::move(t)};
}

bool ChainElement::operator==(const ChainElement& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (terms_.size() != o.terms_.size() || weight_ != o.weight_ || degree_ != o.degree_) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (compare_terms(terms_[i], o.terms_[i]) != 0 || terms_[i].coefficient != o.terms_[i].coefficient) return false;
  return true;
}

namespace {

std::string bracketed(const RationalFunction& f) {
  std::string s = f.to_string();
  bool simple = true;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) simple = false;
  return simple ? s : "(" + s + ")";
}

}  // namespace

std::string ChainElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    long c = t.coefficient;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (std::labs(c) != 1) os << std::labs(c) << "*";
    std::string w;
    for (std::size_t i = 0; i < t.wedge.size(); ++i) w += (i ? " ∧ " : "") + bracketed(t.wedge[i]);
    if (t.depth == 0) {
      os << w;
    } else {
      os << "{" << (t.argument_infinite ? std::string("inf") : t.argument.to_string()) << "}_" << t.depth;
      if (!w.empty()) os << " ⊗ " << w;
    }
    first = false;
  }
  return os.str();
}

ChainElement delta(const ChainElement& e) {
  if (e.degree() >= e.weight()) fail(ErrorKind::InvalidArgument, "δ of a top-degree element");
  std::vector<ChainTerm> out;
  for (const auto& t : e.terms()) {
    if (t.special_argument()) continue;
    ChainTerm n;
    n.coefficient = t.coefficient;
    if (t.depth >= 3) {
      n.depth = t.depth - 1;
      n.argument = t.argument;
      n.wedge.push_back(t.argument);
    } else {
      n.depth = 0;
      n.wedge.push_back(t.argument.one_minus());
      n.wedge.push_back(t.argument);
    }
    n.wedge.insert(n.wedge.end(), t.wedge.begin(), t.wedge.end());
    out.push_back(std::move(n));
  }
  return {e.weight(), e.degree() + 1, std::move(out)};
}

}  // namespace polyreg
