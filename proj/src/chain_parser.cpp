// Text syntax for chain elements.
//
//   element := ['-'] term (('+' | '-') term)*
//   term    := [integer '*'] ( '{' function '}_' depth [tensor wedge] | wedge )
//   tensor  := '⊗' | '(x)'
//   wedge   := entry (('∧' | '^') entry)*
//
// Wedge entries that are sums must be bracketed. '^' directly followed by an
// integer is a power inside an entry, any other '^' separates entries. An
// integer coefficient is only read as such in front of '{' or of a wedge with
// at least two entries.
#include <cctype>

#include "polyreg/chain.hpp"
#include "polyreg/error.hpp"

namespace polyreg {

namespace {

const std::string kTensor = "\xE2\x8A\x97";  // ⊗
const std::string kWedge = "\xE2\x88\xA7";   // ∧

[[noreturn]] void parse_error(const std::string& text, const std::string& what) {
  fail(ErrorKind::Parse, "chain element '" + text + "': " + what);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool wedge_caret_at(const std::string& s, std::size_t i) {
  if (s[i] != '^') return false;
  std::size_t j = i + 1;
  if (j < s.size() && s[j] == '-') ++j;
  return !(j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])));
}

// Split at top-level wedge signs.
std::vector<std::string> split_wedge(const std::string& s, const std::string& whole) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth < 0) parse_error(whole, "unbalanced brackets");
    if (depth != 0) continue;
    if (s.compare(i, kWedge.size(), kWedge) == 0) {
      parts.push_back(s.substr(start, i - start));
      i += kWedge.size() - 1;
      start = i + 1;
    } else if (wedge_caret_at(s, i)) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  for (auto& p : parts) {
    p = trim(p);
    if (p.empty()) parse_error(whole, "empty wedge entry");
  }
  return parts;
}

// Split into signed terms at top-level '+'/'-' that follow a complete entry.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  bool operand_done = false;  // something that can end a term precedes
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(' || c == '{') {
      ++depth;
      operand_done = false;
      continue;
    }
    if (c == ')' || c == '}') {
      --depth;
      if (depth < 0) parse_error(s, "unbalanced brackets");
      operand_done = true;
      continue;
    }
    if (depth > 0) continue;
    if ((c == '+' || c == '-') && operand_done) {
      out.emplace_back(sign, s.substr(start, i - start));
      sign = c == '-' ? -1 : 1;
      start = i + 1;
      operand_done = false;
      continue;
    }
    if ((c == '+' || c == '-') && trim(s.substr(start, i - start)).empty()) {
      if (c == '-') sign = -sign;
      start = i + 1;
      continue;
    }
    if (s.compare(i, kWedge.size(), kWedge) == 0 || s.compare(i, kTensor.size(), kTensor) == 0) {
      i += kWedge.size() - 1;
      operand_done = false;
      continue;
    }
    operand_done = !(c == '*' || c == '/' || c == '^' || c == '_');
  }
  if (depth != 0) parse_error(s, "unbalanced brackets");
  out.emplace_back(sign, s.substr(start));
  for (auto& [sg, t] : out) {
    t = trim(t);
    if (t.empty()) parse_error(s, "empty term");
  }
  return out;
}

ChainTerm parse_term(int sign, std::string t, const std::string& whole) {
  ChainTerm term;
  term.coefficient = sign;
  // integer coefficient
  std::size_t i = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i > 0) {
    std::size_t j = i;
    while (j < t.size() && std::isspace(static_cast<unsigned char>(t[j]))) ++j;
    if (j < t.size() && t[j] == '*') {
      std::string rest = trim(t.substr(j + 1));
      if (!rest.empty() && (rest[0] == '{' || split_wedge(rest, whole).size() >= 2)) {
        if (i > 15) parse_error(whole, "coefficient too large");
        term.coefficient *= std::stol(t.substr(0, i));
        t = rest;
      }
    }
  }
  std::string wedge_text;
  if (!t.empty() && t[0] == '{') {
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] == '{') ++depth;
      if (t[k] == '}' && --depth == 0) {
        close = k;
        break;
      }
    }
    if (close == std::string::npos) parse_error(whole, "missing '}'");
    const std::string arg = trim(t.substr(1, close - 1));
    std::size_t k = close + 1;
    if (k >= t.size() || t[k] != '_') parse_error(whole, "expected '_p' after '}'");
    ++k;
    std::size_t ds = k;
    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
    if (ds == k || k - ds > 3) parse_error(whole, "expected a depth after '_'");
    term.depth = std::stoi(t.substr(ds, k - ds));
    if (term.depth < 2) parse_error(whole, "depth must be at least 2");
    if (arg == "inf" || arg == "∞" || arg == "infinity")
      term.argument_infinite = true;
    else
      term.argument = RationalFunction::parse(arg);
    std::string rest = trim(t.substr(k));
    if (!rest.empty()) {
      if (rest.compare(0, kTensor.size(), kTensor) == 0)
        rest = rest.substr(kTensor.size());
      else if (rest.compare(0, 3, "(x)") == 0)
        rest = rest.substr(3);
      else
        parse_error(whole, "expected '⊗' or '(x)' after the symbol");
      wedge_text = trim(rest);
      if (wedge_text.empty()) parse_error(whole, "empty wedge after '⊗'");
    }
  } else {
    wedge_text = t;
  }
  if (!wedge_text.empty())
    for (auto& part : split_wedge(wedge_text, whole)) term.wedge.push_back(RationalFunction::parse(part));
  return term;
}

}  // namespace

ChainElement ChainElement::parse(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) parse_error(text, "empty input");
  if (s == "0") parse_error(text, "the zero element has no weight; give a nonzero element");
  std::vector<ChainTerm> terms;
  for (auto& [sign, t] : split_terms(s)) terms.push_back(parse_term(sign, t, text));
  const int w = terms.front().weight(), d = terms.front().degree();
  for (auto& t : terms)
    if (t.weight() != w || t.degree() != d) parse_error(text, "terms of different weight or degree");
  return {w, d, std::move(terms)};
}

}  // namespace polyreg
