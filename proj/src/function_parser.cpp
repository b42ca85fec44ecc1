// Recursive-descent parser for rational functions:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/' | implicit) unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' exponent)?        exponent: integer, optionally '-' or bracketed
//   atom   := number | identifier | '(' expr ')'
// Decimal literals are read exactly (0.25 = 1/4).
#include <cctype>

#include "polyreg/error.hpp"
#include "polyreg/rational_function.hpp"

namespace polyreg {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFunction parse_all() {
    RationalFunction f = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "function '" + s_ + "', position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(' || c == '.';
  }

  RationalFunction expr() {
    RationalFunction f = term();
    for (;;) {
      if (accept('+'))
        f = f + term();
      else if (accept('-'))
        f = f - term();
      else
        return f;
    }
  }

  RationalFunction term() {
    RationalFunction f = unary();
    for (;;) {
      if (accept('*')) {
        f = f * unary();
      } else if (accept('/')) {
        RationalFunction g = unary();
        if (g.is_zero()) error("division by zero");
        f = f / g;
      } else if (starts_atom()) {
        f = f * power();
      } else {
        return f;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  int exponent() {
    if (accept('(')) {
      int e = exponent();
      if (!accept(')')) error("expected ')' in exponent");
      return e;
    }
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    if (pos_ - start > 6) error("exponent too large");
    int e = std::stoi(s_.substr(start, pos_ - start));
    return neg ? -e : e;
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      int e = exponent();
      if (e < 0 && base.is_zero()) error("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      RationalFunction f = expr();
      if (!accept(')')) error("expected ')'");
      return f;
    }
    if (std::isdigit(c) || c == '.') return number();
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return RationalFunction::variable(s_.substr(start, pos_ - start));
    }
    error("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  RationalFunction number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string whole = s_.substr(start, pos_ - start);
    std::string frac;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      frac = s_.substr(fs, pos_ - fs);
    }
    if (whole.empty() && frac.empty()) error("malformed number");
    Integer num(whole.empty() ? "0" : whole);
    Integer den = 1;
    for (char d : frac) {
      num = num * 10 + (d - '0');
      den *= 10;
    }
    return Rational(num, den);
  }
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace polyreg
