// Parser for the printed form notation.
//
//   form    := ['+' | '-'] product (('+' | '-') product)*
//   product := factor (('·' | '*' | '∧' | '^') factor)*
//   factor  := rational | '(' form ')'
//            | 'L' n '(' f ')' ['^' k] | 'L{' p ',' q '}(' f ')'
//            | 'log|' f '|' ['^' k] | 'dlog|' f '|' | 'darg(' f ')'
//            | 'alpha(' f ',' g ')' | 'α(' f ',' g ')'
//
// Products are wedge products (scalars commute, 1-forms anticommute).
#include <cctype>

#include "polyreg/error.hpp"
#include "polyreg/form.hpp"

namespace polyreg {

namespace {

const std::string kDot = "\xC2\xB7";     // ·
const std::string kWedge = "\xE2\x88\xA7";  // ∧
const std::string kAlpha = "\xCE\xB1";   // α

class FormParser {
 public:
  explicit FormParser(const std::string& s) : s_(s) {}

  Form parse_all() {
    Form f = form();
    skip();
    if (pos_ != s_.size()) error("unexpected input");
    return f;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "form '" + s_ + "', position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) error("expected '" + tok + "'");
  }

  Form form() {
    Form f;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (accept("-"))
        sign = -1;
      else if (!accept("+") && !first)
        return f;
      Form p = product();
      f = f + (sign < 0 ? -p : p);
      first = false;
    }
  }

  bool wedge_caret() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '^') return false;
    std::size_t j = pos_ + 1;
    while (j < s_.size() && s_[j] == ' ') ++j;
    return !(j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])));
  }

  Form product() {
    Form f = factor();
    for (;;) {
      if (accept(kDot) || accept("*") || accept(kWedge)) {
        f = wedge(f, factor());
      } else if (wedge_caret()) {
        ++pos_;
        f = wedge(f, factor());
      } else {
        return f;
      }
    }
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) error("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  int optional_power() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^' && !wedge_caret()) {
      ++pos_;
      return integer();
    }
    return 1;
  }

  // Text up to the matching closing delimiter at bracket depth 0.
  std::string until(char close) {
    int depth = 0;
    std::size_t start = pos_;
    for (; pos_ < s_.size(); ++pos_) {
      char c = s_[pos_];
      if (depth == 0 && c == close) {
        std::string t = s_.substr(start, pos_ - start);
        ++pos_;
        return t;
      }
      if (c == '(') ++depth;
      if (c == ')') --depth;
    }
    error(std::string("missing '") + close + "'");
  }

  RationalFunction function_until(char close) {
    std::string t = until(close);
    return RationalFunction::parse(t);
  }

  std::pair<RationalFunction, RationalFunction> two_functions() {
    std::string t = until(')');
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (t[i] == ',' && depth == 0)
        return {RationalFunction::parse(t.substr(0, i)), RationalFunction::parse(t.substr(i + 1))};
    }
    error("expected two arguments");
  }

  Form factor() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    if (accept("(")) {
      Form f = form();
      expect(")");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      // a '/' directly followed by digits belongs to the number
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        std::size_t ds = ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        num += "/" + s_.substr(ds, pos_ - ds);
      }
      return Form::constant(Rational::parse(num));
    }
    if (accept("dlog|")) return Form::dlog(function_until('|'));
    if (accept("darg(")) return Form::darg(function_until(')'));
    if (accept("log|")) {
      RationalFunction g = function_until('|');
      return Form::log_abs(g, optional_power());
    }
    if (accept("alpha(") || accept(kAlpha + "(")) {
      auto [f, g] = two_functions();
      return alpha(f, g);
    }
    if (accept("L{")) {
      int p = integer();
      expect(",");
      int q = integer();
      expect("}(");
      return sv_pq(p, q, function_until(')'));
    }
    if (accept("L")) {
      int p = integer();
      expect("(");
      RationalFunction f = function_until(')');
      int k = optional_power();
      Form base = Form::polylog(p, f);
      Form r = Form::constant(Rational(1));
      for (int i = 0; i < k; ++i) r = wedge(r, base);
      return r;
    }
    error("unknown factor");
  }
};

}  // namespace

Form Form::parse(const std::string& text) { return FormParser(text).parse_all(); }

}  // namespace polyreg
