#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliation/multipoly.hpp"
#include "foliation/ratfunc.hpp"

namespace fol {

namespace {

struct ExprParser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& vars;
  TermOrder order;

  ExprParser(const std::string& text, const std::vector<std::string>& v, TermOrder o)
      : s(text), vars(v), order(o) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + msg +
                                " in '" + s + "'");
  }

  RationalFunc parse() {
    RationalFunc r = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return r;
  }

  RationalFunc expr() {
    RationalFunc acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RationalFunc term() {
    RationalFunc acc = unary();
    while (true) {
      if (eat('*'))
        acc *= unary();
      else if (eat('/')) {
        RationalFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else
        return acc;
    }
  }

  RationalFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunc power() {
    RationalFunc base = atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      long e = std::stol(digits);
      return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
    }
    return base;
  }

  std::string read_digits() {
    skip_ws();
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
    return out;
  }

  RationalFunc atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      RationalFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      return RationalFunc::constant(parse_rat(digits), vars, order);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        name += s[pos++];
      for (const auto& v : vars)
        if (v == name) return RationalFunc::variable(name, vars, order);
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RationalFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& vars,
                           TermOrder order) {
  return ExprParser(text, vars, order).parse();
}

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     TermOrder order) {
  RationalFunc f = parse_ratfunc(text, vars, order);
  if (!f.is_polynomial())
    throw std::invalid_argument("expected a polynomial, got denominator " + f.den().str() +
                                " in '" + text + "'");
  return f.num();
}

}  // namespace fol
