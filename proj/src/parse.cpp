#include "ptau/parse.hpp"

#include <cctype>
#include <string>

#include "ptau/errors.hpp"

namespace ptau {

namespace {

// Recursive descent:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary | implicit-product)*
//   unary  := ('-'|'+') unary | power
//   power  := atom ('^' integer)?
class Parser {
 public:
  Parser(std::string_view s, const SymbolsPtr& syms) : s_(s), syms_(syms) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  const SymbolsPtr& syms_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc r = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RatFunc rhs = term();
      r = c == '+' ? r + rhs : r - rhs;
    }
    return r;
  }

  static bool starts_atom(char c) {
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * unary();
      } else if (c == '/') {
        ++pos_;
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else if (starts_atom(c)) {
        r = r * unary();
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc::constant(syms_, Rational(std::string(s_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (!syms_->index(name)) fail("undeclared symbol '" + std::string(name) + "'");
      return RatFunc::variable(syms_, name);
    }
    fail("expected an operand");
  }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const SymbolsPtr& syms) { return Parser(text, syms).parse(); }

MultiPoly parse_poly(std::string_view text, const SymbolsPtr& syms) {
  RatFunc r = parse_ratfunc(text, syms);
  if (!r.is_polynomial()) throw ParseError("expression is not a polynomial: '" + std::string(text) + "'");
  return r.numerator() * (1 / r.denominator().constant_term());
}

}  // namespace ptau
