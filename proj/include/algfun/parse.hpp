#pragma once

#include <cctype>
#include <string>

#include "algfun/bipoly.hpp"

namespace algfun {

namespace detail {

/// Recursive-descent parser for polynomial expressions in z and w built from
/// integers, rationals a/b, + - * ^ and parentheses. No implicit products,
/// no division outside integer literals.
class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  BiDense parse() {
    BiDense v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("expression error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiDense expr() {
    BiDense acc = eat('-') ? -term() : (static_cast<void>(eat('+')), term());
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BiDense term() {
    BiDense acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        fail("division is only allowed inside rational literals");
      } else {
        return acc;
      }
    }
  }

  BiDense factor() {
    BiDense base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = eat('-');
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("integer exponent expected");
      long e = read_int();
      if (neg) fail("negative exponents are not supported");
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long read_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer expected");
    return std::stol(s_.substr(start, pos_ - start));
  }

  BiDense atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiDense v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == 'z') {
      ++pos_;
      return BiDense(UniPoly::variable());
    }
    if (c == 'w') {
      ++pos_;
      return BiDense::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = read_int();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("denominator expected");
        long den = read_int();
        if (den == 0) fail("zero denominator");
        return BiDense(UniPoly(Rational(num, den)));
      }
      return BiDense(UniPoly(Rational(num)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace detail

/// Parse a polynomial expression like "w^3 - 3*w - z" into exact form.
inline BiDense parse_bivariate(const std::string& s) {
  return detail::ExprParser(s).parse();
}

/// Parse and normalize to the monic defining polynomial.
inline BiPoly parse_poly(const std::string& s) { return normalize_monic(parse_bivariate(s)); }

}  // namespace algfun
