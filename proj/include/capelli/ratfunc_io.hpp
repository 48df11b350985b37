#ifndef CAPELLI_RATFUNC_IO_HPP
#define CAPELLI_RATFUNC_IO_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "capelli/poly.hpp"

namespace capelli {

inline std::string poly_to_string(const Poly<Rational>& p,
                                  const std::string& var = "u") {
  if (p.zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coeffs()[d];
    if (is_zero(c)) continue;
    Rational a = abs(c);
    if (out.empty())
      out += (sgn(c) < 0 ? "-" : "");
    else
      out += (sgn(c) < 0 ? " - " : " + ");
    bool unit = (a == 1) && d > 0;
    if (!unit) out += to_string(a);
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

inline std::string ratfunc_to_string(const RatFunc& f,
                                     const std::string& var = "u") {
  if (f.polynomial()) return poly_to_string(f.num(), var);
  return "(" + poly_to_string(f.num(), var) + ")/(" +
         poly_to_string(f.den(), var) + ")";
}

// Parser for the fixture syntax "p(u)/q(u)". A '/' directly followed by an
// integer continues a rational literal ("1/2*u"); otherwise it divides
// ("1/u", "(u^2-1)/(u-1)").
class RatFuncParser {
 public:
  explicit RatFuncParser(std::string text, std::string var = "u")
      : text_(std::move(text)), var_(std::move(var)) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw std::invalid_argument("trailing input in rational function: " +
                                  text_.substr(pos_));
    return v;
  }

 private:
  RatFunc expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    RatFunc v = term();
    if (neg) v = -v;
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        bool minus = (get() == '-');
        RatFunc t = term();
        v = minus ? v - t : v + t;
      } else {
        return v;
      }
    }
  }
  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        get();
        v = v * factor();
      } else if (peek() == '/') {
        get();
        v = v / factor();
      } else {
        return v;
      }
    }
  }
  RatFunc factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      RatFunc v = expr();
      skip_ws();
      if (get() != ')') throw std::invalid_argument("expected ')'");
      return power_suffix(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return power_suffix(RatFunc(rational_literal()));
    if (text_.compare(pos_, var_.size(), var_) == 0) {
      pos_ += var_.size();
      return power_suffix(RatFunc::variable());
    }
    throw std::invalid_argument("unexpected character in rational function: " +
                                std::string(1, c));
  }
  RatFunc power_suffix(RatFunc v) {
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      int e = 0;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw std::invalid_argument("expected exponent");
      while (std::isdigit(static_cast<unsigned char>(peek())))
        e = e * 10 + (get() - '0');
      RatFunc r = 1;
      for (int i = 0; i < e; ++i) r = r * v;
      return r;
    }
    return v;
  }
  Rational rational_literal() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      s += get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    }
    return rational_from_string(s);
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  std::string text_, var_;
  size_t pos_ = 0;
};

inline RatFunc parse_ratfunc(const std::string& s) {
  return RatFuncParser(s).parse();
}

}  // namespace capelli

#endif
