#ifndef CAPELLI_FORMAT_HPP
#define CAPELLI_FORMAT_HPP

#include <string>
#include <vector>

#include "capelli/free_algebra.hpp"
#include "capelli/poly.hpp"
#include "capelli/symfunc.hpp"

namespace capelli {

// "u^2 - 1/2*u + 3"; highest degree first. The zero polynomial prints "0".
inline std::string to_string(const Poly<Rational>& p,
                             const std::string& var = "u") {
  if (p.zero()) return "0";
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coeffs()[d];
    if (is_zero(c)) continue;
    Rational a = c;
    if (s.empty()) {
      if (sgn(a) < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    bool unit = is_one(a);
    if (!unit || d == 0) s += to_string(a);
    if (d > 0) {
      if (!unit) s += "*";
      s += var;
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

inline std::string to_string(const RatFunc& f, const std::string& var = "u") {
  if (f.polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

// "x_1^2*x_2 + ..." with coefficients in Q(u).
inline std::string to_string(const SymPoly<RatFunc>& p) {
  if (p.zero()) return "0";
  std::string s;
  for (const auto& [expo, c] : p.terms()) {
    std::string mono;
    for (size_t i = 0; i < expo.size(); ++i) {
      if (expo[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x_" + std::to_string(i + 1);
      if (expo[i] > 1) mono += "^" + std::to_string(expo[i]);
    }
    std::string coeff = to_string(c);
    bool negative = coeff.size() > 1 && coeff[0] == '-' &&
                    coeff.find(' ') == std::string::npos;
    if (negative) coeff = coeff.substr(1);
    s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (mono.empty()) {
      s += coeff;
    } else if (coeff == "1") {
      s += mono;
    } else {
      bool atomic = coeff.find(' ') == std::string::npos;
      s += (atomic ? coeff : "(" + coeff + ")") + "*" + mono;
    }
  }
  return s;
}

// "E[1,1]*E[2,1]" with the given generator letter; the empty word is "1".
inline std::string word_display(const Word& w, const std::string& letter) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += letter + "[" + std::to_string(w[k].i) + "," +
         std::to_string(w[k].j) + "]";
  }
  return s;
}

template <class C>
std::string element_display(const FreeAlgElem<C>& x,
                            const std::string& letter) {
  if (x.zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    std::string coeff = to_string(c);
    if (w.empty()) {
      s += coeff;
    } else if (coeff == "1") {
      s += word_display(w, letter);
    } else {
      bool atomic = coeff.find(' ') == std::string::npos;
      s += (atomic ? coeff : "(" + coeff + ")") + "*" +
           word_display(w, letter);
    }
  }
  return s;
}

}  // namespace capelli

#endif
