#ifndef CAPELLI_RATIONAL_HPP
#define CAPELLI_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace capelli {

// Exact rational scalar. GMP keeps the invariants (gcd(|num|,den)=1, den>=1).
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace capelli

#endif
