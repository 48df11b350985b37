#ifndef CAPELLI_FUSION_HPP
#define CAPELLI_FUSION_HPP

#include <stdexcept>

#include "capelli/group_algebra.hpp"
#include "capelli/tableau.hpp"

namespace capelli {

// Fusion construction of the diagonal matrix element: take the ordered
// product over pairs p < q (lex order in (p,q)) of the Baxterized factors
// evaluated at c_p + l_p u and c_q + l_q u, let u -> 0, and normalize by
// dim W_nu / n! (the raw limit is the unnormalized matrix element; compare
// the n = 2 cases, where the product gives 1 -/+ (1,2) directly). The limit
// is regular for every standard tableau; a pole here means the arithmetic
// layer is broken, so it is reported as a logic error rather than a
// PoleError the caller could be expected to handle.
inline GroupAlgElem<Rational> fusion_idempotent(const StandardTableau& t) {
  int n = t.n();
  auto c = t.contents();
  auto l = t.row_indices();
  RatFunc u = RatFunc::variable();
  GroupAlgElem<RatFunc> prod = GroupAlgElem<RatFunc>::identity(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      RatFunc up = RatFunc(Rational(c[p - 1])) + RatFunc(Rational(l[p - 1])) * u;
      RatFunc vq = RatFunc(Rational(c[q - 1])) + RatFunc(Rational(l[q - 1])) * u;
      prod = prod * baxterized<Rational>(p, q, up, vq, n);
    }
  try {
    Rational scale(t.shape().hook_dimension());
    for (int k = 2; k <= n; ++k) scale /= k;
    return scale * prod.map_coefficients<Rational>(
                       [](const RatFunc& f) { return f.limit_at(Rational(0)); });
  } catch (const PoleError&) {
    throw std::logic_error(
        "fusion product has a pole at u = 0; internal inconsistency");
  }
}

}  // namespace capelli

#endif
