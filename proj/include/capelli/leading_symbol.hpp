#ifndef CAPELLI_LEADING_SYMBOL_HPP
#define CAPELLI_LEADING_SYMBOL_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "capelli/capelli_osp.hpp"
#include "capelli/symfunc.hpp"

namespace capelli {

// f_nu(x_1..x_M | u) of Eq. (3.1): symmetric polynomial in the squared
// variables with coefficients in Q(u).
using LeadingSymbol = SymPoly<RatFunc>;

// The eta-homomorphism applied to the top-degree part: keep words of length
// exactly n, abelianize, send F_{-k,-k} to x_{M+1-k}, F_{kk} to -x_{M+1-k}
// (forced by F_kk = -F_{-k,-k}), everything else to 0.
inline LeadingSymbol leading_symbol(const FreeAlgElem<RatFunc>& x, int n,
                                    const OspContext& ctx) {
  int M = ctx.M;
  LeadingSymbol out(M);
  for (const auto& [w, c] : x.terms()) {
    if (static_cast<int>(w.size()) > n)
      throw std::invalid_argument("word longer than the stated degree");
    if (static_cast<int>(w.size()) != n) continue;
    std::vector<int> expo(M, 0);
    int sign = 1;
    bool dead = false;
    for (const Gen& g : w) {
      if (g.i != g.j || g.i == 0) {
        dead = true;
        break;
      }
      int kk = g.i < 0 ? -g.i : g.i;
      if (g.i > 0) sign = -sign;
      expo[M - kk] += 1;
    }
    if (!dead) out.add_term(expo, RatFunc(Rational(sign)) * c);
  }
  return out;
}

namespace detail {

inline FreeAlgElem<RatFunc> abelianized(const FreeAlgElem<RatFunc>& e) {
  FreeAlgElem<RatFunc> out;
  for (const auto& [w, c] : e.terms()) {
    Word s = w;
    std::sort(s.begin(), s.end());
    out.add_term(s, c);
  }
  return out;
}

}  // namespace detail

// leading_symbol(z_nu(t), n) computed without expanding the full Z_nu(u):
// off-diagonal generator letters and the scalar parts of the currents cannot
// contribute to the eta-image of a length-n word (each current factor
// supplies exactly one letter of such a word, and off-diagonal letters map
// to zero), so the currents are truncated to their diagonal letters and the
// words are re-sorted eagerly.
inline LeadingSymbol leading_symbol_z_nu(const StandardTableau& t,
                                         const OspContext& ctx) {
  using F = FreeAlgElem<RatFunc>;
  const Partition& nu = t.shape();
  if (nu.length() > ctx.N)
    throw std::invalid_argument("shape has more rows than N");
  int n = nu.size(), N = ctx.N;
  IndexScheme s = ctx.scheme();
  long dim = detail::pow_long(N, n);
  RatFunc u = RatFunc::variable();
  auto Q = twist_Q<RatFunc>(N, ctx.kind);
  std::vector<int> c = t.contents();
  auto prod = detail::lift_scalar_matrix(
      permutation_matrix<RatFunc>(young_idempotent(t).map_coefficients<RatFunc>(
                                      [](const Rational& r) {
                                        return RatFunc(r);
                                      }),
                                  N));
  SparseMatrix<F> letters(N);
  for (int a : s.labels()) {
    if (a == 0) continue;
    letters.set(s.position(a), s.position(a), canonical_F<RatFunc>(a, a, ctx));
  }
  for (int p = 1; p <= n; ++p) {
    SparseMatrix<RatFunc> qf = SparseMatrix<RatFunc>::identity(dim);
    for (int q = 1; q < p; ++q)
      qf = qf + (RatFunc(1) / (2 * u + c[p - 1])) * embed(Q, N, n, {q, p});
    prod = prod * detail::lift_scalar_matrix(qf) * embed(letters, N, n, {p});
    prod = map_entries<F>(prod, detail::abelianized);
  }
  return leading_symbol(trace_out(prod), n, ctx);
}

// Thm 3.4 closed formula: sum over partitions mu of m with at most M parts
// of [(u+b_1)(u+b_1+eta)...(u+b_m)(u+b_m+eta)] / [(u+c_1/2)...(u+c_n/2)]
// times L_{mu nu} s_mu(x_1^2,...,x_M^2).
inline LeadingSymbol theorem34_formula(const Partition& nu,
                                       const OspContext& ctx) {
  if (nu.size() % 2 != 0)
    throw std::invalid_argument("theorem34_formula requires |nu| even");
  int m = nu.size() / 2, M = ctx.M;
  RatFunc u = RatFunc::variable();
  RatFunc den(1);
  for (int cp : column_tableau(nu).contents())
    den = den * (u + RatFunc(Rational(cp) / 2));
  LeadingSymbol out(M);
  for (const auto& mu : partitions_of(m, M)) {
    Rational L = plethysm_coeff(mu, nu);
    if (is_zero(L)) continue;
    RatFunc num(1);
    for (int b : mu.box_contents())
      num = num * (u + RatFunc(Rational(b))) *
            (u + RatFunc(Rational(b) + ctx.eta));
    RatFunc scalar = num / den * RatFunc(L);
    out = out + scalar * schur(mu, M).squared_vars().map_coefficients<RatFunc>(
                             [](const Rational& r) { return RatFunc(r); });
  }
  return out;
}

// Cor. 3.6 / Eq. (3.10): sum_nu c_nu(u) f_nu(x) s_nu(y) =
// sum_mu b_mu(u) s_mu(x^2) s_mu(y^2), with c_nu and b_mu the denominator
// and numerator of the fraction (3.333); nu over partitions of 2m with at
// most N parts, mu over partitions of m with at most M parts. Variables:
// x_1..x_M then y_1..y_N.
inline bool corollary36_check(int m, int N, Kind kind) {
  OspContext ctx(N, kind);
  int M = ctx.M, vars = M + N;
  RatFunc u = RatFunc::variable();
  auto lift = [](const Rational& r) { return RatFunc(r); };
  SymPoly<RatFunc> lhs(vars), rhs(vars);
  for (const auto& nu : partitions_of(2 * m, N)) {
    RatFunc cnu(1);
    for (int cp : column_tableau(nu).contents())
      cnu = cnu * (u + RatFunc(Rational(cp) / 2));
    auto f = theorem34_formula(nu, ctx).embed_vars(vars, 0);
    auto sy =
        schur(nu, N).map_coefficients<RatFunc>(lift).embed_vars(vars, M);
    lhs = lhs + cnu * (f * sy);
  }
  for (const auto& mu : partitions_of(m, M)) {
    RatFunc bmu(1);
    for (int b : mu.box_contents())
      bmu = bmu * (u + RatFunc(Rational(b))) *
            (u + RatFunc(Rational(b) + ctx.eta));
    auto sx = schur(mu, M).squared_vars().map_coefficients<RatFunc>(lift)
                  .embed_vars(vars, 0);
    auto sy = schur(mu, N).squared_vars().map_coefficients<RatFunc>(lift)
                  .embed_vars(vars, M);
    rhs = rhs + bmu * (sx * sy);
  }
  return lhs == rhs;
}

}  // namespace capelli

#endif
