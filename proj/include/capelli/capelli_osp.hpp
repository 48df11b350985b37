#ifndef CAPELLI_CAPELLI_OSP_HPP
#define CAPELLI_CAPELLI_OSP_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "capelli/free_algebra.hpp"
#include "capelli/symfunc.hpp"
#include "capelli/tableau.hpp"
#include "capelli/tensor_ops.hpp"
#include "capelli/young.hpp"

namespace capelli {

// so_N / sp_N context: generator symbols are F_ij = E_ij - eps_ij E_{-j,-i}
// on the signed index set, with the linear relation F_{-j,-i} = -eps_ij F_ij
// applied eagerly (see canonical_F).
struct OspContext {
  int N;
  Kind kind;
  int M;
  Rational eta;  // +1/2 orthogonal, -1/2 symplectic
  Rational eps;  // 0, 1/2, 1 for so_2M, so_2M+1, sp_2M

  OspContext(int N, Kind kind) : N(N), kind(kind), M(N / 2) {
    if (N < 2) throw std::invalid_argument("N must be at least 2");
    if (kind == Kind::symplectic && N % 2 != 0)
      throw std::invalid_argument("symplectic requires even N");
    eta = Rational(kind == Kind::orthogonal ? 1 : -1, 2);
    if (kind == Kind::symplectic)
      eps = Rational(1);
    else
      eps = N % 2 ? Rational(1, 2) : Rational(0);
  }

  IndexScheme scheme() const { return IndexScheme::signed_set(N); }
  int eps_ij(int i, int j) const {
    return eps_label(i, kind) * eps_label(j, kind);
  }
  // rho_i = eps + M - i, the half-sum of positive roots in the F_{-i,-i}
  // coordinates
  Rational rho(int i) const { return eps + (M - i); }
};

// F_ij rewritten to the canonical generator symbol: the representative with
// lexicographically minimal index pair among {(i,j), (-j,-i)}, sign from
// F_{-j,-i} = -eps_ij F_ij. Self-paired symbols (j = -i, including F_00)
// vanish identically in the orthogonal case.
template <class K>
FreeAlgElem<K> canonical_F(int i, int j, const OspContext& ctx) {
  IndexScheme s = ctx.scheme();
  if (!s.valid(i) || !s.valid(j))
    throw std::invalid_argument("label not in index scheme");
  if (j == -i && ctx.kind == Kind::orthogonal) return FreeAlgElem<K>();
  std::pair<int, int> self{i, j}, mirror{-j, -i};
  if (self <= mirror) return FreeAlgElem<K>::generator(i, j);
  return K(-ctx.eps_ij(i, j)) * FreeAlgElem<K>::generator(-j, -i);
}

// Eq. (2.0): F(u) = -u - eta + sum_ij E_ij (x) F_ji, embedded in the given
// slot of (C^N)^{(x)n}.
template <class K>
SparseMatrix<FreeAlgElem<K>> current_F(const K& u_shift, const OspContext& ctx,
                                       int slot, int n) {
  if (slot < 1 || slot > n) throw std::out_of_range("slot out of range");
  IndexScheme s = ctx.scheme();
  SparseMatrix<FreeAlgElem<K>> one(ctx.N);
  K diag = K(0) - u_shift - field_from_rational<K>(ctx.eta);
  for (int i : s.labels())
    for (int j : s.labels()) {
      FreeAlgElem<K> e = canonical_F<K>(j, i, ctx);
      if (i == j) e = e + FreeAlgElem<K>(diag);
      if (!e.zero()) one.set(s.position(i), s.position(j), e);
    }
  return embed(one, ctx.N, n, {slot});
}

// The representation pi of U(g) on (C^N)^{(x)k}: F_ij acts as the sum over
// slots of E_ij - eps_ij E_{-j,-i}.
template <class K>
SparseMatrix<K> osp_generator_action(int i, int j, const OspContext& ctx,
                                     int k) {
  IndexScheme s = ctx.scheme();
  SparseMatrix<K> unit(ctx.N);
  unit.add(s.position(i), s.position(j), K(1));
  unit.add(s.position(-j), s.position(-i), K(-ctx.eps_ij(i, j)));
  SparseMatrix<K> out(detail::pow_long(ctx.N, k));
  for (int p = 1; p <= k; ++p) out = out + embed(unit, ctx.N, k, {p});
  return out;
}

template <class K>
SparseMatrix<K> osp_act(const FreeAlgElem<K>& x, int k, const OspContext& ctx) {
  IndexScheme s = ctx.scheme();
  for (const auto& [w, c] : x.terms())
    for (const Gen& g : w)
      if (!s.valid(g.i) || !s.valid(g.j))
        throw std::invalid_argument("foreign generator symbol");
  return x.substitute(
      [&](const Gen& g) {
        return osp_generator_action<K>(g.i, g.j, ctx, k);
      },
      detail::pow_long(ctx.N, k));
}

// Image of a matrix with FreeAlgElem entries under id^{(x)matrix} (x) pi on
// (C^N)^{(x)k}: the block at (r, c) is the representation image of entry
// (r, c). Used for representation-level identity checks.
template <class K>
SparseMatrix<K> osp_rep_image(const SparseMatrix<FreeAlgElem<K>>& m,
                              const OspContext& ctx, int k) {
  long dk = detail::pow_long(ctx.N, k);
  SparseMatrix<K> out(m.dim() * dk);
  for (const auto& [r, row] : m.rows())
    for (const auto& [c, e] : row) {
      auto sub = osp_act(e, k, ctx);
      for (const auto& [rr, srow] : sub.rows())
        for (const auto& [cc, v] : srow) out.add(r * dk + rr, c * dk + cc, v);
    }
  return out;
}

namespace detail {

template <class K>
SparseMatrix<FreeAlgElem<K>> lift_scalar_matrix(const SparseMatrix<K>& m) {
  return map_entries<FreeAlgElem<K>>(
      m, [](const K& c) { return FreeAlgElem<K>(c); });
}

}  // namespace detail

// F_T(u) = (Y_T (x) 1) prod_{p=1..n} (1 + (Q_1p+...+Q_{p-1,p})/(2u+c_p))
// F_p(u+c_p), noncommuting factors left to right.
inline SparseMatrix<FreeAlgElem<RatFunc>> f_T(const StandardTableau& t,
                                              const OspContext& ctx) {
  const Partition& nu = t.shape();
  if (nu.length() > ctx.N)
    throw std::invalid_argument("shape has more rows than N");
  int n = nu.size(), N = ctx.N;
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
  for (int p = 1; p <= n; ++p) {
    SparseMatrix<RatFunc> qf = SparseMatrix<RatFunc>::identity(dim);
    for (int q = 1; q < p; ++q)
      qf = qf + (RatFunc(1) / (2 * u + c[p - 1])) * embed(Q, N, n, {q, p});
    prod = prod * detail::lift_scalar_matrix(qf) *
           current_F<RatFunc>(u + c[p - 1], ctx, p, n);
  }
  return prod;
}

// Prop. 2.6 alternative form: Rtilde_{qp}(u+c_q, u+c_p) factors in place of
// the single combined Q factor; must equal f_T exactly.
inline SparseMatrix<FreeAlgElem<RatFunc>> f_T_alt(const StandardTableau& t,
                                                  const OspContext& ctx) {
  const Partition& nu = t.shape();
  if (nu.length() > ctx.N)
    throw std::invalid_argument("shape has more rows than N");
  int n = nu.size(), N = ctx.N;
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
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q < p; ++q) {
      auto rt = SparseMatrix<RatFunc>::identity(dim) +
                (RatFunc(1) / (2 * u + c[q - 1] + c[p - 1])) *
                    embed(Q, N, n, {q, p});
      prod = prod * detail::lift_scalar_matrix(rt);
    }
    prod = prod * current_F<RatFunc>(u + c[p - 1], ctx, p, n);
  }
  return prod;
}

// Eq. (2.6): Z_nu(u) = (tr^{(x)n} (x) id)(F_T(u)).
inline FreeAlgElem<RatFunc> z_nu(const StandardTableau& t,
                                 const OspContext& ctx) {
  return trace_out(f_T(t, ctx));
}

// Prop. 2.4 / Eq. (2.5): R(u,v) F_1(u) Rtilde(u,v) F_2(v) =
// F_2(v) Rtilde(u,v) F_1(u) R(u,v), checked after substituting the
// representation on (C^N)^{(x)k}; u and v are independent variables.
inline bool reflection_equation_check(const OspContext& ctx, int k) {
  using K2 = RatF<RatFunc>;
  K2 u = K2(RatFunc::variable());
  K2 v = K2::variable();
  int N = ctx.N;
  auto [R, Rt] = rational_R(u, v, N, ctx.kind);
  auto Rl = detail::lift_scalar_matrix(R);
  auto Rtl = detail::lift_scalar_matrix(Rt);
  auto F1 = current_F<K2>(u, ctx, 1, 2);
  auto F2 = current_F<K2>(v, ctx, 2, 2);
  auto lhs = Rl * F1 * Rtl * F2;
  auto rhs = F2 * Rtl * F1 * Rl;
  return osp_rep_image(lhs, ctx, k) == osp_rep_image(rhs, ctx, k);
}

// gl_N currents with signed labels, used for the auxiliary relations
// (2.81)-(2.84): E(u) = -u + sum E_ij (x) E_ji and its form-transpose
// Etilde(u) = -u + sum eps_ij E_ij (x) E_{-i,-j}.
template <class K>
SparseMatrix<FreeAlgElem<K>> current_E_signed(const K& u_shift, int N,
                                              int slot, int n) {
  IndexScheme s = IndexScheme::signed_set(N);
  SparseMatrix<FreeAlgElem<K>> one(N);
  for (int i : s.labels())
    for (int j : s.labels()) {
      FreeAlgElem<K> e = FreeAlgElem<K>::generator(j, i);
      if (i == j) e = e - FreeAlgElem<K>(u_shift);
      one.set(s.position(i), s.position(j), e);
    }
  return embed(one, N, n, {slot});
}

template <class K>
SparseMatrix<FreeAlgElem<K>> current_E_tilde(const K& u_shift, int N,
                                             Kind kind, int slot, int n) {
  IndexScheme s = IndexScheme::signed_set(N);
  SparseMatrix<FreeAlgElem<K>> one(N);
  for (int i : s.labels())
    for (int j : s.labels()) {
      FreeAlgElem<K> e = K(eps_label(i, kind) * eps_label(j, kind)) *
                         FreeAlgElem<K>::generator(-i, -j);
      if (i == j) e = e - FreeAlgElem<K>(u_shift);
      one.set(s.position(i), s.position(j), e);
    }
  return embed(one, N, n, {slot});
}

// pi of U(gl_N) with signed labels on (C^N)^{(x)k}.
template <class K>
SparseMatrix<K> gl_signed_rep_image(const SparseMatrix<FreeAlgElem<K>>& m,
                                    int N, int k) {
  IndexScheme s = IndexScheme::signed_set(N);
  auto gen_matrix = [&](const Gen& g) {
    SparseMatrix<K> unit(N);
    unit.set(s.position(g.i), s.position(g.j), K(1));
    SparseMatrix<K> out(detail::pow_long(N, k));
    for (int p = 1; p <= k; ++p) out = out + embed(unit, N, k, {p});
    return out;
  };
  long dk = detail::pow_long(N, k);
  SparseMatrix<K> out(m.dim() * dk);
  for (const auto& [r, row] : m.rows())
    for (const auto& [c, e] : row) {
      auto sub = e.substitute(gen_matrix, dk);
      for (const auto& [rr, srow] : sub.rows())
        for (const auto& [cc, v] : srow) out.add(r * dk + rr, c * dk + cc, v);
    }
  return out;
}

// Eqs. (2.81)-(2.84) in End(C^N)^{(x)2} (x) U(gl_N), representation level.
inline bool gl_aux_relations_check(int N, Kind kind, int k) {
  using K2 = RatF<RatFunc>;
  K2 u = K2(RatFunc::variable());
  K2 v = K2::variable();
  auto [R, Rt] = rational_R(u, v, N, kind);
  auto Rl = detail::lift_scalar_matrix(R);
  auto Rtl = detail::lift_scalar_matrix(Rt);
  auto E1 = current_E_signed<K2>(u, N, 1, 2);
  auto E2 = current_E_signed<K2>(v, N, 2, 2);
  auto Et1 = current_E_tilde<K2>(K2(0) - u, N, kind, 1, 2);
  auto Et2 = current_E_tilde<K2>(K2(0) - v, N, kind, 2, 2);
  auto img = [&](const SparseMatrix<FreeAlgElem<K2>>& m) {
    return gl_signed_rep_image(m, N, k);
  };
  if (img(Rl * E1 * E2) != img(E2 * E1 * Rl)) return false;          // (2.81)
  if (img(Rl * Et1 * Et2) != img(Et2 * Et1 * Rl)) return false;      // (2.82)
  if (img(Et1 * Rtl * E2) != img(E2 * Rtl * Et1)) return false;      // (2.83)
  if (img(E1 * Rtl * Et2) != img(Et2 * Rtl * E1)) return false;      // (2.84)
  return true;
}

// Eq. (2.9): (Y_T (x) id)(1 + (Q_{1,n+1}+...+Q_{n,n+1})/v) =
// (Y_T (x) id) Rtilde_{1,n+1}(c_1,v) ... Rtilde_{n,n+1}(c_n,v).
inline bool eq29_check(const StandardTableau& t, const OspContext& ctx) {
  int n = t.shape().size(), N = ctx.N;
  long dim = detail::pow_long(N, n + 1);
  RatFunc v = RatFunc::variable();
  auto Y = permutation_matrix<RatFunc>(
      young_idempotent(t)
          .map_coefficients<RatFunc>(
              [](const Rational& r) { return RatFunc(r); })
          .embed(n + 1, [](int x) { return x; }),
      N);
  auto Q = twist_Q<RatFunc>(N, ctx.kind);
  std::vector<int> c = t.contents();
  SparseMatrix<RatFunc> lhs_factor = SparseMatrix<RatFunc>::identity(dim);
  for (int p = 1; p <= n; ++p)
    lhs_factor = lhs_factor + (RatFunc(1) / v) * embed(Q, N, n + 1, {p, n + 1});
  SparseMatrix<RatFunc> rhs = Y;
  for (int p = 1; p <= n; ++p)
    rhs = rhs * (SparseMatrix<RatFunc>::identity(dim) +
                 (RatFunc(1) / (v + c[p - 1])) * embed(Q, N, n + 1, {p, n + 1}));
  return Y * lhs_factor == rhs;
}

// Eq. (2.10): (1 + (P_{1,n+1}+...+P_{n,n+1})/v)(Y_T (x) id) =
// R_{1,n+1}(-c_1,v) ... R_{n,n+1}(-c_n,v) (Y_T (x) id).
inline bool eq210_check(const StandardTableau& t, const OspContext& ctx) {
  int n = t.shape().size(), N = ctx.N;
  long dim = detail::pow_long(N, n + 1);
  RatFunc v = RatFunc::variable();
  auto Y = permutation_matrix<RatFunc>(
      young_idempotent(t)
          .map_coefficients<RatFunc>(
              [](const Rational& r) { return RatFunc(r); })
          .embed(n + 1, [](int x) { return x; }),
      N);
  auto P = exchange_P<RatFunc>(N);
  std::vector<int> c = t.contents();
  SparseMatrix<RatFunc> lhs_factor = SparseMatrix<RatFunc>::identity(dim);
  for (int p = 1; p <= n; ++p)
    lhs_factor = lhs_factor + (RatFunc(1) / v) * embed(P, N, n + 1, {p, n + 1});
  SparseMatrix<RatFunc> rhs = SparseMatrix<RatFunc>::identity(dim);
  for (int p = 1; p <= n; ++p)
    rhs = rhs * (SparseMatrix<RatFunc>::identity(dim) -
                 (RatFunc(1) / (RatFunc(0) - c[p - 1] - v)) *
                     embed(P, N, n + 1, {p, n + 1}));
  return lhs_factor * Y == rhs * Y;
}

// Prop. 2.4 + auxiliaries, bundled as the module-level reflection check.
inline bool reflection_check(const OspContext& ctx) {
  for (int k = 1; k <= 2; ++k) {
    if (!reflection_equation_check(ctx, k)) return false;
    if (!gl_aux_relations_check(ctx.N, ctx.kind, k)) return false;
  }
  return true;
}

// The conjugating element E_{1,-1}+E_{-1,1}+E_22+...+E_{-M,-M} of O_N that
// swaps V_mu and V_{mu*} for even orthogonal N: swaps e_1 and e_{-1}.
template <class K>
SparseMatrix<K> so_flip_matrix(const OspContext& ctx, int k) {
  IndexScheme s = ctx.scheme();
  long dim = detail::pow_long(ctx.N, k);
  SparseMatrix<K> m(dim);
  for (long col = 0; col < dim; ++col) {
    std::vector<int> labels = s.decode(col, k);
    for (int& a : labels)
      if (a == 1 || a == -1) a = -a;
    m.set(s.encode(labels), col, K(1));
  }
  return m;
}

// Prop. 2.5: pi(x) commutes with pi(F_ij) for all i, j; for even orthogonal
// N also with the O_N flip element (Z(so_2M) is the O-invariants, strictly
// smaller than the centre).
template <class K>
bool invariance_check(const FreeAlgElem<K>& x, const OspContext& ctx, int k) {
  auto img = osp_act(x, k, ctx);
  IndexScheme s = ctx.scheme();
  for (int i : s.labels())
    for (int j : s.labels()) {
      auto g = osp_generator_action<K>(i, j, ctx, k);
      if (img * g != g * img) return false;
    }
  if (ctx.kind == Kind::orthogonal && ctx.N % 2 == 0) {
    auto flip = so_flip_matrix<K>(ctx, k);
    if (img * flip != flip * img) return false;
  }
  return true;
}

struct OspWeightVector {
  int k = 0;
  std::vector<Rational> coords;  // in (C^N)^{(x)k}, signed basis order
  std::vector<int> weight;       // with respect to F_{-M,-M}, ..., F_{-1,-1}
};

// Highest-weight vectors of the given h-weight inside the traceless
// subspace V of (C^N)^{(x)k}: joint kernel of the raising operators
// pi(F_ij), i < j, the weight-space selector, and the form contractions
// Q_{pq}. The weight may have a negative last entry (the mu* series of
// so_2M).
inline std::vector<OspWeightVector> osp_highest_weight_vectors(
    const std::vector<int>& weight, int k, const OspContext& ctx) {
  int N = ctx.N, M = ctx.M;
  if (static_cast<int>(weight.size()) != M)
    throw std::invalid_argument("weight must have M entries");
  IndexScheme s = ctx.scheme();
  long dim = detail::pow_long(N, k);
  std::vector<SparseMatrix<Rational>> ops;
  // weight selector: F_{-i,-i} acts on e_a as delta_{a,-i} - delta_{a,i};
  // coordinate t corresponds to F_{-(M+1-t),-(M+1-t)}
  SparseMatrix<Rational> selector(dim);
  for (long idx = 0; idx < dim; ++idx) {
    std::vector<int> wt(M, 0);
    for (int a : s.decode(idx, k)) {
      if (a < 0) wt[M + a] += 1;       // a = -(M+1-t)  =>  t-1 = M + a
      if (a > 0) wt[M - a] -= 1;
    }
    if (wt != weight) selector.set(idx, idx, Rational(1));
  }
  ops.push_back(std::move(selector));
  for (size_t ii = 0; ii < s.labels().size(); ++ii)
    for (size_t jj = ii + 1; jj < s.labels().size(); ++jj) {
      auto raise = osp_generator_action<Rational>(s.labels()[ii],
                                                  s.labels()[jj], ctx, k);
      if (!raise.zero()) ops.push_back(std::move(raise));
    }
  auto Q = twist_Q<Rational>(N, ctx.kind);
  for (int p = 1; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q) ops.push_back(embed(Q, N, k, {p, q}));
  auto basis = joint_kernel<Rational>(ops, dim);
  if (basis.empty())
    throw std::runtime_error("no highest-weight vector found");
  std::vector<OspWeightVector> out;
  for (auto& v : basis) {
    OspWeightVector wv;
    wv.k = k;
    wv.coords = std::move(v);
    wv.weight = weight;
    out.push_back(std::move(wv));
  }
  return out;
}

inline std::vector<OspWeightVector> osp_highest_weight_vectors(
    const Partition& lambda, int k, const OspContext& ctx) {
  if (lambda.size() != k)
    throw std::invalid_argument("|lambda| must equal the tensor power");
  if (lambda.length() > ctx.M)
    throw std::invalid_argument("lambda has more than M parts");
  std::vector<int> weight(ctx.M, 0);
  for (int i = 0; i < ctx.M; ++i) weight[i] = lambda.part(i);
  return osp_highest_weight_vectors(weight, k, ctx);
}

enum class BmuFamily { row, column };

// Section 3 closing specializations: the element B_mu of Z(g) as a value of
// Z_nu(u), with the stated rational prefactor applied before taking the
// limit (so removable singularities cancel exactly). Row family mu = (m),
// nu = (2m); column family mu = (1^m), nu = (1^{2m}), where the specialized
// value equals (-1)^m B_mu.
inline FreeAlgElem<Rational> b_mu_specialization(int m, const OspContext& ctx,
                                                 BmuFamily family) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  Partition nu = family == BmuFamily::row
                     ? Partition({2 * m})
                     : Partition(std::vector<int>(2 * m, 1));
  FreeAlgElem<RatFunc> z = z_nu(column_tableau(nu), ctx);
  RatFunc u = RatFunc::variable();
  RatFunc pref(1);
  Rational point;
  if (family == BmuFamily::row) {
    if (ctx.kind == Kind::orthogonal) {
      point = Rational(-2 * m - 1, 2);
    } else {
      pref = (u + RatFunc(Rational(2 * m - 1, 2))) /
             (u - RatFunc(Rational(1, 2)));
      point = Rational(-2 * m + 1, 2);
    }
  } else {
    if (ctx.kind == Kind::symplectic) {
      point = Rational(2 * m + 1, 2);
    } else {
      pref = (u - RatFunc(Rational(2 * m - 1, 2))) /
             (u + RatFunc(Rational(1, 2)));
      point = Rational(2 * m - 1, 2);
    }
  }
  FreeAlgElem<Rational> out;
  for (const auto& [w, c] : z.terms()) {
    Rational v = (pref * c).limit_at(point);
    if (!is_zero(v)) out.add_term(w, v);
  }
  return out;
}

// Prop. 2.2 eigenvalue of B_mu on V_lambda:
// s_mu((lambda_1+rho_1)^2, ..., (lambda_M+rho_M)^2 | eps^2, (eps+1)^2, ...).
inline Rational b_mu_eigenvalue(const Partition& mu, const Partition& lambda,
                                const OspContext& ctx) {
  if (lambda.length() > ctx.M)
    throw std::invalid_argument("lambda has more than M parts");
  std::vector<Rational> y;
  for (int i = 1; i <= ctx.M; ++i) {
    Rational t = Rational(lambda.part(i - 1)) + ctx.rho(i);
    y.push_back(t * t);
  }
  std::vector<Rational> a;
  for (int j = 0; j < mu.size() + ctx.M; ++j) {
    Rational t = ctx.eps + j;
    a.push_back(t * t);
  }
  return factorial_schur(mu, y, a);
}

}  // namespace capelli

#endif
