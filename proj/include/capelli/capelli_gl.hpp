#ifndef CAPELLI_CAPELLI_GL_HPP
#define CAPELLI_CAPELLI_GL_HPP

#include <stdexcept>
#include <vector>

#include "capelli/free_algebra.hpp"
#include "capelli/symfunc.hpp"
#include "capelli/tableau.hpp"
#include "capelli/tensor_ops.hpp"
#include "capelli/young.hpp"

namespace capelli {

// gl_N context: generator symbols are the matrix units E_ij with plain
// labels 1..N.
struct GlContext {
  int N;
  explicit GlContext(int N) : N(N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
  }
};

using GlElem = FreeAlgElem<RatFunc>;

namespace detail {

// Matrix unit E_ij as an N x N sparse matrix (plain labels 1..N).
template <class R>
SparseMatrix<R> matrix_unit(int i, int j, int N) {
  SparseMatrix<R> m(N);
  m.set(i - 1, j - 1, R(1));
  return m;
}

}  // namespace detail

// The current E(u) = -u + sum_ij E_ij (x) E_ji placed in the given tensor
// slot of (C^N)^{(x)n}: entry (i,j) of the slot factor carries the word
// E_ji, minus u_shift on the diagonal.
inline SparseMatrix<GlElem> current_E(const RatFunc& u_shift,
                                      const GlContext& ctx, int slot, int n) {
  if (slot < 1 || slot > n) throw std::out_of_range("slot out of range");
  int N = ctx.N;
  SparseMatrix<GlElem> one_factor(N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      GlElem e = GlElem::generator(j, i);
      if (i == j) e = e - GlElem(RatFunc(u_shift));
      one_factor.set(i - 1, j - 1, e);
    }
  return embed(one_factor, N, n, {slot});
}

// Eq. (1.11): (tr^{(x)n} (x) id)(Y_T (x) 1 . E_1(u+c_1)...E_n(u+c_n)).
// Polynomial in u with FreeAlgElem values; tableau independence is a
// verified theorem, not a definition.
inline GlElem shifted_capelli(const StandardTableau& t, const GlContext& ctx) {
  const Partition& nu = t.shape();
  if (nu.length() > ctx.N)
    throw std::invalid_argument("shape has more rows than N");
  int n = nu.size();
  RatFunc u = RatFunc::variable();
  SparseMatrix<GlElem> prod =
      map_entries<GlElem>(permutation_matrix<Rational>(young_idempotent(t),
                                                       ctx.N),
                          [](const Rational& r) { return GlElem(RatFunc(r)); });
  std::vector<int> c = t.contents();
  for (int p = 1; p <= n; ++p)
    prod = prod * current_E(u + c[p - 1], ctx, p, n);
  return trace_out(prod);
}

// Eq. (1.3): the Capelli element C_nu, i.e. the u = 0 value of the shifted
// family.
inline GlElem capelli_element(const StandardTableau& t, const GlContext& ctx) {
  GlElem shifted = shifted_capelli(t, ctx);
  GlElem out;
  for (const auto& [w, c] : shifted.terms()) {
    // coefficients are polynomials in u; take the constant term
    Rational v = c.evaluate(Rational(0));
    if (!is_zero(v)) out.add_term(w, RatFunc(v));
  }
  return out;
}

// Cor. 1.9 eigenvalue: s_nu(lambda_1 - u + N-1, ..., lambda_N - u | 0,1,2,...).
// At u = 0 this is the Eq. (1.2) eigenvalue of C_nu on U_lambda.
inline RatFunc capelli_eigenvalue(const Partition& nu, const Partition& lambda,
                                  int N, const RatFunc& u) {
  if (nu.length() > N || lambda.length() > N)
    throw std::invalid_argument("partition has more than N parts");
  std::vector<RatFunc> y;
  for (int i = 1; i <= N; ++i)
    y.push_back(RatFunc(Rational(lambda.part(i - 1) + N - i)) - u);
  return factorial_schur(nu, y, natural_shifts<RatFunc>(nu.size() + N));
}

// The representation pi of U(gl_N) on (C^N)^{(x)k}: E_ij acts as the sum of
// the matrix unit over all k slots.
inline SparseMatrix<RatFunc> gl_generator_action(int i, int j, int N, int k) {
  SparseMatrix<RatFunc> out(detail::pow_long(N, k));
  auto unit = detail::matrix_unit<RatFunc>(i, j, N);
  for (int p = 1; p <= k; ++p) out = out + embed(unit, N, k, {p});
  return out;
}

inline SparseMatrix<RatFunc> act_in_tensor_power(const GlElem& x, int k,
                                                 const GlContext& ctx) {
  for (const auto& [w, c] : x.terms())
    for (const Gen& g : w)
      if (g.i < 1 || g.i > ctx.N || g.j < 1 || g.j > ctx.N)
        throw std::invalid_argument("foreign generator symbol");
  return x.substitute(
      [&](const Gen& g) { return gl_generator_action(g.i, g.j, ctx.N, k); },
      detail::pow_long(ctx.N, k));
}

struct WeightVector {
  int k = 0;
  std::vector<Rational> coords;  // in (C^N)^{(x)k}, row-major basis order
  std::vector<int> weight;       // multiplicities of the labels 1..N
};

// Basis of highest-weight vectors of weight lambda in (C^N)^{(x)k}: the
// lambda-weight space intersected with the joint kernel of the raising
// operators pi(E_ij), i < j.
inline std::vector<WeightVector> highest_weight_vectors(
    const Partition& lambda, int k, const GlContext& ctx) {
  int N = ctx.N;
  if (lambda.size() != k)
    throw std::invalid_argument("|lambda| must equal the tensor power");
  if (lambda.length() > N)
    throw std::invalid_argument("lambda has more than N parts");
  long dim = detail::pow_long(N, k);
  std::vector<SparseMatrix<Rational>> ops;
  // constrain to the lambda-weight space: kill every basis tensor whose
  // label multiset is not (lambda_1 copies of 1, lambda_2 of 2, ...)
  SparseMatrix<Rational> selector(dim);
  IndexScheme scheme = IndexScheme::plain(N);
  for (long idx = 0; idx < dim; ++idx) {
    std::vector<int> mult(N + 1, 0);
    for (int a : scheme.decode(idx, k)) ++mult[a];
    bool in_weight_space = true;
    for (int i = 1; i <= N; ++i)
      if (mult[i] != lambda.part(i - 1)) in_weight_space = false;
    if (!in_weight_space) selector.set(idx, idx, Rational(1));
  }
  ops.push_back(std::move(selector));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      SparseMatrix<Rational> raise(dim);
      auto unit = detail::matrix_unit<Rational>(i, j, N);
      for (int p = 1; p <= k; ++p) raise = raise + embed(unit, N, k, {p});
      ops.push_back(std::move(raise));
    }
  auto basis = joint_kernel<Rational>(ops, dim);
  if (basis.empty())
    throw std::runtime_error("no highest-weight vector found");
  std::vector<WeightVector> out;
  for (auto& v : basis) {
    WeightVector wv;
    wv.k = k;
    wv.coords = std::move(v);
    for (int i = 0; i < N; ++i) wv.weight.push_back(lambda.part(i));
    out.push_back(std::move(wv));
  }
  return out;
}

}  // namespace capelli

#endif
