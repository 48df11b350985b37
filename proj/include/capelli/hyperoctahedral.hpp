#ifndef CAPELLI_HYPEROCTAHEDRAL_HPP
#define CAPELLI_HYPEROCTAHEDRAL_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "capelli/group_algebra.hpp"
#include "capelli/symfunc.hpp"
#include "capelli/tableau.hpp"
#include "capelli/young.hpp"

namespace capelli {

// h_{+/-} = (1/(n! 2^n)) sum over H_n of chi_{+/-}(sigma) sigma, inside
// S_{2n}. H_n is generated by the diagonal S_n (simultaneous permutation of
// 1..n and n+1..2n) and the commuting flips (s, n+s); chi_{+/-} is trivial
// on the diagonal S_n and sends each flip to +/-1.
inline GroupAlgElem<Rational> hyperoctahedral_idempotent(int n, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  GroupAlgElem<Rational> out(2 * n);
  Rational norm(1);
  for (int k = 2; k <= n; ++k) norm *= k;
  for (int k = 0; k < n; ++k) norm *= 2;
  norm = 1 / norm;
  for (const auto& tau : all_permutations(n)) {
    std::vector<int> base(2 * n);
    for (int i = 1; i <= n; ++i) {
      base[i - 1] = tau(i);
      base[n + i - 1] = n + tau(i);
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> im = base;
      int flips = 0;
      for (int s = 0; s < n; ++s)
        if (mask & (1u << s)) {
          std::swap(im[s], im[n + s]);
          ++flips;
        }
      Rational chi = (sign < 0 && flips % 2) ? Rational(-1) : Rational(1);
      out.add(Permutation(std::move(im)), chi * norm);
    }
  }
  return out;
}

// Embedding (q,p) -> (n+q, n+p) of S_n into S_2n (the z'_p chain).
inline GroupAlgElem<Rational> embed_shifted(const GroupAlgElem<Rational>& x,
                                            int n) {
  return x.embed(2 * n, [n](int i) { return i + n; });
}

// Standard embedding of S_n into S_2n (acting trivially on n+1..2n).
inline GroupAlgElem<Rational> embed_standard(const GroupAlgElem<Rational>& x,
                                             int n) {
  return x.embed(2 * n, [](int i) { return i; });
}

// Psi_T(u) = prod_{p=1..n} (1 + ((1,n+p)+...+(p-1,n+p))/(2u+c_p)) * Phi_T
// in Q(u).S_2n, factors arranged left to right, Phi_T acting on 1..n.
inline GroupAlgElem<RatFunc> psi_T(const StandardTableau& t) {
  int n = t.n();
  auto c = t.contents();
  RatFunc u = RatFunc::variable();
  GroupAlgElem<RatFunc> prod = GroupAlgElem<RatFunc>::identity(2 * n);
  for (int p = 1; p <= n; ++p) {
    GroupAlgElem<RatFunc> factor = GroupAlgElem<RatFunc>::identity(2 * n);
    RatFunc inv = RatFunc(1) / (RatFunc(2) * u + RatFunc(Rational(c[p - 1])));
    for (int q = 1; q < p; ++q)
      factor.add(Permutation::transposition(2 * n, q, n + p), inv);
    prod = prod * factor;
  }
  auto phi = embed_standard(young_idempotent(t), n)
                 .map_coefficients<RatFunc>(
                     [](const Rational& r) { return RatFunc(r); });
  return prod * phi;
}

// Canonical double-coset representative for the characteristic map: a
// permutation of 1..n with cycle lengths 2 rho_1, 2 rho_2, ..., acting
// trivially on n+1..2n.
inline Permutation coset_representative(const Partition& rho, int n) {
  Permutation sigma = Permutation::identity(2 * n);
  int next = 1;
  for (int part : rho.parts()) {
    std::vector<int> orbit;
    for (int i = 0; i < 2 * part; ++i) orbit.push_back(next++);
    sigma = sigma * Permutation::cycle(2 * n, orbit);
  }
  return sigma;
}

// Characteristic map ch: h_- (C.S_2n) h_+ -> Lambda_M (side = -1) or
// h_+ (...) h_- -> Lambda_M (side = +1), sending h_-/+ sigma h_+/- with
// sigma of cycle type 2 rho on 1..n to p_rho(x_1^2,...,x_M^2) 2^{l(rho)}.
// Computed by an exact linear solve over the basis of double-coset
// elements, since ch cannot be applied term by term.
inline SymPoly<RatFunc> characteristic_map(const GroupAlgElem<RatFunc>& x,
                                           int side, int M) {
  int n2 = x.degree();
  if (n2 % 2 != 0) throw std::invalid_argument("degree must be 2n");
  int n = n2 / 2;
  auto lift = [](const GroupAlgElem<Rational>& g) {
    return g.map_coefficients<RatFunc>(
        [](const Rational& r) { return RatFunc(r); });
  };
  // Corner membership h_l x h_r = x is equivalent to chi_l(g) g x = x and
  // x g = chi_r(g) x for generators g of H_n, which is far cheaper than the
  // two full convolutions with the averaging idempotents.
  {
    std::vector<std::pair<Permutation, int>> gens;  // (generator, flip count)
    for (int s = 1; s < n; ++s)
      gens.emplace_back(Permutation::transposition(n2, s, s + 1) *
                            Permutation::transposition(n2, n + s, n + s + 1),
                        0);
    gens.emplace_back(Permutation::transposition(n2, 1, n + 1), 1);
    for (const auto& [g, flips] : gens) {
      int chi_l = (side < 0 && flips % 2) ? -1 : 1;   // chi of the left h
      int chi_r = (side > 0 && flips % 2) ? -1 : 1;   // chi of the right h
      auto ge = GroupAlgElem<RatFunc>::of(g);
      if (ge * x != RatFunc(chi_l) * x || x * ge != RatFunc(chi_r) * x)
        throw std::domain_error(
            "characteristic_map: element not in the idempotent corner");
    }
  }
  SymPoly<RatFunc> out(M);
  if (x.zero() || n == 0) return out;
  if (n % 2 != 0)
    throw std::domain_error(
        "characteristic_map: non-zero corner element with odd n");
  int m = n / 2;
  // basis B_rho = h_l * sigma_rho * h_r, rho a partition of m; computed
  // over the rationals and lifted, since all ingredients are constant
  auto hl = hyperoctahedral_idempotent(n, side < 0 ? -1 : +1);
  auto hr = hyperoctahedral_idempotent(n, side < 0 ? +1 : -1);
  std::vector<Partition> rhos = partitions_of(m);
  std::vector<GroupAlgElem<RatFunc>> basis;
  for (const auto& rho : rhos)
    basis.push_back(lift(
        hl * GroupAlgElem<Rational>::of(coset_representative(rho, n)) * hr));
  // solve x = sum a_rho B_rho by Gaussian elimination over the joint support
  std::map<Permutation, int> row_of;
  auto index_rows = [&](const GroupAlgElem<RatFunc>& g) {
    for (const auto& [p, c] : g.terms())
      row_of.emplace(p, static_cast<int>(row_of.size()));
  };
  for (const auto& b : basis) index_rows(b);
  index_rows(x);
  int rows = static_cast<int>(row_of.size());
  int cols = static_cast<int>(basis.size());
  std::vector<std::vector<RatFunc>> mat(rows,
                                        std::vector<RatFunc>(cols + 1, 0));
  for (int j = 0; j < cols; ++j)
    for (const auto& [p, c] : basis[j].terms()) mat[row_of.at(p)][j] = c;
  for (const auto& [p, c] : x.terms()) mat[row_of.at(p)][cols] = c;
  std::vector<int> pivot_row(cols, -1);
  int rank = 0;
  for (int j = 0; j < cols && rank < rows; ++j) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (!mat[r][j].zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[pr], mat[rank]);
    RatFunc inv = RatFunc(1) / mat[rank][j];
    for (int cc = j; cc <= cols; ++cc) mat[rank][cc] = inv * mat[rank][cc];
    for (int r = 0; r < rows; ++r) {
      if (r == rank || mat[r][j].zero()) continue;
      RatFunc f = mat[r][j];
      for (int cc = j; cc <= cols; ++cc)
        mat[r][cc] = mat[r][cc] - f * mat[rank][cc];
    }
    pivot_row[j] = rank++;
  }
  for (int r = rank; r < rows; ++r)
    if (!mat[r][cols].zero())
      throw std::domain_error(
          "characteristic_map: element outside the double-coset span");
  auto x2 = [&](const Partition& rho) {
    return power_sum_product(rho, M)
        .squared_vars()
        .map_coefficients<RatFunc>(
            [](const Rational& r) { return RatFunc(r); });
  };
  for (int j = 0; j < cols; ++j) {
    RatFunc a = pivot_row[j] >= 0 ? mat[pivot_row[j]][cols] : RatFunc(0);
    if (a.zero()) continue;
    Rational two_l(1);
    for (int k = 0; k < rhos[j].length(); ++k) two_l *= 2;
    out = out + (a * RatFunc(two_l)) * x2(rhos[j]);
  }
  return out;
}

}  // namespace capelli

#endif
