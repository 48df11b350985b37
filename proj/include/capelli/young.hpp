#ifndef CAPELLI_YOUNG_HPP
#define CAPELLI_YOUNG_HPP

#include <map>
#include <vector>

#include "capelli/group_algebra.hpp"
#include "capelli/tableau.hpp"

namespace capelli {

// Young's seminormal representation of S_n on the irreducible module of a
// given shape. Its diagonal matrix entries coincide with those of the
// orthogonal form (the two are related by diagonal conjugation), which is
// all that the normalized matrix element Phi_T needs; everything stays in
// rational arithmetic.
class YoungRep {
 public:
  using Matrix = std::vector<std::vector<Rational>>;

  explicit YoungRep(const Partition& shape)
      : shape_(shape), basis_(standard_tableaux(shape)) {}

  const Partition& shape() const { return shape_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int n() const { return shape_.size(); }
  const std::vector<StandardTableau>& basis() const { return basis_; }

  int index_of(const StandardTableau& t) const {
    for (int i = 0; i < dim(); ++i)
      if (basis_[i] == t) return i;
    throw std::invalid_argument("tableau not of this shape");
  }

  // Matrix of the adjacent transposition s_r = (r, r+1). Convention for a
  // swappable pair {T, T'}: s_r v_T = d_T v_T + a_T v_{T'} with a_T = 1 for
  // the lower basis index and 1 - d^2 for the higher, an involution.
  const Matrix& adjacent(int r) const {
    auto it = adj_.find(r);
    if (it != adj_.end()) return it->second;
    Matrix m(dim(), std::vector<Rational>(dim(), Rational(0)));
    for (int j = 0; j < dim(); ++j) {
      const StandardTableau& t = basis_[j];
      auto c = t.contents();
      int diff = c[r] - c[r - 1];  // content(r+1) - content(r)
      if (diff == 1) {
        m[j][j] = Rational(1);  // same row
      } else if (diff == -1) {
        m[j][j] = Rational(-1);  // same column
      } else {
        Rational d(1, 1);
        d = Rational(1) / Rational(diff);
        int other = index_of(t.apply_transposition(r));
        m[j][j] += d;
        m[other][j] += (other > j) ? Rational(1)
                                   : Rational(1) - d * d;
      }
    }
    return adj_.emplace(r, std::move(m)).first->second;
  }

  const Matrix& matrix(const Permutation& p) const {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    Matrix m = identity_matrix();
    for (int r : p.adjacent_factorization()) m = mul(adjacent(r), m);
    return cache_.emplace(p, std::move(m)).first->second;
  }

  Rational character(const Permutation& p) const {
    const Matrix& m = matrix(p);
    Rational tr(0);
    for (int i = 0; i < dim(); ++i) tr += m[i][i];
    return tr;
  }

  // Matrix of a group-algebra element, coefficients lifted into K.
  template <class K>
  std::vector<std::vector<K>> representation_matrix(
      const GroupAlgElem<K>& x) const {
    std::vector<std::vector<K>> out(dim(), std::vector<K>(dim(), K(0)));
    for (const auto& [p, c] : x.terms()) {
      const Matrix& m = matrix(p);
      for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
          if (!is_zero(m[i][j])) out[i][j] = out[i][j] + c * K(m[i][j]);
    }
    return out;
  }

 private:
  Matrix identity_matrix() const {
    Matrix m(dim(), std::vector<Rational>(dim(), Rational(0)));
    for (int i = 0; i < dim(); ++i) m[i][i] = Rational(1);
    return m;
  }
  static Matrix mul(const Matrix& a, const Matrix& b) {
    int d = static_cast<int>(a.size());
    Matrix c(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (is_zero(a[i][k])) continue;
        for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  }

  Partition shape_;
  std::vector<StandardTableau> basis_;
  mutable std::map<int, Matrix> adj_;
  mutable std::map<Permutation, Matrix> cache_;
};

// Phi_T per the normalized diagonal matrix element: (dim/n!) * sum over
// sigma of the (T,T) seminormal entry times sigma.
inline GroupAlgElem<Rational> young_idempotent(const StandardTableau& t) {
  YoungRep rep(t.shape());
  int idx = rep.index_of(t);
  int n = t.n();
  Rational nfact(1);
  for (int k = 2; k <= n; ++k) nfact *= k;
  Rational scale = Rational(rep.dim()) / nfact;
  GroupAlgElem<Rational> out(n);
  for (const auto& p : all_permutations(n)) {
    const auto& m = rep.matrix(p);
    if (!is_zero(m[idx][idx])) out.add(p, scale * m[idx][idx]);
  }
  return out;
}

// Character average X_nu = (1/n!) sum chi_nu(sigma) sigma.
inline GroupAlgElem<Rational> character_average(const Partition& nu) {
  YoungRep rep(nu);
  int n = nu.size();
  Rational nfact(1);
  for (int k = 2; k <= n; ++k) nfact *= k;
  GroupAlgElem<Rational> out(n);
  for (const auto& p : all_permutations(n)) {
    Rational chi = rep.character(p);
    if (!is_zero(chi)) out.add(p, chi / nfact);
  }
  return out;
}

}  // namespace capelli

#endif
