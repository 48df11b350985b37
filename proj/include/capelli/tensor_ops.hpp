#ifndef CAPELLI_TENSOR_OPS_HPP
#define CAPELLI_TENSOR_OPS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "capelli/group_algebra.hpp"
#include "capelli/index_scheme.hpp"
#include "capelli/sparse_matrix.hpp"

namespace capelli {

enum class Kind { orthogonal, symplectic };

// epsilon_i = sgn(i) in the symplectic case, 1 in the orthogonal case; the
// twist coefficient is epsilon_{ij} = epsilon_i * epsilon_j.
inline int eps_label(int i, Kind kind) {
  if (kind == Kind::orthogonal) return 1;
  if (i == 0) throw std::invalid_argument("label 0 has no symplectic sign");
  return i > 0 ? 1 : -1;
}

namespace detail {
inline long pow_long(int base, int exp) {
  long p = 1;
  for (int k = 0; k < exp; ++k) p *= base;
  return p;
}
}  // namespace detail

// Exchange operator P = sum E_ij (x) E_ji on (C^N)^{(x)2}:
// e_i (x) e_j |-> e_j (x) e_i.
template <class R>
SparseMatrix<R> exchange_P(int N) {
  SparseMatrix<R> m(static_cast<long>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      m.set(static_cast<long>(a) * N + b, static_cast<long>(b) * N + a, R(1));
  return m;
}

// Twist operator Q = sum eps_ij E_ij (x) E_{-i,-j}: it sends
// e_j (x) e_{-j} to sum_i eps_ij e_i (x) e_{-i} and kills e_a (x) e_b
// whenever b != -a.
template <class R>
SparseMatrix<R> twist_Q(int N, Kind kind) {
  if (kind == Kind::symplectic && N % 2 != 0)
    throw std::invalid_argument("symplectic twist requires even N");
  IndexScheme scheme = IndexScheme::signed_set(N);
  SparseMatrix<R> m(static_cast<long>(N) * N);
  for (int i : scheme.labels())
    for (int j : scheme.labels()) {
      long row = static_cast<long>(scheme.position(i)) * N +
                 scheme.position(-i);
      long col = static_cast<long>(scheme.position(j)) * N +
                 scheme.position(-j);
      int eps = eps_label(i, kind) * eps_label(j, kind);
      m.add(row, col, R(eps));
    }
  return m;
}

// Transpose with respect to the bilinear form <e_i, e_j> = delta_{i,-j}
// (orthogonal) or delta_{i,-j} sgn i (symplectic), applied in one tensor
// factor of an operator on (C^N)^{(x)n}: E_{ab} in that factor becomes
// eps_{ab} E_{-b,-a}.
template <class R>
SparseMatrix<R> partial_transpose(const SparseMatrix<R>& m, int N, int n,
                                  int factor, Kind kind) {
  if (factor < 1 || factor > n)
    throw std::out_of_range("factor out of range");
  IndexScheme scheme = IndexScheme::signed_set(N);
  if (m.dim() != scheme.dim(n))
    throw std::invalid_argument("matrix dimension is not N^n");
  SparseMatrix<R> out(m.dim());
  for (const auto& [r, row] : m.rows())
    for (const auto& [c, v] : row) {
      std::vector<int> ri = scheme.decode(r, n);
      std::vector<int> ci = scheme.decode(c, n);
      int a = ri[factor - 1], b = ci[factor - 1];
      ri[factor - 1] = -b;
      ci[factor - 1] = -a;
      int eps = eps_label(a, kind) * eps_label(b, kind);
      out.add(scheme.encode(ri), scheme.encode(ci), R(eps) * v);
    }
  return out;
}

// Place an operator on (C^N)^{(x)k} into the named tensor slots (1-based,
// pairwise distinct) of (C^N)^{(x)n}, identity elsewhere; for k = 2 this
// realizes the standard X_{pq} two-slot placement.
template <class R>
SparseMatrix<R> embed(const SparseMatrix<R>& op, int N, int n,
                      const std::vector<int>& positions) {
  int k = static_cast<int>(positions.size());
  if (op.dim() != detail::pow_long(N, k))
    throw std::invalid_argument("operator dimension is not N^k");
  std::vector<bool> used(n + 1, false);
  for (int p : positions) {
    if (p < 1 || p > n) throw std::out_of_range("embed position out of range");
    if (used[p]) throw std::invalid_argument("embed position repeated");
    used[p] = true;
  }
  long dim = detail::pow_long(N, n);
  long rest = detail::pow_long(N, n - k);
  // positions not covered by the operator, in increasing order
  std::vector<int> passive;
  for (int p = 1; p <= n; ++p)
    if (!used[p]) passive.push_back(p);
  SparseMatrix<R> out(dim);
  for (const auto& [r, row] : op.rows())
    for (const auto& [c, v] : row) {
      // digits of the operator's own row/col indices, radix N
      std::vector<int> rd(k), cd(k);
      long rr = r, cc = c;
      for (int t = k - 1; t >= 0; --t) {
        rd[t] = static_cast<int>(rr % N);
        rr /= N;
        cd[t] = static_cast<int>(cc % N);
        cc /= N;
      }
      for (long fill = 0; fill < rest; ++fill) {
        std::vector<int> digits(n, 0);
        long f = fill;
        for (int t = static_cast<int>(passive.size()) - 1; t >= 0; --t) {
          digits[passive[t] - 1] = static_cast<int>(f % N);
          f /= N;
        }
        std::vector<int> rdig = digits, cdig = digits;
        for (int t = 0; t < k; ++t) {
          rdig[positions[t] - 1] = rd[t];
          cdig[positions[t] - 1] = cd[t];
        }
        long row_idx = 0, col_idx = 0;
        for (int t = 0; t < n; ++t) {
          row_idx = row_idx * N + rdig[t];
          col_idx = col_idx * N + cdig[t];
        }
        out.add(row_idx, col_idx, v);
      }
    }
  return out;
}

// Permutational action of S_n on (C^N)^{(x)n}: sigma moves the vector in
// slot p to slot sigma(p), so (1,2) maps to exchange_P.
template <class R>
SparseMatrix<R> permutation_matrix(const Permutation& sigma, int N) {
  int n = sigma.degree();
  long dim = detail::pow_long(N, n);
  SparseMatrix<R> m(dim);
  for (long col = 0; col < dim; ++col) {
    std::vector<int> digits(n);
    long c = col;
    for (int t = n - 1; t >= 0; --t) {
      digits[t] = static_cast<int>(c % N);
      c /= N;
    }
    long row = 0;
    for (int t = 1; t <= n; ++t) {
      // slot t of the image holds the vector from slot sigma^{-1}(t)
      int src = 0;
      for (int s = 1; s <= n; ++s)
        if (sigma(s) == t) {
          src = s;
          break;
        }
      row = row * N + digits[src - 1];
    }
    m.set(row, col, R(1));
  }
  return m;
}

// Linear extension to the group algebra; the image of Phi_T is Y_T.
template <class R>
SparseMatrix<R> permutation_matrix(const GroupAlgElem<R>& x, int N) {
  long dim = detail::pow_long(N, x.degree());
  SparseMatrix<R> m(dim);
  for (const auto& [p, c] : x.terms())
    m = m + c * permutation_matrix<R>(p, N);
  return m;
}

// Full matrix trace over all tensor factors, identity on the entry ring.
template <class R>
R trace_out(const SparseMatrix<R>& m) {
  return m.trace();
}

// R(u,v) = 1 - P/(u-v) and Rtilde(u,v) = 1 + Q/(u+v) over a field K
// containing u and v; throws when a denominator degenerates.
template <class K>
std::pair<SparseMatrix<K>, SparseMatrix<K>> rational_R(const K& u, const K& v,
                                                       int N, Kind kind) {
  if (u == v) throw std::domain_error("rational_R requires u != v");
  K s = u + v;
  if (is_zero(s)) throw std::domain_error("rational_R requires u + v != 0");
  SparseMatrix<K> id = SparseMatrix<K>::identity(static_cast<long>(N) * N);
  SparseMatrix<K> r = id + (K(-1) / (u - v)) * exchange_P<K>(N);
  SparseMatrix<K> rt = id + (K(1) / s) * twist_Q<K>(N, kind);
  return {r, rt};
}

}  // namespace capelli

#endif
