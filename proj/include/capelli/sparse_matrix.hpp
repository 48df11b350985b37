#ifndef CAPELLI_SPARSE_MATRIX_HPP
#define CAPELLI_SPARSE_MATRIX_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "capelli/poly.hpp"

namespace capelli {

// Square sparse matrix over a commutative ring R (R only needs +, -, *,
// R(int) and a free is_zero). Zero entries are never stored, so equality of
// the underlying maps is equality of matrices.
template <class R>
class SparseMatrix {
 public:
  explicit SparseMatrix(long dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static SparseMatrix identity(long dim) {
    SparseMatrix m(dim);
    for (long i = 0; i < dim; ++i) m.rows_[i][i] = R(1);
    return m;
  }

  long dim() const { return dim_; }

  void set(long r, long c, R v) {
    check(r, c);
    if (is_zero(v))
      rows_[r].erase(c);
    else
      rows_[r][c] = std::move(v);
    if (rows_.count(r) && rows_.at(r).empty()) rows_.erase(r);
  }
  void add(long r, long c, const R& v) {
    check(r, c);
    R s = rows_[r].count(c) ? rows_[r][c] + v : v;
    set(r, c, std::move(s));
  }
  R get(long r, long c) const {
    check(r, c);
    auto it = rows_.find(r);
    if (it == rows_.end()) return R(0);
    auto jt = it->second.find(c);
    return jt == it->second.end() ? R(0) : jt->second;
  }

  const std::map<long, std::map<long, R>>& rows() const { return rows_; }
  size_t nonzeros() const {
    size_t n = 0;
    for (const auto& [r, row] : rows_) n += row.size();
    return n;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    a.same_dim(b);
    SparseMatrix out = a;
    for (const auto& [r, row] : b.rows_)
      for (const auto& [c, v] : row) out.add(r, c, v);
    return out;
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return a + (R(-1) * b);
  }
  friend SparseMatrix operator*(const R& s, const SparseMatrix& m) {
    SparseMatrix out(m.dim_);
    if (is_zero(s)) return out;
    for (const auto& [r, row] : m.rows_)
      for (const auto& [c, v] : row) out.set(r, c, s * v);
    return out;
  }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    a.same_dim(b);
    SparseMatrix out(a.dim_);
    for (const auto& [r, row] : a.rows_)
      for (const auto& [k, av] : row) {
        auto it = b.rows_.find(k);
        if (it == b.rows_.end()) continue;
        for (const auto& [c, bv] : it->second) out.add(r, c, av * bv);
      }
    return out;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) {
    return !(a == b);
  }

  R trace() const {
    R t(0);
    for (const auto& [r, row] : rows_) {
      auto it = row.find(r);
      if (it != row.end()) t = t + it->second;
    }
    return t;
  }

  std::vector<R> apply(const std::vector<R>& v) const {
    if (static_cast<long>(v.size()) != dim_)
      throw std::invalid_argument("vector length mismatch");
    std::vector<R> out(dim_, R(0));
    for (const auto& [r, row] : rows_)
      for (const auto& [c, m] : row) out[r] = out[r] + m * v[c];
    return out;
  }

  bool zero() const { return rows_.empty(); }

 private:
  void check(long r, long c) const {
    if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
      throw std::out_of_range("matrix index out of range");
  }
  void same_dim(const SparseMatrix& other) const {
    if (dim_ != other.dim_)
      throw std::invalid_argument("matrix dimension mismatch");
  }
  long dim_;
  std::map<long, std::map<long, R>> rows_;
};

template <class R>
bool is_zero(const SparseMatrix<R>& m) {
  return m.zero();
}

// Entrywise change of coefficient ring, e.g. lifting Rational entries to
// RatFunc or wrapping scalars as empty-word free-algebra elements.
template <class R2, class R, class F>
SparseMatrix<R2> map_entries(const SparseMatrix<R>& m, F f) {
  SparseMatrix<R2> out(m.dim());
  for (const auto& [r, row] : m.rows())
    for (const auto& [c, v] : row) out.set(r, c, f(v));
  return out;
}

// Basis of the joint kernel { v : op * v = 0 for every op } over a field K,
// computed by Gaussian elimination on the stacked operators. Vectors come
// back with leading entry 1.
template <class K>
std::vector<std::vector<K>> joint_kernel(
    const std::vector<SparseMatrix<K>>& ops, long dim) {
  std::vector<std::vector<K>> eqs;  // dense rows of the stacked system
  for (const auto& op : ops) {
    if (op.dim() != dim) throw std::invalid_argument("operator dim mismatch");
    for (const auto& [r, row] : op.rows()) {
      std::vector<K> eq(dim, K(0));
      for (const auto& [c, v] : row) eq[c] = v;
      eqs.push_back(std::move(eq));
    }
  }
  // row-reduce
  std::vector<int> pivot_of_col(dim, -1);
  int rank = 0;
  for (long col = 0; col < dim && rank < static_cast<int>(eqs.size()); ++col) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(eqs.size()); ++r)
      if (!is_zero(eqs[r][col])) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(eqs[rank], eqs[pr]);
    K inv = K(1) / eqs[rank][col];
    for (long c = col; c < dim; ++c) eqs[rank][c] = inv * eqs[rank][c];
    for (int r = 0; r < static_cast<int>(eqs.size()); ++r) {
      if (r == rank || is_zero(eqs[r][col])) continue;
      K f = eqs[r][col];
      for (long c = col; c < dim; ++c)
        eqs[r][c] = eqs[r][c] - f * eqs[rank][c];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::vector<K>> basis;
  for (long free = 0; free < dim; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<K> v(dim, K(0));
    v[free] = K(1);
    for (long col = 0; col < dim; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -eqs[pivot_of_col[col]][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace capelli

#endif
