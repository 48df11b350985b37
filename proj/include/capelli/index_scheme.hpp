#ifndef CAPELLI_INDEX_SCHEME_HPP
#define CAPELLI_INDEX_SCHEME_HPP

#include <stdexcept>
#include <vector>

namespace capelli {

// Bijection between the basis labels of C^N and 0-based positions, plus the
// row-major mixed-radix encoding of tensor indices. Two label styles: plain
// 1..N (the gl_N convention) and the signed set -M..-1,[0,]1..M used on the
// orthogonal/symplectic side (0 present only for odd N).
class IndexScheme {
 public:
  static IndexScheme plain(int N) { return IndexScheme(N, false); }
  static IndexScheme signed_set(int N) { return IndexScheme(N, true); }

  int N() const { return N_; }
  int M() const { return N_ / 2; }
  bool is_signed() const { return signed_; }

  const std::vector<int>& labels() const { return labels_; }

  int position(int label) const {
    for (int p = 0; p < N_; ++p)
      if (labels_[p] == label) return p;
    throw std::out_of_range("label not in index scheme");
  }
  int label(int pos) const {
    if (pos < 0 || pos >= N_) throw std::out_of_range("position out of range");
    return labels_[pos];
  }
  bool valid(int label) const {
    for (int l : labels_)
      if (l == label) return true;
    return false;
  }

  // Row-major index of a tensor multi-label (a_1, ..., a_n).
  long encode(const std::vector<int>& labels) const {
    long idx = 0;
    for (int a : labels) idx = idx * N_ + position(a);
    return idx;
  }
  std::vector<int> decode(long index, int n) const {
    std::vector<int> out(n);
    for (int p = n - 1; p >= 0; --p) {
      out[p] = label(static_cast<int>(index % N_));
      index /= N_;
    }
    if (index != 0) throw std::out_of_range("tensor index out of range");
    return out;
  }

  long dim(int n) const {
    long d = 1;
    for (int p = 0; p < n; ++p) d *= N_;
    return d;
  }

 private:
  IndexScheme(int N, bool with_signs) : N_(N), signed_(with_signs) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (signed_) {
      for (int i = -M(); i <= -1; ++i) labels_.push_back(i);
      if (N_ % 2 == 1) labels_.push_back(0);
      for (int i = 1; i <= M(); ++i) labels_.push_back(i);
    } else {
      for (int i = 1; i <= N_; ++i) labels_.push_back(i);
    }
  }
  int N_;
  bool signed_;
  std::vector<int> labels_;
};

}  // namespace capelli

#endif
