#ifndef CAPELLI_PERMUTATION_HPP
#define CAPELLI_PERMUTATION_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "capelli/partition.hpp"

namespace capelli {

// Permutation of {1..n} in one-line notation (images of 1..n).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }
  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }
  // Single cycle (a_1 a_2 ... a_k) inside S_n.
  static Permutation cycle(int n, const std::vector<int>& orbit) {
    Permutation p = identity(n);
    for (size_t i = 0; i < orbit.size(); ++i)
      p.images_[orbit[i] - 1] = orbit[(i + 1) % orbit.size()];
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    // (p*q)(x) = p(q(x))
    std::vector<int> im(p.images_.size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = p.images_[q.images_[i] - 1];
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }
  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = i + 1;
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  bool is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  Partition cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0, j = static_cast<int>(i);
      while (!seen[j]) {
        seen[j] = true;
        j = images_[j] - 1;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
  }

  int sign() const {
    Partition type = cycle_type();
    int s = 1;
    for (int len : type.parts())
      if (len % 2 == 0) s = -s;
    return s;
  }

  // Writes sigma = s_{o_k} ... s_{o_1} for the returned list (o_1,...,o_k)
  // of adjacent-transposition indices.
  std::vector<int> adjacent_factorization() const {
    std::vector<int> p = images_, ops;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          ops.push_back(static_cast<int>(i) + 1);
          changed = true;
        }
      }
    }
    return ops;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }
  static Permutation parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw std::invalid_argument("permutation syntax is [i1,i2,...]: " + s);
    std::vector<int> im;
    size_t pos = 1;
    while (pos < s.size() - 1) {
      size_t comma = s.find(',', pos);
      if (comma == std::string::npos || comma > s.size() - 1)
        comma = s.size() - 1;
      im.push_back(std::stoi(s.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return Permutation(std::move(im));
  }

 private:
  std::vector<int> images_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace capelli

#endif
