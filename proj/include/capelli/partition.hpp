#ifndef CAPELLI_PARTITION_HPP
#define CAPELLI_PARTITION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

// Weakly decreasing sequence of positive integers, stored without trailing
// zeros. Padded forms like (nu_1,...,nu_N) are a presentation concern of the
// call sites.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw std::invalid_argument("not weakly decreasing positive: " +
                                    to_string());
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  int part(int i) const {  // 0-based, 0 beyond the length
    return i < length() ? parts_[i] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const {
    std::vector<int> c;
    for (int col = 0; col < part(0); ++col) {
      int h = 0;
      while (h < length() && parts_[h] > col) ++h;
      c.push_back(h);
    }
    return Partition(std::move(c));
  }

  int hook_length(int r, int c) const {
    return parts_[r] - c + conjugate().parts()[c] - r - 1;
  }

  // n! / prod(hooks): the number of standard tableaux of this shape.
  std::int64_t hook_dimension() const {
    std::int64_t num = 1;
    for (int k = 2; k <= size(); ++k) num *= k;
    for (int r = 0; r < length(); ++r)
      for (int c = 0; c < parts_[r]; ++c) num /= hook_length(r, c);
    return num;
  }

  // Box contents c = col - row in row-reading order.
  std::vector<int> box_contents() const {
    std::vector<int> b;
    for (int r = 0; r < length(); ++r)
      for (int c = 0; c < parts_[r]; ++c) b.push_back(c - r);
    return b;
  }

  // True iff the diagram is tiled by dominoes, i.e. its 2-core is empty.
  bool domino_decomposable() const {
    if (size() % 2 != 0) return false;
    int L = length() + size() + 2;
    // beta set of first-column hook lengths, 0-based: part(L-1-i)+i
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = part(L - 1 - i) + i;
    int k0 = 0, k1 = 0;
    for (int b : beta) (b % 2 == 0 ? k0 : k1)++;
    // push beads down each runner; 2-core empty iff the packed beta set is
    // an initial segment {0,...,L-1}, which happens iff |k0 - k1| <= 1 and
    // the interleaving is exact
    std::vector<int> packed;
    for (int i = 0; i < k0; ++i) packed.push_back(2 * i);
    for (int i = 0; i < k1; ++i) packed.push_back(2 * i + 1);
    std::sort(packed.begin(), packed.end());
    for (int i = 0; i < L; ++i)
      if (packed[i] != i) return false;
    return true;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  // Accepts the "[4,3,1]" syntax.
  static Partition parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw std::invalid_argument("partition syntax is [a,b,...]: " + s);
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      std::string tok = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("bad partition: " + s);
      int p = std::stoi(tok);
      if (p < 1)
        throw std::invalid_argument("partition parts must be positive: " + s);
      parts.push_back(p);
      pos = comma == std::string::npos ? body.size() : comma + 1;
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n, optionally capped in length, in lexicographically
// decreasing order starting from (n).
inline std::vector<Partition> partitions_of(int n, int max_parts = -1) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace capelli

#endif
