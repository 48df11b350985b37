#ifndef CAPELLI_GROUP_ALGEBRA_HPP
#define CAPELLI_GROUP_ALGEBRA_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "capelli/partition.hpp"
#include "capelli/permutation.hpp"
#include "capelli/poly.hpp"

namespace capelli {

// Sparse element of K.S_n: permutation -> coefficient, no zeros stored.
template <class K>
class GroupAlgElem {
 public:
  explicit GroupAlgElem(int n) : n_(n) {}

  static GroupAlgElem identity(int n) {
    GroupAlgElem e(n);
    e.add(Permutation::identity(n), K(1));
    return e;
  }
  static GroupAlgElem of(const Permutation& p, K c = K(1)) {
    GroupAlgElem e(p.degree());
    e.add(p, std::move(c));
    return e;
  }

  int degree() const { return n_; }
  const std::map<Permutation, K>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  void add(const Permutation& p, const K& c) {
    if (p.degree() != n_) throw std::invalid_argument("degree mismatch");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      if (!is_zero(c)) terms_.emplace(p, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? K(0) : it->second;
  }

  friend GroupAlgElem operator+(const GroupAlgElem& a, const GroupAlgElem& b) {
    check(a, b);
    GroupAlgElem r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, c);
    return r;
  }
  friend GroupAlgElem operator-(const GroupAlgElem& a, const GroupAlgElem& b) {
    check(a, b);
    GroupAlgElem r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, -c);
    return r;
  }
  friend GroupAlgElem operator*(const K& s, const GroupAlgElem& a) {
    GroupAlgElem r(a.n_);
    if (is_zero(s)) return r;
    for (const auto& [p, c] : a.terms_) r.add(p, s * c);
    return r;
  }
  // Convolution: bilinear extension of group multiplication.
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
    check(a, b);
    GroupAlgElem r(a.n_);
    for (const auto& [p, cp] : a.terms_)
      for (const auto& [q, cq] : b.terms_) r.add(p * q, cp * cq);
    return r;
  }
  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgElem& a, const GroupAlgElem& b) {
    return !(a == b);
  }

  // Pushes every permutation through an injective relabeling into S_m.
  template <class F>
  GroupAlgElem embed(int m, F&& relabel) const {
    GroupAlgElem r(m);
    for (const auto& [p, c] : terms_) {
      Permutation q = Permutation::identity(m);
      std::vector<int> im = q.images();
      for (int x = 1; x <= n_; ++x) im[relabel(x) - 1] = relabel(p(x));
      r.add(Permutation(std::move(im)), c);
    }
    return r;
  }

  template <class K2, class F>
  GroupAlgElem<K2> map_coefficients(F&& f) const {
    GroupAlgElem<K2> r(n_);
    for (const auto& [p, c] : terms_) r.add(p, f(c));
    return r;
  }

  // Sum of coefficients over each conjugacy class.
  std::map<Partition, K> conjugacy_data() const {
    std::map<Partition, K> out;
    for (const auto& [p, c] : terms_) {
      Partition t = p.cycle_type();
      auto it = out.find(t);
      if (it == out.end())
        out.emplace(t, c);
      else
        it->second = it->second + c;
    }
    return out;
  }

 private:
  static void check(const GroupAlgElem& a, const GroupAlgElem& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("degree mismatch");
  }
  int n_;
  std::map<Permutation, K> terms_;
};

// Jucys-Murphy element z_p = (1,p)+...+(p-1,p); z_1 = 0.
template <class K>
GroupAlgElem<K> jucys_murphy(int p, int n) {
  if (p < 1 || p > n) throw std::out_of_range("jucys_murphy index");
  GroupAlgElem<K> z(n);
  for (int q = 1; q < p; ++q) z.add(Permutation::transposition(n, q, p), K(1));
  return z;
}

// Baxterized element phi_pq(u,v) = 1 - (p,q)/(u-v) over the fraction field.
template <class K>
GroupAlgElem<RatF<K>> baxterized(int p, int q, const RatF<K>& u,
                                 const RatF<K>& v, int n) {
  if (p == q) throw std::invalid_argument("baxterized needs p != q");
  if (u == v) throw std::domain_error("baxterized at u = v");
  GroupAlgElem<RatF<K>> r = GroupAlgElem<RatF<K>>::identity(n);
  r.add(Permutation::transposition(n, p, q), -(RatF<K>(1) / (u - v)));
  return r;
}

}  // namespace capelli

#endif
