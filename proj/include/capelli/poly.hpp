#ifndef CAPELLI_POLY_HPP
#define CAPELLI_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& at)
      : std::runtime_error("pole at " + at) {}
};

// Dense univariate polynomial over a field K. coeffs[d] is the degree-d
// coefficient; the top coefficient is non-zero unless the poly is zero
// (empty coefficient vector).
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(int c) {  // NOLINT: implicit by design, scalars promote
    if (c != 0) coeffs_.push_back(K(c));
  }
  explicit Poly(K c) {
    if (!is_zero(c)) coeffs_.push_back(std::move(c));
  }
  explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }

  const std::vector<K>& coeffs() const { return coeffs_; }
  bool zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const K& leading() const { return coeffs_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const K& s, const Poly& p) {
    Poly r;
    if (is_zero(s)) return r;
    r.coeffs_ = p.coeffs_;
    for (auto& c : r.coeffs_) c = s * c;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; b must be non-zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("poly division by zero");
    Poly q, r = a;
    std::vector<K> qc(
        a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, K(0));
    while (!r.zero() && r.degree() >= b.degree()) {
      K f = r.coeffs_.back() / b.leading();
      int shift = r.degree() - b.degree();
      qc[shift] = qc[shift] + f;
      for (size_t i = 0; i < b.coeffs_.size(); ++i)
        r.coeffs_[i + shift] = r.coeffs_[i + shift] - f * b.coeffs_[i];
      r.trim();
    }
    q = Poly(std::move(qc));
    return {q, r};
  }

  // Monic gcd by the plain Euclidean algorithm.
  static Poly gcd(Poly a, Poly b) {
    while (!b.zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.zero() && !is_one(a.leading())) {
      K inv = K(1) / a.leading();
      for (auto& c : a.coeffs_) c = inv * c;
    }
    return a;
  }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + T(*it);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<K> coeffs_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.zero();
}
template <class K>
bool is_one(const Poly<K>& p) {
  return p.degree() == 0 && is_one(p.leading());
}

// Reduced fraction of polynomials over K: gcd(num,den)=1 and den monic.
// With K = Rational this is the field Q(u).
template <class K>
class RatF {
 public:
  using coeff_type = K;

  RatF() : num_(), den_(1) {}
  RatF(int c) : num_(c), den_(1) {}  // NOLINT: implicit by design
  explicit RatF(K c) : num_(std::move(c)), den_(1) {}
  explicit RatF(Poly<K> p) : num_(std::move(p)), den_(1) {}
  RatF(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  static RatF variable() { return RatF(Poly<K>::variable()); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool polynomial() const { return is_one(den_); }

  friend RatF operator+(const RatF& a, const RatF& b) {
    return RatF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatF operator-(const RatF& a, const RatF& b) {
    return RatF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatF operator-() const {
    RatF r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RatF operator*(const RatF& a, const RatF& b) {
    // cross-reduce first, keeps intermediate degrees down
    Poly<K> g1 = Poly<K>::gcd(a.num_, b.den_);
    Poly<K> g2 = Poly<K>::gcd(b.num_, a.den_);
    Poly<K> n = Poly<K>::divmod(a.num_, g1).first *
                Poly<K>::divmod(b.num_, g2).first;
    Poly<K> d = Poly<K>::divmod(a.den_, g2).first *
                Poly<K>::divmod(b.den_, g1).first;
    RatF r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.make_monic();
    return r;
  }
  friend RatF operator/(const RatF& a, const RatF& b) {
    if (b.zero()) throw std::domain_error("rational function division by zero");
    RatF inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.make_monic();
    return a * inv;
  }
  friend bool operator==(const RatF& a, const RatF& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatF& a, const RatF& b) { return !(a == b); }

  // Exact value at a point of K; throws PoleError when the (reduced)
  // denominator vanishes there.
  K evaluate(const K& point) const {
    K d = den_.template eval<K>(point);
    if (is_zero(d)) throw PoleError(scalar_repr(point));
    return num_.template eval<K>(point) / d;
  }

  // Finite limit at a point. The fraction is kept reduced at all times, so
  // a removable singularity has already been cancelled; what is left is
  // either a finite value or a genuine pole.
  K limit_at(const K& point) const { return evaluate(point); }

 private:
  static std::string scalar_repr(const K& point) {
    if constexpr (std::is_same_v<K, Rational>) {
      return to_string(point);
    } else {
      (void)point;
      return "(coefficient-field point)";
    }
  }
  void reduce() {
    if (den_.zero()) throw std::domain_error("zero denominator");
    if (num_.zero()) {
      den_ = Poly<K>(1);
      return;
    }
    Poly<K> g = Poly<K>::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly<K>::divmod(num_, g).first;
      den_ = Poly<K>::divmod(den_, g).first;
    }
    make_monic();
  }
  void make_monic() {
    if (num_.zero()) {
      den_ = Poly<K>(1);
      return;
    }
    if (!is_one(den_.leading())) {
      K inv = K(1) / den_.leading();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }
  Poly<K> num_, den_;
};

template <class K>
bool is_zero(const RatF<K>& f) {
  return f.zero();
}
template <class K>
bool is_one(const RatF<K>& f) {
  return f.polynomial() && is_one(f.num());
}

// The field Q(u) in which all single-variable computations live; nested
// instantiations like RatF<RatFunc> provide further independent variables.
using RatFunc = RatF<Rational>;

// Embed a rational constant into any field of the RatF tower.
template <class K>
K field_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<K, Rational>)
    return r;
  else
    return K(field_from_rational<typename K::coeff_type>(r));
}

}  // namespace capelli

#endif
