#ifndef CAPELLI_SYMFUNC_HPP
#define CAPELLI_SYMFUNC_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "capelli/characters.hpp"
#include "capelli/poly.hpp"

namespace capelli {

// Polynomial in a fixed number of variables, sparse in the monomial basis.
// Used for elements of Lambda_M; symmetry is a property of how instances are
// built (power sums, Schur polynomials), checkable via is_symmetric().
template <class K>
class SymPoly {
 public:
  explicit SymPoly(int vars) : vars_(vars) {}
  SymPoly(int vars, const K& c) : vars_(vars) {
    add_term(std::vector<int>(vars, 0), c);
  }

  int vars() const { return vars_; }
  const std::map<std::vector<int>, K>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& expo, const K& c) {
    if (static_cast<int>(expo.size()) != vars_)
      throw std::invalid_argument("exponent vector length mismatch");
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
      if (!is_zero(c)) terms_.emplace(expo, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? K(0) : it->second;
  }

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    check(a, b);
    SymPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    check(a, b);
    SymPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend SymPoly operator*(const K& s, const SymPoly& a) {
    SymPoly r(a.vars_);
    if (is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    check(a, b);
    SymPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(a.vars_);
        for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) {
    return !(a == b);
  }

  // Substitute x_i -> x_i^2.
  SymPoly squared_vars() const {
    SymPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> d(e);
      for (auto& x : d) x *= 2;
      r.add_term(d, c);
    }
    return r;
  }

  // Same polynomial inside a larger variable set, variables shifted by
  // `offset` positions.
  SymPoly embed_vars(int total, int offset) const {
    SymPoly r(total);
    for (const auto& [e, c] : terms_) {
      std::vector<int> d(total, 0);
      for (int i = 0; i < vars_; ++i) d[offset + i] = e[i];
      r.add_term(d, c);
    }
    return r;
  }

  template <class K2, class F>
  SymPoly<K2> map_coefficients(F&& f) const {
    SymPoly<K2> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  K evaluate(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != vars_)
      throw std::invalid_argument("evaluation point length mismatch");
    K total(0);
    for (const auto& [e, c] : terms_) {
      K m = c;
      for (int i = 0; i < vars_; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * point[i];
      total = total + m;
    }
    return total;
  }

  bool is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i)
      for (const auto& [e, c] : terms_) {
        std::vector<int> s(e);
        std::swap(s[i], s[i + 1]);
        if (coeff(s) != c) return false;
      }
    return true;
  }

 private:
  static void check(const SymPoly& a, const SymPoly& b) {
    if (a.vars_ != b.vars_)
      throw std::invalid_argument("variable count mismatch");
  }
  int vars_;
  std::map<std::vector<int>, K> terms_;
};

template <class K>
bool is_zero(const SymPoly<K>& p) {
  return p.zero();
}

// p_rho(x_1..x_M) = prod_k (x_1^{rho_k} + ... + x_M^{rho_k}).
inline SymPoly<Rational> power_sum_product(const Partition& rho, int vars) {
  SymPoly<Rational> r(vars, Rational(1));
  for (int part : rho.parts()) {
    SymPoly<Rational> p(vars);
    for (int i = 0; i < vars; ++i) {
      std::vector<int> e(vars, 0);
      e[i] = part;
      p.add_term(e, Rational(1));
    }
    r = r * p;
  }
  return r;
}

// Schur polynomial through the character expansion s_mu = sum_rho
// chi_mu^rho p_rho / z_rho.
inline SymPoly<Rational> schur(const Partition& mu, int vars) {
  SymPoly<Rational> r(vars);
  for (const auto& rho : partitions_of(mu.size())) {
    long long chi = character(mu, rho);
    if (chi == 0) continue;
    r = r + (Rational(static_cast<long>(chi)) / z_rho(rho)) *
                power_sum_product(rho, vars);
  }
  if (mu.empty()) r = SymPoly<Rational>(vars, Rational(1));
  return r;
}

// L_{mu nu} = sum_rho chi_mu^rho chi_nu^{2 rho} / z_rho  (plethysm of s_mu
// with the squared power sum, expanded in the Schur basis).
inline Rational plethysm_coeff(const Partition& mu, const Partition& nu) {
  if (nu.size() != 2 * mu.size())
    throw std::invalid_argument("plethysm_coeff: |nu| != 2|mu|");
  Rational total(0);
  for (const auto& rho : partitions_of(mu.size())) {
    long long a = character(mu, rho);
    if (a == 0) continue;
    long long b = character(nu, doubled(rho));
    if (b == 0) continue;
    total += Rational(static_cast<long>(a)) * Rational(static_cast<long>(b)) /
             z_rho(rho);
  }
  return total;
}

// Full expansion of s_mu(x_1^2, ..., x_N^2) in the Schur basis, by peeling
// off leading monomials: the lex-greatest exponent vector of a symmetric
// polynomial is a partition lambda, and s_lambda = m_lambda + lex-lower.
inline std::map<Partition, Rational> plethysm_expand(const Partition& mu,
                                                     int N) {
  SymPoly<Rational> rest = schur(mu, N).squared_vars();
  std::map<Partition, Rational> out;
  if (mu.empty()) {
    out[Partition()] = Rational(1);
    return out;
  }
  while (!rest.zero()) {
    auto lead = rest.terms().rbegin();  // lex-greatest exponent vector
    std::vector<int> e = lead->first;
    Rational c = lead->second;
    Partition lambda(e);  // throws unless weakly decreasing, as it must be
    out[lambda] = c;
    rest = rest - c * schur(lambda, N);
  }
  return out;
}

namespace detail {

template <class K>
K determinant(std::vector<std::vector<K>> m) {
  int d = static_cast<int>(m.size());
  K det(1);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (!is_zero(m[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) return K(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    K inv = K(1) / m[col][col];
    for (int r = col + 1; r < d; ++r) {
      if (is_zero(m[r][col])) continue;
      K f = m[r][col] * inv;
      for (int c = col; c < d; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

// Generalized factorial power (y | a)^k = (y - a_1) ... (y - a_k).
template <class K>
K factorial_power(const K& y, const std::vector<K>& a, int k) {
  K r(1);
  for (int i = 0; i < k; ++i) r = r * (y - a[i]);
  return r;
}

}  // namespace detail

// Factorial Schur polynomial value: det[(y_j|a)^{nu_i + N - i}] divided by
// det[(y_j|a)^{N-i}]. Requires pairwise distinct y (the denominator is the
// Vandermonde determinant in y, independent of a); a must supply at least
// nu_1 + N - 1 shifts.
template <class K>
K factorial_schur_direct(const Partition& nu, const std::vector<K>& y,
                         const std::vector<K>& a) {
  int N = static_cast<int>(y.size());
  if (nu.length() > N)
    throw std::invalid_argument("factorial_schur: too many rows");
  if (static_cast<int>(a.size()) < nu.part(0) + N - 1)
    throw std::invalid_argument("factorial_schur: shift sequence too short");
  std::vector<std::vector<K>> num(N, std::vector<K>(N, K(0)));
  std::vector<std::vector<K>> den(N, std::vector<K>(N, K(0)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      num[i][j] = detail::factorial_power(y[j], a, nu.part(i) + N - 1 - i);
      den[i][j] = detail::factorial_power(y[j], a, N - 1 - i);
    }
  K d = detail::determinant(den);
  if (is_zero(d))
    throw std::domain_error(
        "factorial_schur: repeated y entries; use the perturbation path "
        "(factorial_schur handles this automatically)");
  return detail::determinant(num) / d;
}

// Same value, tolerating repeated y entries: perturb y_j -> y_j + j t over
// the extension field K(t), then take the limit t -> 0.
template <class K>
K factorial_schur(const Partition& nu, const std::vector<K>& y,
                  const std::vector<K>& a) {
  try {
    return factorial_schur_direct(nu, y, a);
  } catch (const std::domain_error&) {
    using K2 = RatF<K>;
    K2 t = K2::variable();
    std::vector<K2> y2, a2;
    for (size_t j = 0; j < y.size(); ++j)
      y2.push_back(K2(y[j]) + K2(static_cast<int>(j) + 1) * t);
    for (const K& x : a) a2.push_back(K2(x));
    return factorial_schur_direct(nu, y2, a2).limit_at(K(0));
  }
}

// The shift sequence a = (0, 1, 2, ...) of Prop. 1.2, as field elements.
template <class K>
std::vector<K> natural_shifts(int count) {
  std::vector<K> a;
  for (int i = 0; i < count; ++i) a.push_back(K(i));
  return a;
}

}  // namespace capelli

#endif
