#ifndef CAPELLI_FREE_ALGEBRA_HPP
#define CAPELLI_FREE_ALGEBRA_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capelli/sparse_matrix.hpp"

namespace capelli {

// Abstract generator symbol g_{i,j}; the meaning of the labels (E_{ij} of
// gl_N, or a canonical F_{ij} of so_N/sp_N) is fixed by the context that
// builds the words, not by the symbol itself.
struct Gen {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

inline std::string to_string(const Gen& g) {
  return "F[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += to_string(w[k]);
  }
  return s;
}

// Element of the free associative algebra on the Gen symbols, with
// coefficients in a commutative ring C. Words multiply by concatenation; no
// commutation relations are ever applied.
template <class C>
class FreeAlgElem {
 public:
  FreeAlgElem() = default;
  explicit FreeAlgElem(int c) {
    if (c != 0) terms_.emplace(Word{}, C(c));
  }
  explicit FreeAlgElem(C c) {
    if (!is_zero(c)) terms_.emplace(Word{}, std::move(c));
  }

  static FreeAlgElem of(Word w, C c) {
    FreeAlgElem e;
    if (!is_zero(c)) e.terms_.emplace(std::move(w), std::move(c));
    return e;
  }
  static FreeAlgElem generator(int i, int j) {
    return of(Word{Gen{i, j}}, C(1));
  }

  const std::map<Word, C>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  C coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }
  int max_word_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max<int>(m, w.size());
    return m;
  }

  void add_term(const Word& w, const C& c) {
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  friend FreeAlgElem operator+(const FreeAlgElem& a, const FreeAlgElem& b) {
    FreeAlgElem out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
  }
  friend FreeAlgElem operator-(const FreeAlgElem& a, const FreeAlgElem& b) {
    return a + C(-1) * b;
  }
  friend FreeAlgElem operator*(const C& s, const FreeAlgElem& e) {
    FreeAlgElem out;
    if (is_zero(s)) return out;
    for (const auto& [w, c] : e.terms_) {
      C p = s * c;
      if (!is_zero(p)) out.terms_.emplace(w, std::move(p));
    }
    return out;
  }
  friend FreeAlgElem operator*(const FreeAlgElem& a, const FreeAlgElem& b) {
    FreeAlgElem out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    return out;
  }
  friend bool operator==(const FreeAlgElem& a, const FreeAlgElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeAlgElem& a, const FreeAlgElem& b) {
    return !(a == b);
  }

  template <class C2, class F>
  FreeAlgElem<C2> map_coefficients(F f) const {
    FreeAlgElem<C2> out;
    for (const auto& [w, c] : terms_) out.add_term(w, f(c));
    return out;
  }

  // Substitute a matrix for every generator: the image of the element under
  // the algebra homomorphism sending g to gen_matrix(g). gen_matrix must
  // return SparseMatrix<C> of the given dimension.
  template <class F>
  SparseMatrix<C> substitute(F gen_matrix, long dim) const {
    SparseMatrix<C> out(dim);
    for (const auto& [w, c] : terms_) {
      SparseMatrix<C> prod = SparseMatrix<C>::identity(dim);
      for (const Gen& g : w) prod = prod * gen_matrix(g);
      out = out + c * prod;
    }
    return out;
  }

 private:
  std::map<Word, C> terms_;
};

template <class C>
bool is_zero(const FreeAlgElem<C>& e) {
  return e.zero();
}

}  // namespace capelli

#endif
