#ifndef CAPELLI_CHARACTERS_HPP
#define CAPELLI_CHARACTERS_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "capelli/partition.hpp"
#include "capelli/rational.hpp"

namespace capelli {

// z_rho = prod rho_i * prod (multiplicity_j)!, so that the conjugacy class
// of cycle type rho in S_m has m!/z_rho elements.
inline Rational z_rho(const Partition& rho) {
  Rational z(1);
  std::map<int, int> mult;
  for (int p : rho.parts()) {
    z *= p;
    ++mult[p];
  }
  for (auto [part, k] : mult)
    for (int i = 2; i <= k; ++i) z *= i;
  return z;
}

// Doubled partition 2*rho = (2 rho_1, 2 rho_2, ...).
inline Partition doubled(const Partition& rho) {
  std::vector<int> parts;
  for (int p : rho.parts()) parts.push_back(2 * p);
  return Partition(std::move(parts));
}

namespace detail {

// Murnaghan-Nakayama recursion in beta-number form: removing a border strip
// of length l means replacing some beta number b by b - l (which must be
// fresh and non-negative); the height of the strip is the number of beta
// numbers lying strictly between b - l and b.
inline long mn_character(const Partition& mu, const std::vector<int>& rho,
                              size_t k) {
  if (k == rho.size()) return mu.empty() ? 1 : 0;
  if (mu.empty()) return 0;
  int l = rho[k];
  int L = mu.length();
  std::vector<int> beta(L);  // strictly decreasing
  for (int i = 0; i < L; ++i) beta[i] = mu.part(i) + (L - 1 - i);
  long total = 0;
  for (int i = 0; i < L; ++i) {
    int target = beta[i] - l;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts(L);
    for (int j = 0; j < L; ++j) parts[j] = nb[j] - (L - 1 - j);
    total += (height % 2 ? -1 : 1) *
             mn_character(Partition(std::move(parts)), rho, k + 1);
  }
  return total;
}

}  // namespace detail

// chi_mu^rho: value of the irreducible character chi_mu of S_m on the
// conjugacy class of cycle type rho.
inline long character(const Partition& mu, const Partition& rho) {
  if (mu.size() != rho.size())
    throw std::invalid_argument("character: |mu| != |rho|");
  return detail::mn_character(mu, rho.parts(), 0);
}

}  // namespace capelli

#endif
