#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/symfunc.hpp"

using namespace capelli;

namespace {

Rational nfact(int n) {
  Rational f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("power sums") {
  CHECK(power_sum_product(Partition(), 2) ==
        SymPoly<Rational>(2, Rational(1)));
  SymPoly<Rational> p1(2);
  p1.add_term({1, 0}, Rational(1));
  p1.add_term({0, 1}, Rational(1));
  CHECK(power_sum_product(Partition({1}), 2) == p1);
  SymPoly<Rational> p2(2);
  p2.add_term({2, 0}, Rational(1));
  p2.add_term({0, 2}, Rational(1));
  CHECK(power_sum_product(Partition({2, 1}), 2) == p2 * p1);
  CHECK(power_sum_product(Partition({2, 1}), 3).is_symmetric());
}

TEST_CASE("characters") {
  for (const auto& rho : partitions_of(4)) {
    CHECK(character(Partition({4}), rho) == 1);  // trivial character
    // sign character: (-1)^{#even parts}
    int s = 1;
    for (int p : rho.parts())
      if (p % 2 == 0) s = -s;
    CHECK(character(Partition({1, 1, 1, 1}), rho) == s);
  }
  CHECK(character(Partition({1, 1}), Partition({2})) == -1);
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK_THROWS_AS(character(Partition({2}), Partition({3})),
                  std::invalid_argument);
}

TEST_CASE("z_rho and class sizes") {
  CHECK(z_rho(Partition({1, 1, 1})) == Rational(6));
  CHECK(z_rho(Partition({2, 1})) == Rational(2));
  CHECK(z_rho(Partition({3})) == Rational(3));
  for (int m = 1; m <= 5; ++m) {
    Rational total(0);
    for (const auto& rho : partitions_of(m)) total += nfact(m) / z_rho(rho);
    CHECK(total == nfact(m));  // class sizes partition the group
  }
  // z_{2 rho} = 2^{l(rho)} z_rho
  for (int m = 1; m <= 4; ++m)
    for (const auto& rho : partitions_of(m)) {
      Rational two_l(1);
      for (int i = 0; i < rho.length(); ++i) two_l *= 2;
      CHECK(z_rho(doubled(rho)) == two_l * z_rho(rho));
    }
}

TEST_CASE("character orthogonality") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& mu : partitions_of(m))
      for (const auto& lam : partitions_of(m)) {
        Rational total(0);
        for (const auto& rho : partitions_of(m))
          total += Rational(character(mu, rho) * character(lam, rho)) /
                   z_rho(rho);
        CHECK(total == (mu == lam ? Rational(1) : Rational(0)));
      }
  // column orthogonality at m = 3
  for (const auto& rho : partitions_of(3))
    for (const auto& rho2 : partitions_of(3)) {
      Rational total(0);
      for (const auto& mu : partitions_of(3))
        total += Rational(character(mu, rho) * character(mu, rho2));
      CHECK(total == (rho == rho2 ? z_rho(rho) : Rational(0)));
    }
}

TEST_CASE("schur polynomials") {
  CHECK(schur(Partition({1}), 2) == power_sum_product(Partition({1}), 2));
  CHECK(schur(Partition({1, 1}), 1).zero());
  SymPoly<Rational> s2(2);
  s2.add_term({2, 0}, Rational(1));
  s2.add_term({1, 1}, Rational(1));
  s2.add_term({0, 2}, Rational(1));
  CHECK(schur(Partition({2}), 2) == s2);
  // all monomial coefficients of Schur polynomials are non-negative integers
  for (int m = 1; m <= 4; ++m)
    for (const auto& mu : partitions_of(m)) {
      auto s = schur(mu, 3);
      CHECK(s.is_symmetric());
      for (const auto& [e, c] : s.terms()) {
        CHECK(sgn(c) > 0);
        CHECK(c.get_den() == 1);
      }
    }
}

TEST_CASE("factorial schur") {
  // nu=(1), N=2, generic a: y_1 + y_2 - a_1 - a_2
  std::vector<Rational> y{Rational(5), Rational(3)};
  std::vector<Rational> a{Rational(7), Rational(11), Rational(13)};
  CHECK(factorial_schur(Partition({1}), y, a) == Rational(5 + 3 - 7 - 11));
  // nu=(2,1), a=0, y=(2,1): ordinary Schur value 2*1*(2+1) = 6
  std::vector<Rational> zero{Rational(0), Rational(0), Rational(0),
                             Rational(0)};
  CHECK(factorial_schur(Partition({2, 1}),
                        std::vector<Rational>{Rational(2), Rational(1)},
                        zero) == Rational(6));
  // a = 0 reduces to the ordinary Schur polynomial
  for (int m = 1; m <= 3; ++m)
    for (const auto& nu : partitions_of(m)) {
      std::vector<Rational> pt{Rational(2), Rational(-3), Rational(5)};
      CHECK(factorial_schur(nu, pt, std::vector<Rational>(6, Rational(0))) ==
            schur(nu, 3).evaluate(pt));
    }
  // repeated y entries: direct path refuses, perturbation path agrees with
  // the ordinary Schur value at a = 0
  std::vector<Rational> rep{Rational(2), Rational(2)};
  CHECK_THROWS_AS(
      factorial_schur_direct(Partition({2}), rep,
                             std::vector<Rational>(4, Rational(0))),
      std::domain_error);
  CHECK(factorial_schur(Partition({2}), rep,
                        std::vector<Rational>(4, Rational(0))) ==
        schur(Partition({2}), 2).evaluate(rep));
  // symbolic path over Q(u)
  RatFunc u = RatFunc::variable();
  std::vector<RatFunc> ys{u, u - 1};
  auto val = factorial_schur(Partition({1}), ys, natural_shifts<RatFunc>(2));
  CHECK(val == u + u - 1 - 1);  // y1 + y2 - a1 - a2 with a = (0,1)
}

TEST_CASE("plethysm coefficients") {
  CHECK(plethysm_coeff(Partition({1}), Partition({2})) == Rational(1));
  CHECK(plethysm_coeff(Partition({1}), Partition({1, 1})) == Rational(-1));
  // non-domino nu gives zero
  for (int m = 1; m <= 3; ++m)
    for (const auto& mu : partitions_of(m))
      for (const auto& nu : partitions_of(2 * m))
        if (!nu.domino_decomposable())
          CHECK(plethysm_coeff(mu, nu) == Rational(0));
  CHECK_THROWS_AS(plethysm_coeff(Partition({1}), Partition({3})),
                  std::invalid_argument);
}

TEST_CASE("plethysm expansion") {
  auto e = plethysm_expand(Partition({1}), 2);
  CHECK(e.size() == 2);
  CHECK(e.at(Partition({2})) == Rational(1));
  CHECK(e.at(Partition({1, 1})) == Rational(-1));
  CHECK(plethysm_expand(Partition(), 3).at(Partition()) == Rational(1));
  // cross-path equality with plethysm_coeff, m <= 3, N = 6
  for (int m = 1; m <= 3; ++m)
    for (const auto& mu : partitions_of(m)) {
      auto expansion = plethysm_expand(mu, 6);
      for (const auto& nu : partitions_of(2 * m)) {
        if (nu.length() > 6) continue;
        auto it = expansion.find(nu);
        Rational got = it == expansion.end() ? Rational(0) : it->second;
        CHECK(got == plethysm_coeff(mu, nu));
      }
      // no extraneous terms
      for (const auto& [nu, c] : expansion) CHECK(nu.size() == 2 * m);
    }
}
