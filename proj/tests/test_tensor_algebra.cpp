#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capelli/free_algebra.hpp"
#include "capelli/symfunc.hpp"
#include "capelli/tensor_ops.hpp"
#include "capelli/young.hpp"

using namespace capelli;

namespace {

RatFunc lift(const Rational& r) { return RatFunc(r); }

SparseMatrix<RatFunc> lift_matrix(const SparseMatrix<Rational>& m) {
  return map_entries<RatFunc>(m, [](const Rational& r) { return lift(r); });
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("index scheme") {
  IndexScheme s4 = IndexScheme::signed_set(4);
  CHECK(s4.labels() == std::vector<int>{-2, -1, 1, 2});
  IndexScheme s3 = IndexScheme::signed_set(3);
  CHECK(s3.labels() == std::vector<int>{-1, 0, 1});
  for (int l : s3.labels()) {
    CHECK(s3.label(s3.position(l)) == l);
    CHECK(s3.valid(-l));  // negation is an involution on the label set
  }
  CHECK(IndexScheme::plain(3).labels() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(s4.position(0), std::out_of_range);
  // row-major encoding round trip
  CHECK(s4.encode({-2, 2}) == 3);
  CHECK(s4.decode(3, 2) == std::vector<int>{-2, 2});
  for (long i = 0; i < s3.dim(2); ++i) CHECK(s3.encode(s3.decode(i, 2)) == i);
}

TEST_CASE("sparse matrix basics") {
  SparseMatrix<Rational> a(3);
  a.set(0, 1, Rational(2));
  a.set(1, 0, Rational(3));
  a.set(2, 2, Rational(-1));
  CHECK(a.get(0, 1) == Rational(2));
  CHECK(a.get(0, 0) == Rational(0));
  a.add(0, 1, Rational(-2));
  CHECK(a.get(0, 1) == Rational(0));
  CHECK(a.nonzeros() == 2);
  a.set(0, 1, Rational(2));
  auto id = SparseMatrix<Rational>::identity(3);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK((a - a).zero());
  CHECK((a * a).get(0, 0) == Rational(6));
  CHECK(a.trace() == Rational(-1));
  CHECK(a.apply({Rational(0), Rational(1), Rational(0)})[0] == Rational(2));
  CHECK_THROWS_AS(a.set(3, 0, Rational(1)), std::out_of_range);
}

TEST_CASE("joint kernel") {
  // x + y = 0, y + z = 0 has one-dimensional kernel (1, -1, 1)
  SparseMatrix<Rational> m(3);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(1));
  m.set(1, 1, Rational(1));
  m.set(1, 2, Rational(1));
  auto basis = joint_kernel<Rational>({m}, 3);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(-1),
                                          Rational(1)});
  // kernel vectors are annihilated
  for (const auto& v : basis)
    for (const auto& x : m.apply(v)) CHECK(is_zero(x));
  CHECK(joint_kernel<Rational>({SparseMatrix<Rational>::identity(3)}, 3)
            .empty());
  CHECK(joint_kernel<Rational>({SparseMatrix<Rational>(3)}, 3).size() == 3);
}

TEST_CASE("exchange operator P") {
  for (int N = 2; N <= 4; ++N) {
    auto P = exchange_P<Rational>(N);
    CHECK(P * P == SparseMatrix<Rational>::identity(N * N));
    CHECK(P.trace() == Rational(N));
  }
  // N=2 signed labels (-1, 1): P(e_1 (x) e_{-1}) = e_{-1} (x) e_1
  IndexScheme s = IndexScheme::signed_set(2);
  auto P = exchange_P<Rational>(2);
  CHECK(P.get(s.encode({-1, 1}), s.encode({1, -1})) == Rational(1));
}

TEST_CASE("twist operator Q") {
  for (int N = 2; N <= 4; ++N)
    for (Kind kind : {Kind::orthogonal, Kind::symplectic}) {
      if (kind == Kind::symplectic && N % 2) {
        CHECK_THROWS_AS(twist_Q<Rational>(N, kind), std::invalid_argument);
        continue;
      }
      auto P = exchange_P<Rational>(N);
      auto Q = twist_Q<Rational>(N, kind);
      Rational sign(kind == Kind::orthogonal ? 1 : -1);
      CHECK(P * Q == sign * Q);
      CHECK(Q * P == sign * Q);
      CHECK(Q * Q == Rational(N) * Q);
      // Q is the partial transpose of P in either factor
      CHECK(partial_transpose(P, N, 2, 1, kind) == Q);
      CHECK(partial_transpose(P, N, 2, 2, kind) == Q);
      // partial transpose is an involution
      CHECK(partial_transpose(Q, N, 2, 1, kind) == P);
      CHECK(partial_transpose(partial_transpose(Q, N, 2, 2, kind), N, 2, 2,
                              kind) == Q);
    }
}

TEST_CASE("embed") {
  int N = 2;
  auto P = exchange_P<Rational>(N);
  CHECK(embed(SparseMatrix<Rational>::identity(N), N, 2, {2}) ==
        SparseMatrix<Rational>::identity(N * N));
  // embed(P, n=3, (1,3)): e_a (x) e_b (x) e_c -> e_c (x) e_b (x) e_a
  auto P13 = embed(P, N, 3, {1, 3});
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        CHECK(P13.get((c * N + b) * N + a, (a * N + b) * N + c) ==
              Rational(1));
  CHECK(P13.nonzeros() == 8);
  // embed(Q, n=2, (2,1)) equals P * Q_{12} * P
  for (Kind kind : {Kind::orthogonal, Kind::symplectic}) {
    auto Q = twist_Q<Rational>(N, kind);
    CHECK(embed(Q, N, 2, {2, 1}) == P * Q * P);
  }
  CHECK_THROWS_AS(embed(P, N, 3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(embed(P, N, 3, {0, 2}), std::out_of_range);
  CHECK_THROWS_AS(embed(P, N, 1, {1}), std::invalid_argument);
}

TEST_CASE("permutation matrices") {
  int N = 2;
  CHECK(permutation_matrix<Rational>(Permutation::identity(2), N) ==
        SparseMatrix<Rational>::identity(N * N));
  CHECK(permutation_matrix<Rational>(Permutation::transposition(2, 1, 2), N) ==
        exchange_P<Rational>(N));
  // homomorphism on random pairs, n <= 4, N <= 3
  std::mt19937 rng(20240824);
  for (int n = 2; n <= 4; ++n)
    for (int NN = 2; NN <= 3; ++NN)
      for (int trial = 0; trial < 3; ++trial) {
        Permutation p = random_permutation(n, rng);
        Permutation q = random_permutation(n, rng);
        CHECK(permutation_matrix<Rational>(p * q, NN) ==
              permutation_matrix<Rational>(p, NN) *
                  permutation_matrix<Rational>(q, NN));
      }
  // trace = N^{#cycles}
  for (int n = 2; n <= 3; ++n)
    for (const auto& p : all_permutations(n)) {
      Partition type = p.cycle_type();
      Rational expect(1);
      for (int i = 0; i < type.length(); ++i) expect *= 3;
      CHECK(trace_out(permutation_matrix<Rational>(p, 3)) == expect);
    }
}

TEST_CASE("Y_T projectors") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 2; N <= 3; ++N)
      for (const auto& nu : partitions_of(n))
        for (const auto& t : standard_tableaux(nu)) {
          auto Y = permutation_matrix<Rational>(young_idempotent(t), N);
          CHECK(Y * Y == Y);
          // rank of the idempotent = dim U_nu = s_nu(1,...,1)
          std::vector<Rational> ones(N, Rational(1));
          CHECK(Y.trace() == schur(nu, N).evaluate(ones));
        }
}

TEST_CASE("rational R matrices") {
  RatFunc u = RatFunc::variable();
  RatFunc v = u + 5;
  for (int N = 2; N <= 3; ++N) {
    auto [R, Rt] = rational_R(u, v, N, Kind::orthogonal);
    auto [Rvu, Rt2] = rational_R(v, u, N, Kind::orthogonal);
    RatFunc c = 1 - RatFunc(1) / ((u - v) * (u - v));
    CHECK(R * Rvu == c * SparseMatrix<RatFunc>::identity(N * N));
    // R corresponds to phi_12(u,v) under the permutation action
    auto phi = baxterized<Rational>(1, 2, u, v, 2);
    CHECK(permutation_matrix(phi, N) == R);
  }
  // Yang-Baxter at N=2
  {
    int N = 2;
    RatFunc w = u - 3;
    auto R12 = embed(rational_R(u, v, N, Kind::orthogonal).first, N, 3, {1, 2});
    auto R13 = embed(rational_R(u, w, N, Kind::orthogonal).first, N, 3, {1, 3});
    auto R23 = embed(rational_R(v, w, N, Kind::orthogonal).first, N, 3, {2, 3});
    CHECK(R12 * R13 * R23 == R23 * R13 * R12);
  }
  CHECK_THROWS_AS(rational_R(u, u, 2, Kind::orthogonal), std::domain_error);
  CHECK_THROWS_AS(rational_R(u, -u, 2, Kind::orthogonal), std::domain_error);
}

TEST_CASE("free algebra") {
  using F = FreeAlgElem<RatFunc>;
  F a = F::generator(1, 2);
  F b = F::generator(2, 1);
  CHECK(a * b != b * a);  // no commutation relations
  CHECK((a * b).max_word_length() == 2);
  CHECK((a + b - a) == b);
  F one(1);
  CHECK(one * a == a);
  CHECK((RatFunc(0) * a).zero());
  CHECK(a.coeff(Word{Gen{1, 2}}) == RatFunc(1));
  CHECK(to_string(Word{Gen{1, 2}, Gen{-1, 0}}) == "F[1,2]*F[-1,0]");
  // substitution is an algebra homomorphism into matrices
  auto gen_matrix = [](const Gen& g) {
    SparseMatrix<RatFunc> m(2);
    m.set(0, 0, RatFunc(g.i));
    m.set(0, 1, RatFunc(1));
    m.set(1, 1, RatFunc(g.j));
    return m;
  };
  F x = a * b + RatFunc(3) * b;
  F y = b * a - one;
  CHECK(x.substitute(gen_matrix, 2) * y.substitute(gen_matrix, 2) ==
        (x * y).substitute(gen_matrix, 2));
}

TEST_CASE("trace with free-algebra entries") {
  using F = FreeAlgElem<RatFunc>;
  int N = 2, n = 2;
  Word w{Gen{1, 1}, Gen{-1, 1}};
  auto m = map_entries<F>(
      SparseMatrix<Rational>::identity(4),
      [&](const Rational& r) { return F::of(w, RatFunc(r)); });
  F tr = trace_out(m);
  CHECK(tr == F::of(w, RatFunc(Rational(N * n))));
}

TEST_CASE("traceless subspace and Lemma 2.3 compatibility") {
  // For N=2,3 (orthogonal) and N=2 (symplectic), m=2: the action of
  // Etilde(eta-u) E(eta+u) / (u-eta) on C^N (x) V equals the action of
  // F(u) = Sum P_{1,p+1} - Sum Q_{1,p+1} - u - eta there, where V is the
  // joint kernel of the form contractions Q_{pq} on slots 2..m+1.
  RatFunc u = RatFunc::variable();
  struct Case {
    int N;
    Kind kind;
  };
  for (Case cs : {Case{2, Kind::orthogonal}, Case{3, Kind::orthogonal},
                  Case{2, Kind::symplectic}}) {
    int N = cs.N, m = 2, n = m + 1;
    RatFunc eta(Rational(cs.kind == Kind::orthogonal ? 1 : -1, 2));
    auto P = lift_matrix(exchange_P<Rational>(N));
    auto Q = lift_matrix(twist_Q<Rational>(N, cs.kind));
    SparseMatrix<RatFunc> sumP(detail::pow_long(N, n)),
        sumQ(detail::pow_long(N, n));
    for (int p = 2; p <= n; ++p) {
      sumP = sumP + embed(P, N, n, {1, p});
      sumQ = sumQ + embed(Q, N, n, {1, p});
    }
    auto id = SparseMatrix<RatFunc>::identity(detail::pow_long(N, n));
    // images of Etilde(eta-u) and E(eta+u) under the standard representation
    auto etilde = sumQ - (eta - u) * id;
    auto ecur = sumP - (eta + u) * id;
    auto lhs = (RatFunc(1) / (u - eta)) * (etilde * ecur);
    auto rhs = sumP - sumQ - (u + eta) * id;
    // traceless subspace of the last m factors
    auto Qpq = twist_Q<Rational>(N, cs.kind);
    auto V = joint_kernel<Rational>({Qpq}, N * N);
    CHECK(V.size() == static_cast<size_t>(N * N - 1));
    for (int a = 0; a < N; ++a)
      for (const auto& v : V) {
        std::vector<RatFunc> w(detail::pow_long(N, n), RatFunc(0));
        for (int k = 0; k < N * N; ++k) w[a * N * N + k] = lift(v[k]);
        CHECK(lhs.apply(w) == rhs.apply(w));
      }
  }
}
