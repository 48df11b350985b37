#ifndef CAPELLI_VERIFY_HPP
#define CAPELLI_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "capelli/capelli_gl.hpp"
#include "capelli/fusion.hpp"
#include "capelli/hyperoctahedral.hpp"
#include "capelli/leading_symbol.hpp"

namespace capelli {

// One verification case outcome. witness is non-empty exactly when the case
// failed (it carries a textual counterexample or error).
struct VerdictRecord {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string witness;
  long elapsed_ms = 0;
};

// Bounds for the suite enumerations; -1 keeps the acceptance defaults.
struct VerifyBounds {
  int max_n = -1;
  int max_N = -1;
  bool slow = false;
};

namespace detail {

// A pending case: run() returns an empty string on pass, a witness on fail.
struct VerifyCase {
  std::string suite;
  std::string name;
  std::function<std::string()> run;
};

inline int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("CAPELLI_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1 && v < hw) hw = v;
  }
  return hw;
}

// Case-parallel execution; records come back in submission (canonical)
// order regardless of completion order.
inline std::vector<VerdictRecord> run_cases(std::vector<VerifyCase> cases) {
  std::vector<VerdictRecord> out(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      VerdictRecord& r = out[i];
      r.suite = cases[i].suite;
      r.name = cases[i].name;
      auto start = std::chrono::steady_clock::now();
      try {
        r.witness = cases[i].run();
      } catch (const std::exception& e) {
        r.witness = std::string("exception: ") + e.what();
      }
      r.pass = r.witness.empty();
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    }
  };
  int nthreads = thread_cap();
  if (nthreads > static_cast<int>(cases.size()))
    nthreads = static_cast<int>(cases.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline std::string kind_name(Kind k) {
  return k == Kind::orthogonal ? "so" : "sp";
}

inline std::vector<RatFunc> lift_vector(const std::vector<Rational>& v) {
  std::vector<RatFunc> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(RatFunc(x));
  return out;
}

inline GroupAlgElem<RatFunc> lift_group(const GroupAlgElem<Rational>& x) {
  return x.map_coefficients<RatFunc>(
      [](const Rational& r) { return RatFunc(r); });
}

}  // namespace detail

// Thm 1.8: the fusion construction reproduces the matrix-element idempotent
// for every standard tableau with n boxes, n up to the bound (default 4).
inline std::vector<detail::VerifyCase> fusion_cases(const VerifyBounds& b) {
  int max_n = b.max_n < 0 ? 4 : b.max_n;
  std::vector<detail::VerifyCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& nu : partitions_of(n)) {
      cases.push_back(
          {"fusion", "shape " + nu.to_string(), [nu]() -> std::string {
             auto tabs = standard_tableaux(nu);
             for (size_t i = 0; i < tabs.size(); ++i)
               if (fusion_idempotent(tabs[i]) != young_idempotent(tabs[i]))
                 return "fusion != matrix element for tableau #" +
                        std::to_string(i);
             return "";
           }});
    }
  return cases;
}

// The gl_N Capelli suite: tableau independence of Eq. (1.3), centrality,
// the factorial Schur eigenvalue law as an identity in u, and the
// vanishing law.
inline std::vector<detail::VerifyCase> gl_cases(const VerifyBounds& b) {
  int max_n = b.max_n < 0 ? 3 : b.max_n;
  int max_N = b.max_N < 0 ? 3 : b.max_N;
  std::vector<detail::VerifyCase> cases;
  for (int N = 2; N <= max_N; ++N)
    for (int n = 1; n <= max_n; ++n)
      for (const auto& nu : partitions_of(n)) {
        if (nu.length() > N) continue;
        std::string tag = "nu=" + nu.to_string() + " N=" + std::to_string(N);
        cases.push_back(
            {"gl", "independence+centrality " + tag, [nu, N]() -> std::string {
               GlContext ctx(N);
               auto tabs = standard_tableaux(nu);
               GlElem c = capelli_element(tabs[0], ctx);
               for (int k = 1; k <= 3; ++k) {
                 auto img = act_in_tensor_power(c, k, ctx);
                 for (int i = 1; i <= N; ++i)
                   for (int j = 1; j <= N; ++j) {
                     auto g = gl_generator_action(i, j, N, k);
                     if (img * g != g * img)
                       return "not central against E_" + std::to_string(i) +
                              std::to_string(j) + " at k=" + std::to_string(k);
                   }
                 if (k <= 2)
                   for (size_t t = 1; t < tabs.size(); ++t)
                     if (act_in_tensor_power(capelli_element(tabs[t], ctx), k,
                                             ctx) != img)
                       return "tableau #" + std::to_string(t) +
                              " differs at k=" + std::to_string(k);
               }
               return "";
             }});
        cases.push_back(
            {"gl", "eigenvalues " + tag, [nu, N, n]() -> std::string {
               GlContext ctx(N);
               RatFunc u = RatFunc::variable();
               GlElem s = shifted_capelli(column_tableau(nu), ctx);
               for (int k = 1; k <= 3; ++k) {
                 auto img = act_in_tensor_power(s, k, ctx);
                 for (const auto& lam : partitions_of(k)) {
                   if (lam.length() > N) continue;
                   RatFunc eig = capelli_eigenvalue(nu, lam, N, u);
                   for (const auto& wv :
                        highest_weight_vectors(lam, k, ctx)) {
                     auto v = detail::lift_vector(wv.coords);
                     auto got = img.apply(v);
                     for (long idx = 0; idx < img.dim(); ++idx)
                       if (got[idx] != eig * v[idx])
                         return "eigenvalue law fails on lambda=" +
                                lam.to_string() + " k=" + std::to_string(k);
                   }
                 }
               }
               for (int k = 0; k <= n; ++k)
                 for (const auto& lam : partitions_of(k)) {
                   if (lam.length() > N) continue;
                   RatFunc e = capelli_eigenvalue(nu, lam, N, RatFunc(0));
                   if ((lam == nu) == is_zero(e))
                     return "vanishing law fails at lambda=" + lam.to_string();
                 }
               return "";
             }});
      }
  return cases;
}

// Eq. (2.5) at representation level plus the gl auxiliaries (2.81)-(2.84).
inline std::vector<detail::VerifyCase> reflection_cases(const VerifyBounds&) {
  std::vector<detail::VerifyCase> cases;
  for (auto [N, kind] : std::vector<std::pair<int, Kind>>{
           {2, Kind::orthogonal},
           {3, Kind::orthogonal},
           {2, Kind::symplectic},
           {4, Kind::symplectic}})
    for (int k = 1; k <= 2; ++k)
      cases.push_back({"reflection",
                       "eq2.5 N=" + std::to_string(N) + " " +
                           detail::kind_name(kind) + " k=" + std::to_string(k),
                       [N, kind = kind, k]() -> std::string {
                         return reflection_equation_check(OspContext(N, kind),
                                                          k)
                                    ? ""
                                    : "reflection equation fails";
                       }});
  for (auto [N, kind] : std::vector<std::pair<int, Kind>>{
           {2, Kind::orthogonal}, {3, Kind::orthogonal}, {2, Kind::symplectic}})
    for (int k = 1; k <= 2; ++k)
      cases.push_back({"reflection",
                       "aux2.81-84 N=" + std::to_string(N) + " " +
                           detail::kind_name(kind) + " k=" + std::to_string(k),
                       [N, kind = kind, k]() -> std::string {
                         return gl_aux_relations_check(N, kind, k)
                                    ? ""
                                    : "auxiliary relation fails";
                       }});
  return cases;
}

// Z_nu(u) structural suite: Prop. 2.6, Thm 2.7 tableau independence,
// Prop. 2.5 invariance, and the word-length bound.
inline std::vector<detail::VerifyCase> znu_cases(const VerifyBounds& b) {
  int max_n = b.max_n < 0 ? 3 : (b.max_n < 3 ? b.max_n : 3);
  int max_N = b.max_N < 0 ? 3 : (b.max_N < 3 ? b.max_N : 3);
  std::vector<detail::VerifyCase> cases;
  for (auto [N, kind] : std::vector<std::pair<int, Kind>>{
           {2, Kind::orthogonal}, {3, Kind::orthogonal}, {2, Kind::symplectic}})
    for (int n = 1; n <= max_n; ++n) {
      if (N > max_N) continue;
      for (const auto& nu : partitions_of(n)) {
        if (nu.length() > N) continue;
        std::string tag = "nu=" + nu.to_string() + " N=" + std::to_string(N) +
                          " " + detail::kind_name(kind);
        cases.push_back(
            {"znu", tag, [nu, N, kind = kind, n]() -> std::string {
               OspContext ctx(N, kind);
               auto tabs = standard_tableaux(nu);
               for (size_t i = 0; i < tabs.size(); ++i) {
                 if (n <= 2) {
                   if (f_T(tabs[i], ctx) != f_T_alt(tabs[i], ctx))
                     return "Prop 2.6 fails for tableau #" + std::to_string(i);
                 } else if (osp_rep_image(f_T(tabs[i], ctx), ctx, 1) !=
                            osp_rep_image(f_T_alt(tabs[i], ctx), ctx, 1)) {
                   return "Prop 2.6 fails for tableau #" + std::to_string(i);
                 }
               }
               FreeAlgElem<RatFunc> z = z_nu(tabs[0], ctx);
               if (z.max_word_length() > n) return "word length exceeds n";
               for (int k = 1; k <= 2; ++k) {
                 auto img = osp_act(z, k, ctx);
                 for (size_t t = 1; t < tabs.size(); ++t)
                   if (osp_act(z_nu(tabs[t], ctx), k, ctx) != img)
                     return "tableau #" + std::to_string(t) +
                            " differs at k=" + std::to_string(k);
                 if (!invariance_check(z, ctx, k))
                   return "invariance fails at k=" + std::to_string(k);
               }
               return "";
             }});
      }
    }
  return cases;
}

// Thm 3.4: the leading symbol of Z_nu(u) equals the closed plethysm
// formula; covers the Cor. 3.5 vanishing cases automatically.
inline std::vector<detail::VerifyCase> leading_cases(const VerifyBounds& b) {
  int max_n = b.max_n < 0 ? 4 : b.max_n;
  int max_N = b.max_N < 0 ? 4 : b.max_N;
  std::vector<detail::VerifyCase> cases;
  for (auto [N, kind] : std::vector<std::pair<int, Kind>>{
           {2, Kind::orthogonal},
           {3, Kind::orthogonal},
           {4, Kind::orthogonal},
           {2, Kind::symplectic},
           {4, Kind::symplectic}}) {
    if (N > max_N) continue;
    for (int n : {2, 4}) {
      if (n > max_n) continue;
      for (const auto& nu : partitions_of(n)) {
        if (nu.length() > N) continue;
        cases.push_back({"leading",
                         "nu=" + nu.to_string() + " N=" + std::to_string(N) +
                             " " + detail::kind_name(kind),
                         [nu, N, kind = kind]() -> std::string {
                           OspContext ctx(N, kind);
                           return leading_symbol_z_nu(column_tableau(nu),
                                                      ctx) ==
                                          theorem34_formula(nu, ctx)
                                      ? ""
                                      : "Thm 3.4 formula mismatch";
                         }});
      }
    }
  }
  return cases;
}

// Cor. 3.6 / Eq. (3.10).
inline std::vector<detail::VerifyCase> plethysm_cases(const VerifyBounds& b) {
  int max_N = b.max_N < 0 ? 4 : b.max_N;
  std::vector<detail::VerifyCase> cases;
  for (int m : {1, 2})
    for (auto [N, kind] : std::vector<std::pair<int, Kind>>{
             {2, Kind::orthogonal},
             {3, Kind::orthogonal},
             {4, Kind::orthogonal},
             {2, Kind::symplectic},
             {4, Kind::symplectic}}) {
      if (N > max_N) continue;
      cases.push_back({"plethysm",
                       "m=" + std::to_string(m) + " N=" + std::to_string(N) +
                           " " + detail::kind_name(kind),
                       [m, N, kind = kind]() -> std::string {
                         return corollary36_check(m, N, kind)
                                    ? ""
                                    : "generating identity fails";
                       }});
    }
  return cases;
}

// B_mu specializations, m = 1: eigenvalues on V_lambda, |lambda| <= 1,
// match Prop. 2.2, including the Prop. 2.1 vanishing on the trivial module.
inline std::vector<detail::VerifyCase> bmu_cases(const VerifyBounds& b) {
  int max_N = b.max_N < 0 ? 4 : b.max_N;
  std::vector<detail::VerifyCase> cases;
  for (auto [N, kind] : std::vector<std::pair<int, Kind>>{
           {2, Kind::orthogonal},
           {3, Kind::orthogonal},
           {4, Kind::orthogonal},
           {2, Kind::symplectic},
           {4, Kind::symplectic}}) {
    if (N > max_N) continue;
    for (BmuFamily fam : {BmuFamily::row, BmuFamily::column}) {
      Rational sign = fam == BmuFamily::row ? Rational(1) : Rational(-1);
      std::string fname = fam == BmuFamily::row ? "row" : "column";
      cases.push_back(
          {"bmu",
           "m=1 " + fname + " N=" + std::to_string(N) + " " +
               detail::kind_name(kind),
           [N, kind = kind, fam, sign]() -> std::string {
             OspContext ctx(N, kind);
             auto bm = b_mu_specialization(1, ctx, fam);
             if (!osp_act(bm, 0, ctx).zero())
               return "does not vanish on the trivial module";
             if (b_mu_eigenvalue(Partition({1}), Partition(), ctx) !=
                 Rational(0))
               return "Prop 2.2 formula nonzero on empty lambda";
             Rational eig =
                 sign * b_mu_eigenvalue(Partition({1}), Partition({1}), ctx);
             auto img = osp_act(bm, 1, ctx);
             for (const auto& wv :
                  osp_highest_weight_vectors(Partition({1}), 1, ctx)) {
               auto got = img.apply(wv.coords);
               for (long i = 0; i < img.dim(); ++i)
                 if (got[i] != eig * wv.coords[i])
                   return "eigenvalue mismatch on V_(1)";
             }
             return "";
           }});
    }
  }
  return cases;
}

// Prop. 3.3 and the projector identity in the hyperoctahedral corner of
// the group ring of S_{2n}; n = 2 always, n = 4 only behind --slow.
inline std::vector<detail::VerifyCase> hyper_cases(const VerifyBounds& b) {
  std::vector<detail::VerifyCase> cases;
  cases.push_back({"hyper", "projector corner n=2", []() -> std::string {
                     for (const auto& shape : partitions_of(2)) {
                       auto t = column_tableau(shape);
                       auto phi = embed_standard(young_idempotent(t), 2);
                       auto xnu = embed_standard(character_average(shape), 2);
                       for (int sign : {+1, -1}) {
                         auto hl = hyperoctahedral_idempotent(2, -sign);
                         auto hr = hyperoctahedral_idempotent(2, sign);
                         if (hl * phi * hr != hl * xnu * hr)
                           return "corner images differ for nu=" +
                                  shape.to_string();
                       }
                     }
                     return "";
                   }});
  cases.push_back(
      {"hyper", "proposition 3.3 n=2", []() -> std::string {
         RatFunc u = RatFunc::variable();
         YoungRep rep(Partition({2, 2}));
         for (const auto& nu : partitions_of(2)) {
           auto t = column_tableau(nu);
           auto c = t.contents();
           auto xnu = detail::lift_group(
               embed_standard(character_average(nu), 2));
           auto psi = psi_T(t);
           for (int sign : {+1, -1}) {
             auto hl =
                 detail::lift_group(hyperoctahedral_idempotent(2, -sign));
             auto hr = detail::lift_group(hyperoctahedral_idempotent(2, sign));
             RatFunc scalar = (u * (u + RatFunc(Rational(sign, 2)))) /
                              ((u + RatFunc(Rational(c[0]) / 2)) *
                               (u + RatFunc(Rational(c[1]) / 2)));
             auto lhs = rep.representation_matrix<RatFunc>(hl * psi * hr);
             auto rhs = rep.representation_matrix<RatFunc>(hl * xnu * hr);
             for (size_t r = 0; r < rhs.size(); ++r)
               for (size_t cc = 0; cc < rhs[r].size(); ++cc)
                 if (lhs[r][cc] != scalar * rhs[r][cc])
                   return "Prop 3.3 fails for nu=" + nu.to_string();
           }
         }
         return "";
       }});
  if (b.slow)
    cases.push_back({"hyper", "projector corner n=4 (slow)",
                     []() -> std::string {
                       for (const auto& shape : partitions_of(4)) {
                         auto t = column_tableau(shape);
                         auto phi = embed_standard(young_idempotent(t), 4);
                         auto xnu =
                             embed_standard(character_average(shape), 4);
                         for (int sign : {+1, -1}) {
                           auto hl = hyperoctahedral_idempotent(4, -sign);
                           auto hr = hyperoctahedral_idempotent(4, sign);
                           if (hl * phi * hr != hl * xnu * hr)
                             return "corner images differ for nu=" +
                                    shape.to_string();
                         }
                       }
                       return "";
                     }});
  return cases;
}

// Run the named suite ("all" concatenates every suite in canonical order).
inline std::vector<VerdictRecord> run_verify(const std::string& suite,
                                             const VerifyBounds& bounds) {
  std::vector<detail::VerifyCase> cases;
  auto want = [&](const std::string& s) {
    return suite == s || suite == "all";
  };
  bool known = false;
  for (const std::string& s : {"fusion", "gl", "reflection", "znu", "leading",
                               "plethysm", "bmu", "hyper", "all"})
    if (suite == s) known = true;
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  if (want("fusion"))
    for (auto& c : fusion_cases(bounds)) cases.push_back(std::move(c));
  if (want("gl"))
    for (auto& c : gl_cases(bounds)) cases.push_back(std::move(c));
  if (want("reflection"))
    for (auto& c : reflection_cases(bounds)) cases.push_back(std::move(c));
  if (want("znu"))
    for (auto& c : znu_cases(bounds)) cases.push_back(std::move(c));
  if (want("leading"))
    for (auto& c : leading_cases(bounds)) cases.push_back(std::move(c));
  if (want("plethysm"))
    for (auto& c : plethysm_cases(bounds)) cases.push_back(std::move(c));
  if (want("bmu"))
    for (auto& c : bmu_cases(bounds)) cases.push_back(std::move(c));
  if (want("hyper"))
    for (auto& c : hyper_cases(bounds)) cases.push_back(std::move(c));
  return detail::run_cases(std::move(cases));
}

}  // namespace capelli

#endif
