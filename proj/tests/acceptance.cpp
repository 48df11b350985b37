// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <iostream>
#include <string>
#include <vector>

#include "capelli/verify.hpp"

using namespace capelli;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok,
            const std::string& witness = "") {
  std::cout << "criterion " << idx << " [" << what << "]: "
            << (ok ? "PASS" : "FAIL");
  if (!ok && !witness.empty()) std::cout << "  (" << witness << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool run_suite(std::vector<detail::VerifyCase> cases, std::string* witness) {
  auto records = detail::run_cases(std::move(cases));
  for (const auto& r : records)
    if (!r.pass) {
      *witness = r.suite + " / " + r.name + ": " + r.witness;
      return false;
    }
  return true;
}

}  // namespace

int main() {
  VerifyBounds defaults;
  std::string w;

  bool ok = run_suite(fusion_cases(defaults), &w);
  report(1, "fusion idempotent = matrix-element idempotent, n <= 4", ok, w);

  ok = run_suite(gl_cases(defaults), &w);
  report(2, "gl_N Capelli suite, n <= 3, N in {2,3}", ok, w);

  ok = run_suite(reflection_cases(defaults), &w);
  report(3, "reflection equation and gl auxiliaries", ok, w);

  ok = run_suite(znu_cases(defaults), &w);
  report(4, "Z_nu structural suite, n <= 3, N <= 3", ok, w);

  ok = run_suite(leading_cases(defaults), &w);
  report(5, "leading symbol theorem, n in {2,4}, N in {2,3,4}", ok, w);

  ok = run_suite(plethysm_cases(defaults), &w);
  report(6, "plethysm generating identity, m in {1,2}", ok, w);

  ok = run_suite(hyper_cases(defaults), &w);
  report(7, "hyperoctahedral check at n = 2", ok, w);

  ok = run_suite(bmu_cases(defaults), &w);
  report(8, "B_mu specializations, m = 1", ok, w);

  auto contents = column_tableau(Partition({4, 3, 1})).contents();
  ok = contents == std::vector<int>{0, -1, -2, 1, 0, 2, 1, 3};
  report(9, "column tableau contents of (4,3,1)", ok);

  return failures == 0 ? 0 : 1;
}
