// Python bindings for the main operations: tableau enumeration, Capelli
// elements of U(gl_N), reflection-equation elements Z_nu(u), leading
// symbols, and the verification suites. Elements cross the boundary as
// plain Python structures with exact coefficients rendered as strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "capelli/format.hpp"
#include "capelli/verify.hpp"

namespace py = pybind11;
using namespace capelli;

namespace {

Partition to_partition(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  return Partition(parts);
}

Kind to_kind(const std::string& s) {
  if (s == "so") return Kind::orthogonal;
  if (s == "sp") return Kind::symplectic;
  throw std::invalid_argument("kind must be 'so' or 'sp'");
}

template <class C>
py::list element_terms(const FreeAlgElem<C>& x) {
  py::list out;
  for (const auto& [w, c] : x.terms()) {
    py::list word;
    for (const Gen& g : w) word.append(py::make_tuple(g.i, g.j));
    out.append(py::make_tuple(word, to_string(c)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(capelli_core, m) {
  m.doc() =
      "exact Capelli-type central elements of U(gl_N), U(so_N), U(sp_N)";

  m.def(
      "standard_tableaux",
      [](const std::vector<int>& shape) {
        py::list out;
        for (const auto& t : standard_tableaux(to_partition(shape)))
          out.append(py::dict(py::arg("rows") = t.rows(),
                              py::arg("contents") = t.contents()));
        return out;
      },
      py::arg("shape"),
      "standard tableaux of the given shape with their content sequences");

  m.def(
      "capelli_element",
      [](const std::vector<int>& shape, int N) {
        GlContext ctx(N);
        GlElem c = capelli_element(column_tableau(to_partition(shape)), ctx);
        return py::make_tuple(element_display(c, "E"), element_terms(c));
      },
      py::arg("shape"), py::arg("N"),
      "C_nu as (display string, [(word, coefficient)])");

  m.def(
      "capelli_eigenvalue",
      [](const std::vector<int>& shape, const std::vector<int>& lam, int N,
         const std::string& u) {
        return to_string(capelli_eigenvalue(to_partition(shape),
                                            to_partition(lam), N,
                                            RatFunc(rational_from_string(u))));
      },
      py::arg("shape"), py::arg("lam"), py::arg("N"), py::arg("u") = "0",
      "eigenvalue of C_nu on the highest weight module V_lambda");

  m.def(
      "z_nu",
      [](const std::vector<int>& shape, int N, const std::string& kind) {
        OspContext ctx(N, to_kind(kind));
        auto z = z_nu(column_tableau(to_partition(shape)), ctx);
        return py::make_tuple(element_display(z, "F"), element_terms(z));
      },
      py::arg("shape"), py::arg("N"), py::arg("kind"),
      "Z_nu(u) as (display string, [(word, coefficient)])");

  m.def(
      "leading_symbol",
      [](const std::vector<int>& shape, int N, const std::string& kind) {
        OspContext ctx(N, to_kind(kind));
        return to_string(
            leading_symbol_z_nu(column_tableau(to_partition(shape)), ctx));
      },
      py::arg("shape"), py::arg("N"), py::arg("kind"),
      "leading symbol f_nu(x | u) of Z_nu(u)");

  m.def(
      "verify",
      [](const std::string& suite, int max_n, int max_N, bool slow) {
        VerifyBounds b;
        b.max_n = max_n;
        b.max_N = max_N;
        b.slow = slow;
        py::list out;
        for (const auto& r : run_verify(suite, b))
          out.append(py::dict(
              py::arg("suite") = r.suite, py::arg("case") = r.name,
              py::arg("status") = r.pass ? "pass" : "fail",
              py::arg("witness") = r.witness,
              py::arg("elapsed_ms") = r.elapsed_ms));
        return out;
      },
      py::arg("suite"), py::arg("max_n") = -1, py::arg("max_N") = -1,
      py::arg("slow") = false, "run an identity verification suite");
}
