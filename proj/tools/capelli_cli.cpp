// Command-line front end: tableau listings, Young idempotents, Capelli
// elements of U(gl_N), reflection-equation elements Z_nu(u) of U(so_N) and
// U(sp_N), and the identity verification suites.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "capelli/format.hpp"
#include "capelli/verify.hpp"

using nlohmann::json;
using namespace capelli;

namespace {

json word_json(const Word& w) {
  json a = json::array();
  for (const Gen& g : w) a.push_back({g.i, g.j});
  return a;
}

template <class C>
json element_json(const FreeAlgElem<C>& x, const std::string& letter) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms())
    terms.push_back({{"word", word_json(w)},
                     {"display", word_display(w, letter)},
                     {"coeff", to_string(c)}});
  return terms;
}

json symbol_json(const SymPoly<RatFunc>& p) {
  json terms = json::array();
  for (const auto& [expo, c] : p.terms())
    terms.push_back({{"exponents", expo}, {"coeff", to_string(c)}});
  return json{{"display", to_string(p)}, {"terms", terms}};
}

json idempotent_json(const GroupAlgElem<Rational>& x) {
  json terms = json::array();
  for (const auto& [perm, c] : x.terms())
    terms.push_back({{"permutation", perm.to_string()},
                     {"coeff", to_string(c)}});
  return terms;
}

void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  // human table rendering, derived from the same document
  if (doc.contains("tableaux")) {
    std::cout << "shape " << doc["shape"].get<std::string>() << ", "
              << doc["tableaux"].size() << " standard tableau(x)\n";
    for (const auto& t : doc["tableaux"]) {
      for (const auto& row : t["rows"]) {
        for (const auto& e : row) std::cout << e.get<int>() << " ";
        std::cout << "\n";
      }
      std::cout << "contents:";
      for (const auto& c : t["contents"]) std::cout << " " << c.get<int>();
      std::cout << "\n\n";
    }
  } else if (doc.contains("idempotents")) {
    for (const auto& t : doc["idempotents"]) {
      std::cout << "tableau (reading word";
      for (const auto& e : t["reading_word"]) std::cout << " " << e.get<int>();
      std::cout << "):\n";
      for (const auto& term : t["terms"])
        std::cout << "  " << term["coeff"].get<std::string>() << " * "
                  << term["permutation"].get<std::string>() << "\n";
    }
  } else if (doc.contains("element")) {
    std::cout << doc["display"].get<std::string>() << "\n";
    if (doc.contains("eigenvalue"))
      std::cout << "eigenvalue: " << doc["eigenvalue"].get<std::string>()
                << "\n";
    if (doc.contains("leading_symbol"))
      std::cout << "leading symbol: "
                << doc["leading_symbol"]["display"].get<std::string>() << "\n";
  } else if (doc.contains("records")) {
    for (const auto& r : doc["records"]) {
      std::cout << (r["status"] == "pass" ? "PASS" : "FAIL") << "  "
                << r["suite"].get<std::string>() << "  "
                << r["case"].get<std::string>();
      if (r.contains("elapsed_ms"))
        std::cout << "  (" << r["elapsed_ms"].get<long>() << " ms)";
      if (r.contains("witness"))
        std::cout << "  -- " << r["witness"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << doc["passed"].get<int>() << "/" << doc["total"].get<int>()
              << " cases passed\n";
  }
}

Kind parse_kind(const std::string& s) {
  if (s == "so") return Kind::orthogonal;
  if (s == "sp") return Kind::symplectic;
  throw std::invalid_argument("kind must be so or sp");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Capelli-type central elements and identity checks"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  std::string format = "table";
  bool no_timing = false;

  auto* cmd_tab = app.add_subcommand("tableaux", "list standard tableaux");
  std::string tab_shape;
  cmd_tab->add_option("shape", tab_shape, "partition, e.g. [4,3,1]")
      ->required();

  auto* cmd_phi =
      app.add_subcommand("phi", "Young idempotents of the standard tableaux");
  std::string phi_shape;
  cmd_phi->add_option("shape", phi_shape)->required();

  auto* cmd_cap =
      app.add_subcommand("capelli", "Capelli element C_nu of U(gl_N)");
  std::string cap_shape, cap_lambda, cap_u = "0";
  int cap_N = 0;
  cmd_cap->add_option("shape", cap_shape)->required();
  cmd_cap->add_option("--N", cap_N, "rank of gl_N")->required();
  cmd_cap->add_option("--eigenvalue", cap_lambda,
                      "also print the eigenvalue on V_lambda");
  cmd_cap->add_option("--u", cap_u, "evaluation point for the eigenvalue");

  auto* cmd_znu = app.add_subcommand(
      "znu", "reflection-equation element Z_nu(u) and its leading symbol");
  std::string znu_shape, znu_kind;
  int znu_N = 0;
  cmd_znu->add_option("shape", znu_shape)->required();
  cmd_znu->add_option("--N", znu_N, "rank")->required();
  cmd_znu->add_option("--kind", znu_kind, "so or sp")
      ->required()
      ->check(CLI::IsMember({"so", "sp"}));

  auto* cmd_ver = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  VerifyBounds bounds;
  cmd_ver->add_option(
      "suite", suite,
      "fusion | gl | reflection | znu | leading | plethysm | bmu | hyper | "
      "all");
  cmd_ver->add_option("--max-n", bounds.max_n, "cap on |nu|");
  cmd_ver->add_option("--max-N", bounds.max_N, "cap on the rank N");
  cmd_ver->add_flag("--slow", bounds.slow, "include the slow n=4 cases");

  // shared output flags, available on every subcommand
  for (auto* sc : {cmd_tab, cmd_phi, cmd_cap, cmd_znu, cmd_ver}) {
    sc->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->configurable(true);
    sc->add_flag("--no-timing", no_timing, "suppress elapsed-time fields");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_tab) {
      Partition shape = Partition::parse(tab_shape);
      json tabs = json::array();
      for (const auto& t : standard_tableaux(shape))
        tabs.push_back({{"rows", t.rows()}, {"contents", t.contents()}});
      emit({{"shape", shape.to_string()}, {"tableaux", tabs}}, format);
    } else if (*cmd_phi) {
      Partition shape = Partition::parse(phi_shape);
      json out = json::array();
      for (const auto& t : standard_tableaux(shape))
        out.push_back({{"reading_word", t.reading_word()},
                       {"terms", idempotent_json(young_idempotent(t))}});
      emit({{"shape", shape.to_string()}, {"idempotents", out}}, format);
    } else if (*cmd_cap) {
      Partition shape = Partition::parse(cap_shape);
      GlContext ctx(cap_N);
      GlElem c = capelli_element(column_tableau(shape), ctx);
      json doc{{"shape", shape.to_string()},
               {"N", cap_N},
               {"element", element_json(c, "E")},
               {"display", element_display(c, "E")}};
      if (!cap_lambda.empty()) {
        Partition lam = Partition::parse(cap_lambda);
        RatFunc u0(rational_from_string(cap_u));
        doc["eigenvalue"] =
            to_string(capelli_eigenvalue(shape, lam, cap_N, u0));
      }
      emit(doc, format);
    } else if (*cmd_znu) {
      Partition shape = Partition::parse(znu_shape);
      OspContext ctx(znu_N, parse_kind(znu_kind));
      FreeAlgElem<RatFunc> z = z_nu(column_tableau(shape), ctx);
      json doc{{"shape", shape.to_string()},
               {"N", znu_N},
               {"kind", znu_kind},
               {"element", element_json(z, "F")},
               {"display", element_display(z, "F")},
               {"leading_symbol",
                symbol_json(leading_symbol(z, shape.size(), ctx))}};
      emit(doc, format);
    } else if (*cmd_ver) {
      auto records = run_verify(suite, bounds);
      json recs = json::array();
      int passed = 0;
      for (const auto& r : records) {
        json jr{{"suite", r.suite},
                {"case", r.name},
                {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) jr["witness"] = r.witness;
        if (!no_timing) jr["elapsed_ms"] = r.elapsed_ms;
        recs.push_back(std::move(jr));
        if (r.pass) ++passed;
      }
      emit({{"suite", suite},
            {"records", recs},
            {"passed", passed},
            {"total", static_cast<int>(records.size())}},
           format);
      return passed == static_cast<int>(records.size()) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
