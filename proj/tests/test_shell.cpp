#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "firmfrob/io.hpp"
#include "support.hpp"

using namespace fftest;
namespace fs = std::filesystem;

namespace {

fs::path workdir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "firmfrob-shell-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(FIRMFROB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("bundle files round-trip byte-identically in canonical form") {
  GeneratedBundle g = g2q();
  BundleFile file = bundle_from_parts(g.bundle, g.units);
  fs::path p1 = workdir() / "g2q_a.json", p2 = workdir() / "g2q_b.json";
  save_bundle(file, p1);
  BundleFile reparsed = load_bundle(p1);
  save_bundle(reparsed, p2);
  CHECK(read_file(p1) == read_file(p2));
}

TEST_CASE("map files round-trip") {
  GeneratedBundle g = g2q();
  MapFile m;
  m.kind = "comodule";
  m.name = "regular";
  m.field = Q();
  m.algebra_dim = 2;
  m.dim = 2;
  m.map = g.bundle.coalgebra.comultiplication();
  fs::path p = workdir() / "reg.json";
  save_map_file(m, p);
  MapFile back = load_map_file(p);
  CHECK(back.kind == "comodule");
  CHECK(back.map == m.map);
  fs::path p2 = workdir() / "reg2.json";
  save_map_file(back, p2);
  CHECK(read_file(p) == read_file(p2));
}

TEST_CASE("parse errors carry locations and reject bad scalars") {
  CHECK_THROWS_AS(parse_bundle_text("{"), ParseError);
  CHECK_THROWS_AS(parse_bundle_text("{\"format\": \"nope\"}"), ParseError);
  std::string bad = R"({"format":"firmfrob/1","field":{"kind":"rationals"},"dim":1,
                        "basis":["x"],"mul":[[0,0,0,"1/0"]]})";
  CHECK_THROWS_AS(parse_bundle_text(bad), ParseError);
  std::string oob = R"({"format":"firmfrob/1","field":{"kind":"rationals"},"dim":1,
                        "basis":["x"],"mul":[[0,0,5,"1/1"]]})";
  CHECK_THROWS_AS(parse_bundle_text(oob), ParseError);
  std::string nonstring = R"({"format":"firmfrob/1","field":{"kind":"rationals"},"dim":1,
                        "basis":["x"],"mul":[[0,0,0,1]]})";
  CHECK_THROWS_AS(parse_bundle_text(nonstring), ParseError);
}

TEST_CASE("report documents embed provenance and overall verdict") {
  std::vector<CheckReport> reports{pass_report("a"), pass_report("b")};
  nlohmann::json doc = report_document(reports, "cafe", 7, std::nullopt);
  CHECK(doc.at("input_hash") == "cafe");
  CHECK(doc.at("seed") == 7);
  CHECK(doc.at("overall") == "pass");
  reports.push_back(fail_report("c", Witness{{0}, std::nullopt, std::nullopt, "boom"}));
  doc = report_document(reports, "cafe", 7, 3);
  CHECK(doc.at("overall") == "fail");
  CHECK(doc.at("window") == 3);
  CHECK(doc.at("checks").size() == 3);
  CHECK(doc.at("checks").at(2).at("witness").at("detail") == "boom");
}

TEST_CASE("fnv hash is stable and content-sensitive") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

TEST_CASE("cli: generated fixtures pass their default suites") {
  fs::path d = workdir();
  CHECK(run_cli("gen grouplike --order 2 --field q --out " + (d / "g2.json").string()) == 0);
  CHECK(run_cli("check " + (d / "g2.json").string()) == 0);
  CHECK(run_cli("gen truncpoly --field q --out " + (d / "tp.json").string()) == 0);
  CHECK(run_cli("check " + (d / "tp.json").string()) == 0);
  CHECK(run_cli("gen comatrix --n 2 --field q --out " + (d / "mc2.json").string()) == 0);
  CHECK(run_cli("check " + (d / "mc2.json").string()) == 0);  // coalgebra-only suite
  CHECK(run_cli("gen smash --order 2 --field q --out " + (d / "sm.json").string()) == 0);
  CHECK(run_cli("check " + (d / "sm.json").string()) == 0);
  CHECK(run_cli("gen grouplike --order 3 --field f5 --out " + (d / "g3f5.json").string()) == 0);
  CHECK(run_cli("check " + (d / "g3f5.json").string()) == 0);
}

TEST_CASE("cli: exit codes follow the pass/math-failure/usage contract") {
  fs::path d = workdir();
  write_text(d / "nil.json", R"({"format":"firmfrob/1","field":{"kind":"rationals"},
    "dim":1,"basis":["x"],"mul":[]})");
  CHECK(run_cli("check " + (d / "nil.json").string() + " --suite firmness,nondegeneracy") == 1);

  write_text(d / "bad.json", R"({"format":"firmfrob/1","field":{"kind":"rationals"},
    "dim":1,"basis":["x"],"mul":[[0,0,0,"1/0"]]})");
  CHECK(run_cli("check " + (d / "bad.json").string()) == 2);
  CHECK(run_cli("check " + (d / "missing.json").string()) == 2);
  CHECK(run_cli("gen nosuchfamily --out " + (d / "x.json").string()) == 2);
  CHECK(run_cli("check " + (d / "nil.json").string() + " --suite nosuchcheck") == 2);
}

TEST_CASE("cli: NIL firmness report carries the not-surjective witness") {
  fs::path d = workdir();
  write_text(d / "nil2.json", R"({"format":"firmfrob/1","field":{"kind":"rationals"},
    "dim":1,"basis":["x"],"mul":[]})");
  fs::path rep = d / "nil2.report.json";
  run_cli("check " + (d / "nil2.json").string() + " --suite firmness --report " + rep.string());
  nlohmann::json doc = nlohmann::json::parse(read_file(rep));
  CHECK(doc.at("overall") == "fail");
  CHECK(doc.at("checks").at(0).at("witness").at("detail") == "mu-bar not surjective");
  CHECK(doc.at("input_hash").get<std::string>().size() == 16);
}

TEST_CASE("cli: conversion transports the regular comodule to the multiplication") {
  fs::path d = workdir();
  run_cli("gen grouplike --order 2 --field q --out " + (d / "gg.json").string());
  GeneratedBundle g = g2q();
  MapFile reg;
  reg.kind = "comodule";
  reg.name = "regular";
  reg.field = Q();
  reg.algebra_dim = 2;
  reg.dim = 2;
  reg.map = g.bundle.coalgebra.comultiplication();
  save_map_file(reg, d / "regcomod.json");

  CHECK(run_cli("convert comod2mod " + (d / "regcomod.json").string() + " " +
                (d / "gg.json").string() + " " + (d / "regmod.json").string() +
                " --verify-roundtrip") == 0);
  MapFile out = load_map_file(d / "regmod.json");
  CHECK(out.kind == "module");
  CHECK(out.map == g.bundle.algebra.multiplication());
}

TEST_CASE("cli: zero-action modules are refused with exit 1") {
  fs::path d = workdir();
  run_cli("gen grouplike --order 2 --field q --out " + (d / "gz.json").string());
  MapFile zero;
  zero.kind = "module";
  zero.name = "zero";
  zero.field = Q();
  zero.algebra_dim = 2;
  zero.dim = 1;
  zero.map = LinMap(Q(), 1, 2);
  save_map_file(zero, d / "zero.json");
  CHECK(run_cli("convert mod2comod " + (d / "zero.json").string() + " " +
                (d / "gz.json").string() + " " + (d / "zout.json").string()) == 1);
  CHECK_FALSE(fs::exists(d / "zout.json"));
}

TEST_CASE("cli: cosep pipeline emits a bundle that passes the built-in suite") {
  fs::path d = workdir();
  run_cli("gen comatrix --n 2 --field q --out " + (d / "cm2.json").string());
  CHECK(run_cli("cosep " + (d / "cm2.json").string() + " " + (d / "cm2b.json").string()) == 0);
  BundleFile built = load_bundle(d / "cm2b.json");
  BundleParts parts = built.parts();
  REQUIRE(parts.algebra.has_value());
  REQUIRE(parts.coalgebra.has_value());
  FrobeniusBundle b = make_bundle(*parts.algebra, *parts.coalgebra);
  CHECK(section_check(b, b.coalgebra.comultiplication()).verdict == Verdict::Pass);

  run_cli("gen truncpoly --field q --out " + (d / "tp2.json").string());
  CHECK(run_cli("cosep " + (d / "tp2.json").string() + " " + (d / "tp2b.json").string()) == 1);
}

TEST_CASE("cli: casimir emits matching reconstruction for the grouplike bundle") {
  fs::path d = workdir();
  run_cli("gen grouplike --order 2 --field q --out " + (d / "gc.json").string());
  CHECK(run_cli("casimir " + (d / "gc.json").string() + " " + (d / "gc_cas.json").string()) == 0);
  nlohmann::json doc = nlohmann::json::parse(read_file(d / "gc_cas.json"));
  CHECK(doc.at("delta_matches") == true);
  CHECK(doc.at("elements").size() == 2);

  write_text(d / "nil3.json", R"({"format":"firmfrob/1","field":{"kind":"rationals"},
    "dim":1,"basis":["x"],"mul":[],"comul":[[0,0,0,"1/1"]],"counit":["1/1"]})");
  CHECK(run_cli("casimir " + (d / "nil3.json").string() + " " + (d / "nil_cas.json").string()) ==
        1);
}

TEST_CASE("cli: window fixtures are tagged window-verified") {
  fs::path d = workdir();
  CHECK(run_cli("gen grouplike --integers --window 2 --field f5 --out " +
                (d / "zw.json").string()) == 0);
  fs::path rep = d / "zw.report.json";
  CHECK(run_cli("check " + (d / "zw.json").string() + " --report " + rep.string()) == 0);
  nlohmann::json doc = nlohmann::json::parse(read_file(rep));
  CHECK(doc.at("window") == 2);
  for (const auto& c : doc.at("checks")) CHECK(c.at("verdict") == "window-verified");
}

TEST_CASE("bundle files carry attached modules and comodules through checks") {
  fs::path d = workdir();
  GeneratedBundle g = g2q();
  BundleFile bf = bundle_from_parts(g.bundle, g.units);
  bf.modules.emplace_back("regular", regular_module(g.bundle));
  bf.comodules.emplace_back("regular", regular_comodule(g.bundle));
  save_bundle(bf, d / "attached.json");
  fs::path rep = d / "attached.report.json";
  CHECK(run_cli("check " + (d / "attached.json").string() + " --report " + rep.string()) == 0);
  nlohmann::json doc = nlohmann::json::parse(read_file(rep));
  bool saw_module = false, saw_comodule = false;
  for (const auto& c : doc.at("checks")) {
    saw_module |= c.at("name") == "module[regular]";
    saw_comodule |= c.at("name") == "comodule[regular]";
  }
  CHECK(saw_module);
  CHECK(saw_comodule);

  // an attached comodule violating the laws flips the exit code
  BundleFile bad = bundle_from_parts(g.bundle, g.units);
  bad.comodules.emplace_back("broken", ComoduleData(1, LinMap(Q(), 2, 1)));
  save_bundle(bad, d / "attached_bad.json");
  CHECK(run_cli("check " + (d / "attached_bad.json").string()) == 1);
}

TEST_CASE("cli: group tables are ingested from JSON rows") {
  fs::path d = workdir();
  write_text(d / "klein.json", "[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]");
  CHECK(run_cli("gen grouplike --group-table " + (d / "klein.json").string() +
                " --field q --out " + (d / "klein_bundle.json").string()) == 0);
  BundleFile bf = load_bundle(d / "klein_bundle.json");
  CHECK(bf.dim == 4);
  CHECK(run_cli("check " + (d / "klein_bundle.json").string()) == 0);

  write_text(d / "notgroup.json", "[[0,1],[1,1]]");
  CHECK(run_cli("gen grouplike --group-table " + (d / "notgroup.json").string() +
                " --field q --out " + (d / "ng.json").string()) == 2);
}

TEST_CASE("cli: generated fixture files are byte-deterministic") {
  fs::path d = workdir();
  run_cli("gen grouplike --order 3 --field f3 --out " + (d / "det1.json").string());
  run_cli("gen grouplike --order 3 --field f3 --out " + (d / "det2.json").string());
  CHECK(read_file(d / "det1.json") == read_file(d / "det2.json"));
}

TEST_CASE("cli: verdicts are reproducible for a fixed seed") {
  fs::path d = workdir();
  run_cli("gen grouplike --order 2 --field q --out " + (d / "gr.json").string());
  fs::path r1 = d / "r1.json", r2 = d / "r2.json";
  run_cli("check " + (d / "gr.json").string() + " --seed 5 --report " + r1.string());
  run_cli("check " + (d / "gr.json").string() + " --seed 5 --report " + r2.string());
  nlohmann::json d1 = nlohmann::json::parse(read_file(r1));
  nlohmann::json d2 = nlohmann::json::parse(read_file(r2));
  REQUIRE(d1.at("checks").size() == d2.at("checks").size());
  for (std::size_t i = 0; i < d1.at("checks").size(); ++i) {
    CHECK(d1.at("checks").at(i).at("name") == d2.at("checks").at(i).at("name"));
    CHECK(d1.at("checks").at(i).at("verdict") == d2.at("checks").at(i).at("verdict"));
  }
  CHECK(d1.at("seed") == 5);
}
