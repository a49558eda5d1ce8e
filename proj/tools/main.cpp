#include <iostream>

#include <CLI11.hpp>

#include "firmfrob/families.hpp"
#include "firmfrob/io.hpp"

namespace ff = firmfrob;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int window = 5;
  int max_subset = 2;
  bool parallel = true;
};

ff::SuiteOptions suite_options(const GlobalOpts& g) {
  ff::SuiteOptions o;
  o.seed = g.seed;
  o.max_subset = g.max_subset;
  o.parallel = g.parallel;
  return o;
}

ff::FieldSpec parse_field_arg(const std::string& s) {
  if (s == "q" || s == "Q") return ff::FieldSpec::rationals();
  if ((s.size() > 1 && (s[0] == 'f' || s[0] == 'F'))) {
    try {
      return ff::FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
    } catch (const std::logic_error&) {
      throw ff::UsageError("bad field argument: " + s);
    }
  }
  throw ff::UsageError("field must be \"q\" or \"f<prime>\": got " + s);
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    std::string piece = csv.substr(start, comma - start);
    if (!piece.empty()) out.push_back(piece);
    start = comma + 1;
  }
  if (out.empty()) throw ff::UsageError("empty suite selection");
  return out;
}

void print_reports(const std::vector<ff::CheckReport>& reports) {
  for (const auto& r : reports) {
    std::cout << "[" << ff::to_string(r.verdict) << "] " << r.name;
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    if (r.witness && !r.witness->detail.empty() && !r.passed())
      std::cout << " -- " << r.witness->detail;
    std::cout << "\n";
  }
}

void stamp(std::vector<ff::CheckReport>& reports, const std::string& hash, std::uint64_t seed,
           const std::optional<ff::BundleFile::WindowMeta>& window) {
  for (auto& r : reports) {
    r.input_hash = hash;
    r.seed = seed;
    if (window) {
      r.window = window->w;
      if (r.verdict == ff::Verdict::Pass) {
        r.verdict = ff::Verdict::WindowVerified;
        r.note = r.note.empty() ? ("w = " + std::to_string(window->w))
                                : r.note + "; w = " + std::to_string(window->w);
      }
    }
  }
}

int cmd_check(const std::string& path, const std::string& suite_csv,
              const std::string& report_path, const GlobalOpts& g) {
  std::string bytes = ff::read_file(path);
  std::string hash = ff::fnv1a_hex(bytes);
  ff::BundleFile file = ff::parse_bundle_text(bytes);
  ff::BundleParts parts = file.parts();

  std::vector<std::string> names = split_names(suite_csv);
  std::vector<ff::CheckReport> reports = ff::run_suite(parts, names, suite_options(g));

  // attached (co)modules are validated whenever the bundle is complete
  bool ran_all = std::find(names.begin(), names.end(), "all") != names.end();
  if (ran_all && parts.algebra && parts.coalgebra) {
    ff::FrobeniusBundle bundle = ff::make_bundle(*parts.algebra, *parts.coalgebra);
    for (const auto& [name, m] : file.modules) {
      ff::CheckReport r = ff::check_module(bundle, m);
      r.name = "module[" + name + "]";
      reports.push_back(std::move(r));
    }
    for (const auto& [name, n] : file.comodules) {
      ff::CheckReport r = ff::check_comodule(bundle, n);
      r.name = "comodule[" + name + "]";
      reports.push_back(std::move(r));
    }
  }

  stamp(reports, hash, g.seed, file.window);
  print_reports(reports);

  std::optional<int> window;
  if (file.window) window = file.window->w;
  std::string out = report_path.empty() ? path + ".report.json" : report_path;
  ff::atomic_write(out, ff::dump_json(ff::report_document(reports, hash, g.seed, window)));
  return ff::all_passed(reports) ? kExitPass : kExitMathFailure;
}

int cmd_convert(const std::string& direction, const std::string& map_path,
                const std::string& bundle_path, const std::string& out_path, bool verify_roundtrip,
                const GlobalOpts&) {
  if (direction != "mod2comod" && direction != "comod2mod")
    throw ff::UsageError("direction must be mod2comod or comod2mod");
  ff::MapFile map = ff::load_map_file(map_path);
  ff::BundleFile bf = ff::load_bundle(bundle_path);
  ff::BundleParts parts = bf.parts();
  if (!parts.algebra || !parts.coalgebra)
    throw ff::UsageError("conversion needs a complete bundle (algebra and coalgebra)");
  if (!(map.field == bf.field) || map.algebra_dim != bf.dim)
    throw ff::UsageError("map file does not match the bundle (field or dimension)");
  ff::FrobeniusBundle bundle = ff::make_bundle(*parts.algebra, *parts.coalgebra);

  if (direction == "mod2comod") {
    if (map.kind != "module") throw ff::UsageError("mod2comod expects a module file");
    ff::ModuleData m(map.dim, map.map);
    ff::OpResult<ff::ComoduleData> n = ff::induced_coaction(bundle, m);
    if (!n.ok()) {
      std::cout << "[" << ff::to_string(n.report.verdict) << "] " << n.report.name << " -- "
                << n.report.witness->detail << "\n";
      return kExitMathFailure;
    }
    ff::MapFile out;
    out.kind = "comodule";
    out.name = map.name;
    out.field = map.field;
    out.algebra_dim = map.algebra_dim;
    out.dim = map.dim;
    out.map = n.value->coaction;
    ff::save_map_file(out, out_path);
    if (verify_roundtrip) {
      ff::OpResult<ff::ModuleData> back = ff::induced_action(bundle, *n.value);
      if (!back.ok() || back.value->action != m.action) {
        std::cout << "[fail] convert-roundtrip -- transported structure does not return "
                     "bit-exactly\n";
        return kExitMathFailure;
      }
      std::cout << "[pass] convert-roundtrip\n";
    }
    return kExitPass;
  }

  if (map.kind != "comodule") throw ff::UsageError("comod2mod expects a comodule file");
  ff::ComoduleData n(map.dim, map.map);
  ff::OpResult<ff::ModuleData> m = ff::induced_action(bundle, n);
  if (!m.ok()) {
    std::cout << "[" << ff::to_string(m.report.verdict) << "] " << m.report.name << " -- "
              << m.report.witness->detail << "\n";
    return kExitMathFailure;
  }
  ff::MapFile out;
  out.kind = "module";
  out.name = map.name;
  out.field = map.field;
  out.algebra_dim = map.algebra_dim;
  out.dim = map.dim;
  out.map = m.value->action;
  ff::save_map_file(out, out_path);
  if (verify_roundtrip) {
    ff::OpResult<ff::ComoduleData> back = ff::induced_coaction(bundle, *m.value);
    if (!back.ok() || back.value->coaction != n.coaction) {
      std::cout << "[fail] convert-roundtrip -- transported structure does not return "
                   "bit-exactly\n";
      return kExitMathFailure;
    }
    std::cout << "[pass] convert-roundtrip\n";
  }
  return kExitPass;
}

int cmd_cosep(const std::string& coalgebra_path, const std::string& out_path,
              const GlobalOpts& g) {
  ff::BundleFile bf = ff::load_bundle(coalgebra_path);
  ff::BundleParts parts = bf.parts();
  if (!parts.coalgebra) throw ff::UsageError("input has no coalgebra part");

  ff::CheckReport laws = ff::check_coalgebra(*parts.coalgebra);
  if (!laws.passed()) {
    print_reports({laws});
    return kExitMathFailure;
  }
  std::optional<ff::LinMap> nu = ff::cosep_solve(*parts.coalgebra);
  if (!nu) {
    std::cout << "[fail] cosep -- not coseparable (retraction system is inconsistent)\n";
    return kExitMathFailure;
  }
  ff::OpResult<ff::FrobeniusBundle> built = ff::build_from_cosep(*parts.coalgebra, *nu);
  if (!built.ok()) {
    print_reports({built.report});
    return kExitMathFailure;
  }

  ff::BundleParts built_parts;
  built_parts.algebra = built.value->algebra;
  built_parts.coalgebra = built.value->coalgebra;
  std::optional<ff::LocalUnitFamily> units;
  if (std::optional<ff::Vec> u = ff::find_global_unit(built.value->algebra)) {
    units = ff::LocalUnitFamily{{*u}, g.max_subset};
    built_parts.units = units;
  }
  // the checks a coseparable build guarantees; non-degeneracy is not among
  // them (the solution picked by fixed pivoting may be degenerate)
  std::vector<std::string> names{"associativity", "coalgebra", "frobenius", "firmness",
                                 "section",       "induced-compat", "roundtrip", "morphisms"};
  if (units) names.push_back("local-units");
  std::vector<ff::CheckReport> reports = ff::run_suite(built_parts, names, suite_options(g));
  stamp(reports, ff::fnv1a_hex(ff::read_file(coalgebra_path)), g.seed, std::nullopt);
  print_reports(reports);

  ff::BundleFile out = ff::bundle_from_parts(*built.value, units);
  ff::save_bundle(out, out_path);
  return ff::all_passed(reports) ? kExitPass : kExitMathFailure;
}

int cmd_casimir(const std::string& bundle_path, const std::string& out_path,
                const GlobalOpts& g) {
  ff::BundleFile bf = ff::load_bundle(bundle_path);
  ff::BundleParts parts = bf.parts();
  if (!parts.algebra || !parts.coalgebra)
    throw ff::UsageError("casimir needs a complete bundle (algebra and coalgebra)");
  ff::FrobeniusBundle bundle = ff::make_bundle(*parts.algebra, *parts.coalgebra);

  ff::OpResult<ff::MultiplierPair> pair = ff::casimir_from_delta(bundle, g.parallel);
  if (!pair.ok()) {
    print_reports({pair.report});
    return kExitMathFailure;
  }
  ff::DeltaReconstruction rec =
      ff::delta_from_casimir(bundle.algebra, *pair.value, bundle.coalgebra.counit);

  nlohmann::json j;
  j["format"] = ff::kFormatKey;
  j["kind"] = "casimir";
  j["field"] = ff::field_to_json(bf.field);
  j["dim"] = bf.dim;
  j["basis"] = bf.basis;
  {
    nlohmann::json lam = nlohmann::json::array(), rho = nlohmann::json::array();
    for (const auto& [rc, v] : pair.value->lambda.entries())
      lam.push_back(nlohmann::json::array({rc.first, rc.second, v.str()}));
    for (const auto& [rc, v] : pair.value->rho.entries())
      rho.push_back(nlohmann::json::array({rc.first, rc.second, v.str()}));
    j["lambda"] = std::move(lam);
    j["rho"] = std::move(rho);
  }
  bool matches = false;
  {
    nlohmann::json elems = nlohmann::json::array();
    for (int i = 0; i < bundle.algebra.dim; ++i) {
      std::optional<ff::Vec> e =
          ff::multiplier_to_element(bundle.algebra, *pair.value, i, ff::Side::Left);
      nlohmann::json entry = nlohmann::json::array();
      if (e)
        for (int q = 0; q < e->dim(); ++q) entry.push_back((*e)[q].str());
      elems.push_back(std::move(entry));
    }
    j["elements"] = std::move(elems);
  }
  if (rec.coalgebra) {
    nlohmann::json comul = nlohmann::json::array();
    std::vector<ff::ComulTriple> sorted = rec.coalgebra->comul;
    std::sort(sorted.begin(), sorted.end(), [](const ff::ComulTriple& a, const ff::ComulTriple& c) {
      return std::tie(a.i, a.j, a.k) < std::tie(c.i, c.j, c.k);
    });
    for (const auto& t : sorted)
      comul.push_back(nlohmann::json::array({t.i, t.j, t.k, t.c.str()}));
    j["delta_reconstructed"] = std::move(comul);
    matches = rec.coalgebra->comultiplication() == bundle.coalgebra.comultiplication();
  }
  j["delta_matches"] = matches;
  ff::atomic_write(out_path, ff::dump_json(j));

  std::cout << "[" << (matches ? "pass" : "fail") << "] casimir -- reconstruction "
            << (matches ? "matches the original comultiplication" : "does not match") << "\n";
  return rec.coalgebra && matches ? kExitPass : kExitMathFailure;
}

int cmd_gen(const std::string& family, int order, int comatrix_n, bool integers,
            const std::string& field_arg, const std::string& group_table_path,
            const std::string& out_path, const GlobalOpts& g) {
  ff::FieldSpec field = parse_field_arg(field_arg);
  auto table = [&]() {
    if (!group_table_path.empty()) {
      nlohmann::json j = nlohmann::json::parse(ff::read_file(group_table_path));
      return ff::GroupTable::from_rows(j.get<std::vector<std::vector<int>>>());
    }
    return ff::GroupTable::cyclic(order);
  };

  if (family == "grouplike") {
    if (integers) {
      ff::LocallyFiniteBundle lf = ff::grouplike_integers(field);
      ff::OpResult<ff::WindowBundle> win = ff::materialize_window(lf, g.window);
      if (!win.ok()) throw ff::UsageError(win.report.witness->detail);
      ff::BundleFile out = ff::bundle_from_parts(win.value->bundle, win.value->units);
      out.window = ff::BundleFile::WindowMeta{lf.family, g.window};
      ff::save_bundle(out, out_path);
      return kExitPass;
    }
    ff::GeneratedBundle gen = ff::gen_grouplike(table(), field);
    ff::save_bundle(ff::bundle_from_parts(gen.bundle, gen.units), out_path);
    return kExitPass;
  }
  if (family == "comatrix") {
    ff::CoalgebraData c = ff::gen_comatrix(comatrix_n, field);
    ff::BundleFile out;
    out.field = field;
    out.dim = c.dim;
    out.basis = c.basis_labels;
    out.comul = c.comul;
    out.counit = c.counit;
    ff::save_bundle(out, out_path);
    return kExitPass;
  }
  if (family == "smash") {
    ff::GradedAlgebraData a = ff::group_algebra_self_graded(table(), field);
    ff::OpResult<ff::SmashAlgebra> s = ff::gen_graded_smash(a);
    if (!s.ok()) throw ff::UsageError("smash generation refused: " + s.report.witness->detail);
    ff::BundleFile out;
    out.field = field;
    out.dim = s.value->algebra.dim;
    out.basis = s.value->algebra.basis_labels;
    out.mul = s.value->algebra.mul;
    out.units = s.value->units;
    ff::save_bundle(out, out_path);
    return kExitPass;
  }
  if (family == "truncpoly") {
    ff::GeneratedBundle gen = ff::gen_trunc_poly(field);
    ff::save_bundle(ff::bundle_from_parts(gen.bundle, gen.units), out_path);
    return kExitPass;
  }
  throw ff::UsageError("unknown family: " + family +
                       " (expected grouplike, comatrix, smash or truncpoly)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"firmfrob: exact construction and verification of non-unital Frobenius "
               "structures, their modules and comodules"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed for sampled checks")->capture_default_str();
  app.add_option("--window", g.window, "window size for locally finite families")
      ->capture_default_str();
  app.add_option("--max-subset", g.max_subset, "local-unit subset certificate bound")
      ->capture_default_str();
  app.add_flag("--parallel,!--no-parallel", g.parallel,
               "parallelize heavy check loops (never changes verdicts)");

  std::string path, suite = "all", report_path, direction, map_path, bundle_path, out_path;
  bool verify_roundtrip = false;
  std::string family, field_arg = "q", group_table_path;
  int order = 2, comatrix_n = 2;
  bool integers = false;

  CLI::App* check = app.add_subcommand("check", "run a check suite on a bundle file");
  check->add_option("path", path, "bundle file")->required();
  check->add_option("--suite", suite, "comma-separated check names or \"all\"")
      ->capture_default_str();
  check->add_option("--report", report_path, "report output path (default <path>.report.json)");

  CLI::App* convert = app.add_subcommand("convert", "transport a module/comodule across the "
                                                    "category isomorphism");
  convert->add_option("direction", direction, "mod2comod or comod2mod")->required();
  convert->add_option("map", map_path, "module/comodule file")->required();
  convert->add_option("bundle", bundle_path, "bundle file")->required();
  convert->add_option("out", out_path, "output file")->required();
  convert->add_flag("--verify-roundtrip", verify_roundtrip,
                    "convert back and require bit-exact equality");

  CLI::App* cosep = app.add_subcommand("cosep", "solve for a coseparability retraction and "
                                                "build the induced bundle");
  cosep->add_option("coalgebra", path, "coalgebra file")->required();
  cosep->add_option("out", out_path, "output bundle file")->required();

  CLI::App* casimir = app.add_subcommand("casimir", "emit the Casimir multiplier pair and the "
                                                    "reconstruction report");
  casimir->add_option("bundle", path, "bundle file")->required();
  casimir->add_option("out", out_path, "output file")->required();

  CLI::App* gen = app.add_subcommand("gen", "emit a fixture file for a built-in family");
  gen->add_option("family", family, "grouplike | comatrix | smash | truncpoly")->required();
  gen->add_option("--order", order, "group order (cyclic table)")->capture_default_str();
  gen->add_option("--n", comatrix_n, "comatrix size")->capture_default_str();
  gen->add_flag("--integers", integers, "integers-indexed locally finite variant (grouplike)");
  gen->add_option("--field", field_arg, "q or f<prime>")->capture_default_str();
  gen->add_option("--group-table", group_table_path, "JSON file with the group table rows");
  gen->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(path, suite, report_path, g);
    if (convert->parsed())
      return cmd_convert(direction, map_path, bundle_path, out_path, verify_roundtrip, g);
    if (cosep->parsed()) return cmd_cosep(path, out_path, g);
    if (casimir->parsed()) return cmd_casimir(path, out_path, g);
    if (gen->parsed())
      return cmd_gen(family, order, comatrix_n, integers, field_arg, group_table_path, out_path,
                     g);
  } catch (const ff::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ff::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ff::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
