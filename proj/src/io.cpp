#include "firmfrob/io.hpp"

#include <algorithm>
#include <fstream>

namespace firmfrob {

using nlohmann::json;

BundleParts BundleFile::parts() const {
  BundleParts p;
  if (mul) p.algebra = make_algebra(field, basis, *mul);
  if (comul) {
    if (!counit) throw ParseError("bundle has comultiplication but no counit");
    p.coalgebra = make_coalgebra(field, basis, *comul, *counit);
  }
  p.units = units;
  return p;
}

BundleFile bundle_from_parts(const FrobeniusBundle& b, const std::optional<LocalUnitFamily>& units) {
  BundleFile f;
  f.field = b.algebra.field;
  f.dim = b.algebra.dim;
  f.basis = b.algebra.basis_labels;
  f.mul = b.algebra.mul;
  f.comul = b.coalgebra.comul;
  f.counit = b.coalgebra.counit;
  f.units = units;
  return f;
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("field descriptor missing");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) throw ParseError("prime field descriptor has no modulus");
    try {
      return FieldSpec::prime(j.at("p").get<std::uint32_t>());
    } catch (const UsageError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field kind: " + kind);
}

json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::Rationals) return json{{"kind", "rationals"}};
  return json{{"kind", "prime"}, {"p", f.p}};
}

namespace {

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_string()) throw ParseError("scalars must be strings");
  return Scalar::parse(f, j.get<std::string>());
}

Vec vec_from_json(const FieldSpec& f, const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("vector has wrong length");
  Vec v(f, dim);
  for (int i = 0; i < dim; ++i) v.set(i, scalar_from_json(f, j.at(static_cast<std::size_t>(i))));
  return v;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
  return out;
}

int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

LinMap linmap_from_json(const FieldSpec& f, const json& j, int rows, int cols) {
  LinMap m(f, rows, cols);
  if (!j.is_array()) throw ParseError("sparse map must be an array of [row, col, scalar]");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError("sparse map entry must be [row, col, scalar]");
    int r = int_from_json(e.at(0), "row");
    int c = int_from_json(e.at(1), "col");
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw ParseError("sparse map index out of range");
    m.add_at(r, c, scalar_from_json(f, e.at(2)));
  }
  return m;
}

json linmap_to_json(const LinMap& m) {
  json out = json::array();
  for (const auto& [rc, v] : m.entries()) out.push_back(json::array({rc.first, rc.second, v.str()}));
  return out;
}

void require_format(const json& j) {
  if (!j.contains("format") || j.at("format") != kFormatKey)
    throw ParseError("missing or unsupported format key (want \"" + std::string(kFormatKey) +
                     "\")");
}

}  // namespace

BundleFile parse_bundle_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    require_format(j);
    BundleFile b;
    b.field = field_from_json(j.at("field"));
    b.dim = int_from_json(j.at("dim"), "dim");
    if (b.dim < 0) throw ParseError("negative dimension");
    b.basis = j.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(b.basis.size()) != b.dim)
      throw ParseError("basis label count does not match dim");
    if (j.contains("mul")) {
      std::vector<MulTriple> mul;
      for (const auto& e : j.at("mul")) {
        if (!e.is_array() || e.size() != 4) throw ParseError("mul entry must be [i, j, k, scalar]");
        mul.push_back(MulTriple{int_from_json(e.at(0), "i"), int_from_json(e.at(1), "j"),
                                int_from_json(e.at(2), "k"), scalar_from_json(b.field, e.at(3))});
      }
      b.mul = std::move(mul);
    }
    if (j.contains("comul")) {
      std::vector<ComulTriple> comul;
      for (const auto& e : j.at("comul")) {
        if (!e.is_array() || e.size() != 4)
          throw ParseError("comul entry must be [i, j, k, scalar]");
        comul.push_back(ComulTriple{int_from_json(e.at(0), "i"), int_from_json(e.at(1), "j"),
                                    int_from_json(e.at(2), "k"),
                                    scalar_from_json(b.field, e.at(3))});
      }
      b.comul = std::move(comul);
      if (!j.contains("counit")) throw ParseError("comul present but counit missing");
    }
    if (j.contains("counit")) b.counit = vec_from_json(b.field, j.at("counit"), b.dim);
    if (j.contains("local_units")) {
      const json& lu = j.at("local_units");
      LocalUnitFamily fam;
      fam.max_subset_size = int_from_json(lu.at("max_subset_size"), "max_subset_size");
      if (fam.max_subset_size < 1) throw ParseError("max_subset_size must be positive");
      for (const auto& e : lu.at("elements")) fam.elements.push_back(vec_from_json(b.field, e, b.dim));
      b.units = std::move(fam);
    }
    if (j.contains("modules")) {
      for (const auto& e : j.at("modules")) {
        int dim = int_from_json(e.at("dim"), "module dim");
        b.modules.emplace_back(
            e.value("name", std::string("module")),
            ModuleData(dim, linmap_from_json(b.field, e.at("action"), dim, dim * b.dim)));
      }
    }
    if (j.contains("comodules")) {
      for (const auto& e : j.at("comodules")) {
        int dim = int_from_json(e.at("dim"), "comodule dim");
        b.comodules.emplace_back(
            e.value("name", std::string("comodule")),
            ComoduleData(dim, linmap_from_json(b.field, e.at("coaction"), dim * b.dim, dim)));
      }
    }
    if (j.contains("window")) {
      BundleFile::WindowMeta wm;
      wm.family = j.at("window").at("family").get<std::string>();
      wm.w = int_from_json(j.at("window").at("w"), "window size");
      b.window = std::move(wm);
    }
    // shape validation happens here so parse errors get exit code 2
    (void)b.parts();
    return b;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed bundle document: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

BundleFile load_bundle(const std::filesystem::path& path) {
  return parse_bundle_text(read_file(path));
}

json bundle_to_json(const BundleFile& b) {
  json j;
  j["format"] = kFormatKey;
  j["kind"] = "bundle";
  j["field"] = field_to_json(b.field);
  j["dim"] = b.dim;
  j["basis"] = b.basis;
  if (b.mul) {
    std::vector<MulTriple> sorted = *b.mul;
    std::sort(sorted.begin(), sorted.end(), [](const MulTriple& a, const MulTriple& c) {
      return std::tie(a.i, a.j, a.k) < std::tie(c.i, c.j, c.k);
    });
    json arr = json::array();
    for (const auto& t : sorted) arr.push_back(json::array({t.i, t.j, t.k, t.c.str()}));
    j["mul"] = std::move(arr);
  }
  if (b.comul) {
    std::vector<ComulTriple> sorted = *b.comul;
    std::sort(sorted.begin(), sorted.end(), [](const ComulTriple& a, const ComulTriple& c) {
      return std::tie(a.i, a.j, a.k) < std::tie(c.i, c.j, c.k);
    });
    json arr = json::array();
    for (const auto& t : sorted) arr.push_back(json::array({t.i, t.j, t.k, t.c.str()}));
    j["comul"] = std::move(arr);
  }
  if (b.counit) j["counit"] = vec_to_json(*b.counit);
  if (b.units) {
    json elems = json::array();
    for (const auto& e : b.units->elements) elems.push_back(vec_to_json(e));
    j["local_units"] = json{{"max_subset_size", b.units->max_subset_size}, {"elements", elems}};
  }
  if (!b.modules.empty()) {
    json arr = json::array();
    for (const auto& [name, m] : b.modules)
      arr.push_back(json{{"name", name}, {"dim", m.dim}, {"action", linmap_to_json(m.action)}});
    j["modules"] = std::move(arr);
  }
  if (!b.comodules.empty()) {
    json arr = json::array();
    for (const auto& [name, n] : b.comodules)
      arr.push_back(
          json{{"name", name}, {"dim", n.dim}, {"coaction", linmap_to_json(n.coaction)}});
    j["comodules"] = std::move(arr);
  }
  if (b.window) j["window"] = json{{"family", b.window->family}, {"w", b.window->w}};
  return j;
}

void save_bundle(const BundleFile& b, const std::filesystem::path& path) {
  atomic_write(path, dump_json(bundle_to_json(b)));
}

MapFile parse_map_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    require_format(j);
    MapFile m;
    m.kind = j.at("kind").get<std::string>();
    if (m.kind != "module" && m.kind != "comodule")
      throw ParseError("kind must be \"module\" or \"comodule\"");
    m.name = j.value("name", m.kind);
    m.field = field_from_json(j.at("field"));
    m.algebra_dim = int_from_json(j.at("algebra_dim"), "algebra_dim");
    m.dim = int_from_json(j.at("dim"), "dim");
    if (m.dim < 0 || m.algebra_dim < 0) throw ParseError("negative dimension");
    const char* key = m.kind == "module" ? "action" : "coaction";
    int rows = m.kind == "module" ? m.dim : m.dim * m.algebra_dim;
    int cols = m.kind == "module" ? m.dim * m.algebra_dim : m.dim;
    m.map = linmap_from_json(m.field, j.at(key), rows, cols);
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed map document: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

MapFile load_map_file(const std::filesystem::path& path) {
  return parse_map_text(read_file(path));
}

json map_to_json(const MapFile& m) {
  json j;
  j["format"] = kFormatKey;
  j["kind"] = m.kind;
  j["name"] = m.name;
  j["field"] = field_to_json(m.field);
  j["algebra_dim"] = m.algebra_dim;
  j["dim"] = m.dim;
  j[m.kind == "module" ? "action" : "coaction"] = linmap_to_json(m.map);
  return j;
}

void save_map_file(const MapFile& m, const std::filesystem::path& path) {
  atomic_write(path, dump_json(map_to_json(m)));
}

json report_to_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["verdict"] = to_string(r.verdict);
  j["seconds"] = r.seconds;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.window >= 0) j["window"] = r.window;
  if (r.witness) {
    json w;
    if (!r.witness->indices.empty()) w["indices"] = r.witness->indices;
    if (r.witness->expected) w["expected"] = vec_to_json(*r.witness->expected);
    if (r.witness->actual) w["actual"] = vec_to_json(*r.witness->actual);
    if (!r.witness->detail.empty()) w["detail"] = r.witness->detail;
    j["witness"] = std::move(w);
  }
  return j;
}

json report_document(const std::vector<CheckReport>& reports, const std::string& input_hash,
                     std::uint64_t seed, std::optional<int> window) {
  json j;
  j["format"] = kFormatKey;
  j["kind"] = "report";
  j["input_hash"] = input_hash;
  j["seed"] = seed;
  if (window) j["window"] = *window;
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    arr.push_back(report_to_json(r));
  }
  j["checks"] = std::move(arr);
  j["overall"] = ok ? "pass" : "fail";
  return j;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return content;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write file: " + tmp.string());
    out << content;
    if (!out) throw UsageError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace firmfrob
