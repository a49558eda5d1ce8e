#ifndef FIRMFROB_IO_HPP
#define FIRMFROB_IO_HPP

#include <filesystem>

#include <json.hpp>

#include "firmfrob/suite.hpp"

namespace firmfrob {

inline constexpr const char* kFormatKey = "firmfrob/1";

/// The self-describing document for bundles: scalars are strings (bit-exact),
/// structural integers are plain JSON numbers.
struct BundleFile {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  std::optional<std::vector<MulTriple>> mul;
  std::optional<std::vector<ComulTriple>> comul;
  std::optional<Vec> counit;
  std::optional<LocalUnitFamily> units;
  std::vector<std::pair<std::string, ModuleData>> modules;
  std::vector<std::pair<std::string, ComoduleData>> comodules;
  struct WindowMeta {
    std::string family;
    int w = 0;
  };
  std::optional<WindowMeta> window;

  /// Validated views for the checkers.
  BundleParts parts() const;
};

BundleFile bundle_from_parts(const FrobeniusBundle& b,
                             const std::optional<LocalUnitFamily>& units = std::nullopt);

FieldSpec field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldSpec& f);

BundleFile parse_bundle_text(const std::string& text);
BundleFile load_bundle(const std::filesystem::path& path);
nlohmann::json bundle_to_json(const BundleFile& b);
void save_bundle(const BundleFile& b, const std::filesystem::path& path);

/// Standalone module/comodule document.
struct MapFile {
  std::string kind;  // "module" or "comodule"
  std::string name;
  FieldSpec field;
  int algebra_dim = 0;
  int dim = 0;
  LinMap map;
  MapFile() : map(FieldSpec::rationals(), 0, 0) {}
};

MapFile parse_map_text(const std::string& text);
MapFile load_map_file(const std::filesystem::path& path);
nlohmann::json map_to_json(const MapFile& m);
void save_map_file(const MapFile& m, const std::filesystem::path& path);

nlohmann::json report_to_json(const CheckReport& r);
nlohmann::json report_document(const std::vector<CheckReport>& reports,
                               const std::string& input_hash, std::uint64_t seed,
                               std::optional<int> window);

/// FNV-1a 64-bit content hash, hex-encoded; embedded in reports so every
/// verdict is replayable against the exact input bytes.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::filesystem::path& path);
/// Write via temp file + rename in the target directory.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string dump_json(const nlohmann::json& j);

}  // namespace firmfrob

#endif
