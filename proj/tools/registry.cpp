#include "registry.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "martensite/error.hpp"

namespace martensite::cli {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Rational field(const nlohmann::json& m, const char* key) {
  if (!m.contains(key) || !m[key].is_string())
    throw Error(ErrorCode::ParseError, std::string("material entry lacks string field '") + key + "'");
  return Rational::parse(m[key].get<std::string>());
}

}  // namespace

const Material& Registry::find(const std::string& name) const {
  for (const auto& m : materials)
    if (lower(m.name) == lower(name)) return m;
  throw Error(ErrorCode::UnknownMaterial, "no material named '" + name + "' in the registry");
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Registry load_registry(const std::string& path) {
  auto doc = load_json(path);
  Registry r;
  if (!doc.contains("version") || !doc["version"].is_number_integer() || !doc.contains("materials"))
    throw Error(ErrorCode::ParseError, path + ": expected a versioned materials list");
  r.version = doc["version"].get<int>();
  if (r.version != 1) throw Error(ErrorCode::ParseError, path + ": unsupported registry version");
  for (const auto& m : doc["materials"]) {
    Material mat;
    mat.name = m.value("name", "");
    if (mat.name.empty()) throw Error(ErrorCode::ParseError, path + ": material without a name");
    mat.params = {field(m, "alpha"), field(m, "beta"), field(m, "delta"), field(m, "epsilon")};
    if (m.contains("reported")) {
      mat.reported_lambda = field(m["reported"], "lambda");
      mat.reported_degeneracy = field(m["reported"], "degeneracy");
    }
    r.materials.push_back(std::move(mat));
  }
  return r;
}

std::string default_reference_path(const std::string& registry_path) {
  return (std::filesystem::path(registry_path).parent_path() / "reference.json").string();
}

}  // namespace martensite::cli
