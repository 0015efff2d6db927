#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "martensite/rational.hpp"
#include "martensite/variants.hpp"

namespace martensite::cli {

struct Material {
  std::string name;
  LatticeParams params;
  // Tabulated symmetric-T3 lambda and degeneracy quantity, when published.
  std::optional<Rational> reported_lambda;
  std::optional<Rational> reported_degeneracy;
};

struct Registry {
  int version = 0;
  std::vector<Material> materials;

  /// Case-insensitive lookup; throws UnknownMaterial.
  const Material& find(const std::string& name) const;
};

/// Throws ParseError on unreadable or malformed files.
Registry load_registry(const std::string& path);
nlohmann::json load_json(const std::string& path);

/// reference.json next to the registry file.
std::string default_reference_path(const std::string& registry_path);

}  // namespace martensite::cli
