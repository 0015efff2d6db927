#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "martensite/rational.hpp"
#include "martensite/variants.hpp"
#include "registry.hpp"

namespace martensite::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);

struct RunConfig {
  std::optional<std::string> material;
  std::optional<std::string> params;  // "alpha,beta,delta,epsilon"
  Format format = Format::Text;
  Rational width = Rational(1, 1000000000);
  std::size_t samples = 32;
  std::string registry_path;
  std::string reference_path;  // empty: next to the registry
  std::string check;           // symmetry --check
  std::optional<std::string> triple;  // restricts t3 subcommands to one triple
};

/// Cells are strings, integers, booleans, integer lists or null.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  std::string command;
  Json input = Json::object();
  std::vector<std::string> notes;
  std::vector<Table> tables;
  int exit_code = 0;
};

/// Resolved parameter source. Exactly one of material and params may be set;
/// with neither, NiTi is used.
struct Resolved {
  LatticeParams params;
  std::optional<Material> material;
  std::string source;  // "material" or "params"
};
Resolved resolve(const RunConfig& cfg);

Report cmd_variants(const RunConfig& cfg);
Report cmd_compat(const RunConfig& cfg);
Report cmd_distances(const RunConfig& cfg);
Report cmd_symmetry(const RunConfig& cfg);
Report cmd_functionals(const RunConfig& cfg);
Report cmd_facets(const RunConfig& cfg);
/// sub is one of list, lambdas, nodes, level2, witness.
Report cmd_t3(const RunConfig& cfg, const std::string& sub);
/// Exit code 1 when some claim fails.
Report cmd_verify(const RunConfig& cfg);

std::string render(const Report& r, Format f);

// shared by the command implementations
Report start_report(const std::string& command, const Resolved& res);
int digits_for(const Rational& width);

}  // namespace martensite::cli
