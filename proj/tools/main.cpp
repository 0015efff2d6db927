#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "martensite/error.hpp"
#include "report.hpp"

#ifndef MARTENSITE_REGISTRY
#define MARTENSITE_REGISTRY "data/materials.json"
#endif

using namespace martensite;
using namespace martensite::cli;

int main(int argc, char** argv) {
  CLI::App app{"Twelve-variant monoclinic-I martensite: compatibility, symmetry, facets and T3s"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.registry_path = MARTENSITE_REGISTRY;
  std::string material, params, format = "text", width = "1/1000000000", out, triple;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--material", material, "material name from the registry");
    sub->add_option("--params", params, "alpha,beta,delta,epsilon as decimals or p/q");
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--width", width, "interval width for algebraic numbers");
    sub->add_option("--samples", cfg.samples, "sample budget for the five-dimensional witness");
    sub->add_option("--out", out, "write the report to this file");
    sub->add_option("--registry", cfg.registry_path, "materials registry (JSON)");
    sub->add_option("--reference", cfg.reference_path, "reference tables (JSON) for verify");
  };

  std::string command, t3_sub;
  for (const char* name : {"variants", "compat", "distances", "symmetry", "functionals", "facets", "verify"}) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    sub->callback([&command, name] { command = name; });
    if (std::string(name) == "symmetry") sub->add_option("--check", cfg.check, "r0, r1, r2 or r3");
  }
  auto* t3 = app.add_subcommand("t3", "T3 constructions");
  t3->require_subcommand(1);
  for (const char* name : {"list", "lambdas", "nodes", "level2", "witness"}) {
    auto* sub = t3->add_subcommand(name);
    common(sub);
    sub->add_option("--triple", triple, "restrict to one incompatible triple, e.g. 3,8,11");
    sub->callback([&command, &t3_sub, name] {
      command = "t3";
      t3_sub = name;
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!material.empty()) cfg.material = material;
    if (!params.empty()) cfg.params = params;
    if (!triple.empty()) cfg.triple = triple;
    cfg.format = parse_format(format);
    cfg.width = Rational::parse(width);
    if (cfg.samples == 0) throw Error(ErrorCode::InsufficientSamples, "--samples must be positive");

    Report r;
    if (command == "variants") r = cmd_variants(cfg);
    else if (command == "compat") r = cmd_compat(cfg);
    else if (command == "distances") r = cmd_distances(cfg);
    else if (command == "symmetry") r = cmd_symmetry(cfg);
    else if (command == "functionals") r = cmd_functionals(cfg);
    else if (command == "facets") r = cmd_facets(cfg);
    else if (command == "verify") r = cmd_verify(cfg);
    else r = cmd_t3(cfg, t3_sub);

    std::string text = render(r, cfg.format);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out);
      f << text;
    }
    return r.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::FlatPolytope:
        std::cerr << "  alpha = beta: the twelve strains span only three dimensions, facets are not enumerated\n";
        break;
      case ErrorCode::DegenerateParams:
        std::cerr << "  (alpha - beta) delta + eps^2 - delta^2 = 0: every pair is compatible, so the convex hull\n"
                     "  equals the lamination hull and there are no T3s\n";
        break;
      default: break;
    }
    return 2;
  }
}
