#include "report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "martensite/error.hpp"
#include "martensite/polytope.hpp"
#include "martensite/symmetry.hpp"
#include "martensite/t3.hpp"

namespace martensite::cli {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorCode::ParseError, "format must be text, json or csv");
}

Resolved resolve(const RunConfig& cfg) {
  if (cfg.material && cfg.params) throw Error(ErrorCode::InvalidParams, "give either --material or --params, not both");
  if (cfg.width.sign() <= 0) throw Error(ErrorCode::InvalidParams, "--width must be positive");
  Resolved r;
  if (cfg.params) {
    r.params = LatticeParams::parse(*cfg.params);
    r.source = "params";
  } else {
    r.material = load_registry(cfg.registry_path).find(cfg.material.value_or("NiTi"));
    r.params = r.material->params;
    r.source = "material";
  }
  (void)classify(r.params);  // rejects non-positive delta or epsilon
  return r;
}

int digits_for(const Rational& width) {
  int d = 0;
  Rational unit(1);
  while (unit > width && d < 60) {
    unit /= Rational(10);
    ++d;
  }
  return std::max(d, 1);
}

namespace {

std::string_view regime_banner(Regime r) {
  switch (r) {
    case Regime::Ia: return "regime Ia (epsilon < delta)";
    case Regime::Boundary: return "boundary regime (epsilon = delta)";
    case Regime::Ib: return "regime Ib (epsilon > delta)";
  }
  return "";
}

Json ints(const std::vector<int>& v) { return Json(v); }
Json ints(const Triple& t) { return Json(std::vector<int>(t.begin(), t.end())); }

std::string strain_str(const SymStrain<Rational>& e) {
  std::string s = "(";
  for (size_t k = 0; k < 6; ++k) s += (k ? ", " : "") + e.v[k].str();
  return s + ")";
}

// Enclosure at half the width, rounded outward to a decimal grid fine enough
// that the total stays within the width.
std::string interval_str(const AlgebraicScalar& x, const Rational& width) {
  if (x.is_rational()) return x.rational_value().str();
  auto e = x.enclosure(width / Rational(2));
  Rational scale(1);
  for (int k = digits_for(width / Rational(4)); k > 0; --k) scale *= Rational(10);
  Rational lo(mpz_class((e.lo * scale).floor()), scale.numerator());
  Rational hi(-mpz_class((-(e.hi * scale)).floor()), scale.numerator());
  return "[" + lo.str() + ", " + hi.str() + "]";
}

std::string decimal_str(const AlgebraicScalar& x, const RunConfig& cfg) {
  int d = digits_for(cfg.width);
  if (x.is_rational()) return x.rational_value().decimal(d);
  return x.enclosure(cfg.width).midpoint().decimal(d);
}

std::string joined_decimals(const std::array<AlgebraicScalar, 3>& xs, const RunConfig& cfg) {
  std::string s;
  for (size_t k = 0; k < 3; ++k) s += (k ? " " : "") + decimal_str(xs[k], cfg);
  return s;
}

std::vector<Triple> selected_triples(const RunConfig& cfg, const VariantSet& v) {
  auto all = enumerate_incompatible_triples(v);
  if (!cfg.triple) return all;
  Triple t{};
  std::stringstream ss(*cfg.triple);
  std::string item;
  size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) throw Error(ErrorCode::ParseError, "--triple takes three indices");
    try {
      t[k++] = std::stoi(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad index '" + item + "' in --triple");
    }
  }
  if (k != 3) throw Error(ErrorCode::ParseError, "--triple takes three indices");
  std::sort(t.begin(), t.end());
  if (std::find(all.begin(), all.end(), t) == all.end())
    throw Error(ErrorCode::InvalidParams, "--triple is not one of the incompatible triples");
  return {t};
}

std::string triple_str(const Triple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

}  // namespace

Report start_report(const std::string& command, const Resolved& res) {
  Report r;
  r.command = command;
  auto flags = classify(res.params);
  r.input["source"] = res.source;
  r.input["material"] = res.material ? Json(res.material->name) : Json(nullptr);
  r.input["alpha"] = res.params.alpha.str();
  r.input["beta"] = res.params.beta.str();
  r.input["delta"] = res.params.delta.str();
  r.input["epsilon"] = res.params.epsilon.str();
  r.input["regime"] = std::string(to_string(flags.regime));
  r.input["degeneracy"] = flags.degeneracy.str();
  return r;
}

Report cmd_variants(const RunConfig& cfg) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  Report r = start_report("variants", res);
  Rational tr = Rational(2) * res.params.alpha + res.params.beta;
  r.notes.push_back("every strain has trace 2 alpha + beta = " + tr.str());
  Table t{"variants", {"i", "e11", "e22", "e33", "e12", "e13", "e23", "trace"}, {}};
  for (int i = 1; i <= kVariantCount; ++i) {
    std::vector<Json> row{i};
    for (size_t k = 0; k < 6; ++k) row.emplace_back(v[i].v[k].str());
    row.emplace_back(v[i].trace().str());
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_compat(const RunConfig& cfg) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  auto c = compatibility_table(v);
  Report r = start_report("compat", res);
  if (c.degenerate) {
    r.notes.push_back("(alpha - beta) delta + eps^2 - delta^2 = 0: every pair is compatible");
  } else {
    Rational d = Rational(4) * res.params.epsilon * v.flags.degeneracy;
    r.notes.push_back("plus: det(e(j) - e(i)) = +4 eps Q = " + d.str() + "; minus: the negative of it");
  }
  Table t{"compatibility", {"i", "zero", "plus", "minus"}, {}};
  for (int i = 1; i <= kVariantCount; ++i) {
    const auto& row = c.rows[static_cast<size_t>(i - 1)];
    t.rows.push_back({i, ints(row.zero), ints(row.plus), ints(row.minus)});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_distances(const RunConfig& cfg) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  Report r = start_report("distances", res);
  Table t{"distances", {"i", "j", "class", "squared_distance", "value"}, {}};
  for (const auto& e : distance_table(v))
    t.rows.push_back({e.i, e.j, std::string(to_string(e.cls)), distance_class_polynomial(e.cls).str(), e.value.str()});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_symmetry(const RunConfig& cfg) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  Report r = start_report("symmetry", res);
  Table gens{"generators", {"label", "cycles", "matches_rotation"}, {}};
  gens.rows.push_back({"r0", inversion().cycles(), nullptr});
  for (int a = 1; a <= 3; ++a)
    gens.rows.push_back({"r" + std::to_string(a), rotation_generator(a).cycles(),
                         permutation_from_rotation(a) == rotation_generator(a)});
  r.tables.push_back(std::move(gens));
  Table groups{"groups", {"generators", "order"}, {}};
  groups.rows.push_back({"r1 r2 r3", static_cast<int>(rotation_group().order())});
  groups.rows.push_back({"r0 r1 r2 r3", static_cast<int>(full_group().order())});
  r.tables.push_back(std::move(groups));
  if (cfg.check.empty()) return r;

  Permutation p;
  if (cfg.check == "r0") p = inversion();
  else if (cfg.check == "r1" || cfg.check == "r2" || cfg.check == "r3") p = rotation_generator(cfg.check[1] - '0');
  else throw Error(ErrorCode::InvalidParams, "--check takes r0, r1, r2 or r3");
  r.input["check"] = cfg.check;
  Table t{"checks", {"family", "holds", "decided_by", "witness", "reason"}, {}};
  auto add = [&](const std::string& family, const SymmetryCheck& c) {
    Json w = c.witness ? Json(std::vector<int>{c.witness->first, c.witness->second}) : Json(nullptr);
    t.rows.push_back({family, c.holds, c.symbolic ? "identity" : "exact", w, c.reason});
  };
  add("E", is_symmetry_symbolic(p));
  add("E", is_symmetry(p, v));
  add("E2_compatible", is_tuple_symmetry(p, compatible_pairs(v), v));
  add("E2_incompatible", is_tuple_symmetry(p, incompatible_pairs(v), v));
  add("E3_incompatible", is_tuple_symmetry(p, incompatible_triples(v), v));
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_functionals(const RunConfig& cfg) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  Report r = start_report("functionals", res);
  Table t{"functionals", {"functional", "min", "minimisers", "max", "maximisers"}, {}};
  for (const char* name : {"H0", "H1", "H2", "H3", "H11", "H22", "H33", "H12", "H13", "H23"}) {
    auto x = functional_extremisers(v, functional_by_name(name));
    t.rows.push_back({name, x.min_value.str(), ints(x.minimisers), x.max_value.str(), ints(x.maximisers)});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_facets(const RunConfig& cfg) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  Report r = start_report("facets", res);
  auto e = enumerate_facets_detailed(v);
  r.notes.push_back(std::string(regime_banner(v.flags.regime)) + ": " + std::to_string(e.facets.size()) + " facets");
  r.notes.push_back(std::to_string(e.g1.size()) + " of 792 five-subsets span four dimensions; " +
                    std::to_string(e.g2.size()) + " support E");
  Table t{"facets", {"facet", "vertices", "group", "orbit", "normal", "offset"}, {}};
  std::map<FacetGroup, int> counts;
  int k = 0;
  for (const auto& f : e.facets) {
    ++counts[f.group];
    t.rows.push_back({++k, ints(f.vertices), std::string(to_string(f.group)), f.orbit, strain_str(f.normal),
                      f.offset.str()});
  }
  r.tables.push_back(std::move(t));
  Table g{"groups", {"group", "count"}, {}};
  for (auto [grp, n] : counts) g.rows.push_back({std::string(to_string(grp)), n});
  r.tables.push_back(std::move(g));
  return r;
}

Report cmd_t3(const RunConfig& cfg, const std::string& sub) {
  auto res = resolve(cfg);
  auto v = build_variants(res.params);
  Report r = start_report("t3 " + sub, res);
  r.input["width"] = cfg.width.str();
  auto triples = selected_triples(cfg, v);
  std::vector<AlgebraicScalar> known;
  auto solve = [&](const Triple& t) {
    auto rec = solve_t3(v, t, known);
    known.insert(known.end(), rec.lambdas.begin(), rec.lambdas.end());
    return rec;
  };

  if (sub == "list") {
    Table t{"triples", {"triple", "dual", "det_sign"}, {}};
    for (const auto& tr : triples) {
      auto d = inversion().apply_set({tr.begin(), tr.end()});
      t.rows.push_back({ints(tr), ints(d), t3_signs(v[tr[0]], v[tr[1]], v[tr[2]]).common_sign});
    }
    r.notes.push_back(std::to_string(triples.size()) + " pairwise incompatible triples");
    r.tables.push_back(std::move(t));
  } else if (sub == "lambdas") {
    if (res.material && res.material->reported_lambda)
      r.notes.push_back("tabulated lambda " + res.material->reported_lambda->decimal(4) +
                        " (vertex order fixes lambda or 1 - lambda)");
    r.notes.push_back("vertices in ascending index order");
    Table t{"lambdas", {"triple", "pair", "lambda", "decimal", "one_minus", "orientation"}, {}};
    for (const auto& tr : triples) {
      auto rec = solve(tr);
      const char* pairs[] = {"12", "23", "31"};
      for (size_t k = 0; k < 3; ++k)
        t.rows.push_back({ints(tr), pairs[k], interval_str(rec.lambdas[k], cfg.width), decimal_str(rec.lambdas[k], cfg),
                          decimal_str(AlgebraicScalar(1) - rec.lambdas[k], cfg), rec.orientation});
    }
    r.tables.push_back(std::move(t));
  } else if (sub == "nodes") {
    r.notes.push_back("barycentric coordinates are with respect to the vertices in ascending order");
    Table nodes{"nodes", {"triple", "node", "barycentric"}, {}};
    Table checks{"checks",
                 {"triple", "symmetric", "distinct", "pairwise_compatible", "compatible_with_vertices",
                  "barycentre_incompatible"},
                 {}};
    for (const auto& tr : triples) {
      auto rec = solve(tr);
      auto c = t3_nodes_checks(rec);
      if (rec.node_barycentric) {
        const char* names[] = {"e12", "e23", "e31"};
        for (size_t k = 0; k < 3; ++k)
          nodes.rows.push_back({ints(tr), names[k], joined_decimals((*rec.node_barycentric)[k], cfg)});
      }
      bool bary = std::all_of(c.barycentre_incompatible.begin(), c.barycentre_incompatible.end(), [](bool b) { return b; });
      checks.rows.push_back({ints(tr), rec.symmetric, c.nodes_distinct, c.nodes_pairwise_compatible,
                             c.nodes_compatible_with_vertices, bary});
    }
    r.tables.push_back(std::move(nodes));
    r.tables.push_back(std::move(checks));
  } else if (sub == "level2") {
    Table t{"level2",
            {"base", "neighbour", "node", "barycentric", "vertices", "chain_identical", "det_sign", "common_det",
             "decimal", "barycentre_incompatible"},
            {}};
    std::map<Triple, int> seen;
    for (const auto& l : enumerate_level2(v)) {
      int node = ++seen[l.base];
      if (std::find(triples.begin(), triples.end(), l.base) == triples.end()) continue;
      std::string verts = triple_str(l.vertex_indices[0]) + " | " + triple_str(l.vertex_indices[1]) + " | " +
                          triple_str(l.vertex_indices[2]);
      bool bary = std::all_of(l.barycentre_incompatible.begin(), l.barycentre_incompatible.end(), [](bool b) { return b; });
      t.rows.push_back({ints(l.base), ints(l.neighbour), node, joined_decimals(l.barycentric, cfg), verts,
                        l.chain_identical, l.det_sign, interval_str(l.common_det, cfg.width),
                        decimal_str(l.common_det, cfg), bary});
    }
    r.notes.push_back("vertices: the first neighbour and its images under the diagonal rotation");
    r.tables.push_back(std::move(t));
  } else if (sub == "witness") {
    r.input["samples"] = static_cast<int>(cfg.samples);
    Table t{"witness", {"base", "neighbour", "dual", "samples", "t3_passed", "dimension", "certificate"}, {}};
    for (const auto& tr : triples) {
      auto w = five_dim_witness(v, tr, cfg.samples);
      t.rows.push_back({ints(w.base), ints(w.neighbour), ints(w.dual), static_cast<int>(w.samples),
                        static_cast<int>(w.t3_passed), w.dimension, w.certificate});
    }
    r.tables.push_back(std::move(t));
  } else {
    throw Error(ErrorCode::ParseError, "t3 subcommands: list, lambdas, nodes, level2, witness");
  }
  return r;
}

// ---- rendering

namespace {

std::string cell_text(const Json& c) {
  if (c.is_null()) return "";
  if (c.is_string()) return c.get<std::string>();
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_array()) {
    std::string s;
    for (const auto& x : c) s += (s.empty() ? "" : " ") + x.dump();
    return s;
  }
  return c.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string render_json(const Report& r) {
  Json doc;
  doc["schema"] = "martensite-report/1";
  doc["command"] = r.command;
  doc["input"] = r.input;
  doc["notes"] = r.notes;
  doc["tables"] = Json::array();
  for (const auto& t : r.tables) {
    Json jt;
    jt["name"] = t.name;
    jt["columns"] = t.columns;
    jt["rows"] = Json::array();
    for (const auto& row : t.rows) jt["rows"].push_back(row);
    doc["tables"].push_back(jt);
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  for (size_t k = 0; k < r.tables.size(); ++k) {
    const auto& t = r.tables[k];
    if (k) os << "\n";
    os << "# " << t.name << "\n";
    for (size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
      os << "\n";
    }
  }
  return os.str();
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ":";
  if (!r.input["material"].is_null()) os << " " << r.input["material"].get<std::string>();
  os << " alpha=" << r.input["alpha"].get<std::string>() << " beta=" << r.input["beta"].get<std::string>()
     << " delta=" << r.input["delta"].get<std::string>() << " epsilon=" << r.input["epsilon"].get<std::string>()
     << " (" << r.input["regime"].get<std::string>() << ")\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  for (const auto& t : r.tables) {
    os << "\n[" << t.name << "]\n";
    std::vector<size_t> w(t.columns.size());
    for (size_t c = 0; c < w.size(); ++c) w[c] = t.columns[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (size_t c = 0; c < row.size(); ++c) {
        line.push_back(cell_text(row[c]));
        w[c] = std::max(w[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      std::string s;
      for (size_t c = 0; c < line.size(); ++c) {
        s += line[c];
        if (c + 1 < line.size()) s += std::string(w[c] - line[c].size() + 2, ' ');
      }
      os << s << "\n";
    };
    emit(t.columns);
    std::vector<std::string> rule;
    for (size_t c = 0; c < w.size(); ++c) rule.emplace_back(w[c], '-');
    emit(rule);
    for (const auto& line : cells) emit(line);
  }
  return os.str();
}

}  // namespace

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json: return render_json(r);
    case Format::Csv: return render_csv(r);
    case Format::Text: return render_text(r);
  }
  return "";
}

}  // namespace martensite::cli
