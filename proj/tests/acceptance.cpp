// Acceptance runner: one PASS/FAIL line per criterion, with its tolerance and
// runtime limit fixed below. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/plane_cone.hpp"
#include "martensite/polytope.hpp"
#include "martensite/symmetry.hpp"
#include "martensite/t3.hpp"
#include "oracles.hpp"
#include "published_tables.hpp"

using namespace martensite;

namespace {

constexpr double kLambdaTol = 5e-5;
constexpr double kDegeneracyTol = 5e-5;

struct Result {
  bool ok = true;
  std::string detail;
};

// Collects the first failure reason; later checks still run.
struct Checker {
  Result r;
  void operator()(bool cond, const std::string& what) {
    if (!cond && r.ok) {
      r.ok = false;
      r.detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<Result()>& body) {
  auto start = std::chrono::steady_clock::now();
  Result res;
  try {
    res = body();
  } catch (const std::exception& e) {
    res = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.ok && secs > limit_s) res = {false, "over the time limit"};
  if (!res.ok) ++failures;
  std::printf("criterion %2d  %s  %s (%.2f s, limit %.0f s)%s%s\n", n, res.ok ? "PASS" : "FAIL", title, secs, limit_s,
              res.detail.empty() ? "" : ": ", res.detail.c_str());
}

template <class T>
std::array<std::array<T, 3>, 3> full(const SymStrain<T>& e) {
  std::array<std::array<T, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = e.at(i, j);
  return m;
}

std::set<std::vector<int>> vertex_sets(const std::vector<Facet>& f) {
  std::set<std::vector<int>> s;
  for (const auto& x : f) s.insert(x.vertices);
  return s;
}

bool s4_invariant(const std::vector<Facet>& facets) {
  auto sets = vertex_sets(facets);
  for (const auto& g : rotation_group().elements)
    for (const auto& s : sets)
      if (!sets.count(g.apply_set(s))) return false;
  std::map<FacetGroup, std::set<int>> orbits;
  for (const auto& f : facets) orbits[f.group].insert(f.orbit);
  for (const auto& [g, o] : orbits)
    if (o.size() != 1) return false;
  return true;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

int main() {
  const auto& s = symbolic_variants();
  const Polynomial q = (s.alpha - s.beta) * s.delta + s.epsilon * s.epsilon - s.delta * s.delta;
  const Polynomial four_eps_q = Polynomial(4) * s.epsilon * q;

  criterion(1, "compatibility: 66 determinants are 0 or +-4 eps Q identically and match the table", 1, [&] {
    Checker c;
    for (int i = 1; i <= 12; ++i) {
      const auto& row = table::kCompatibility[static_cast<size_t>(i - 1)];
      for (int j = 1; j <= 12; ++j) {
        if (j == i) continue;
        Polynomial d = oracle::det3_cofactor(full(SymStrain<Polynomial>(s[j] - s[i])));
        std::string at = "pair " + std::to_string(i) + "," + std::to_string(j);
        if (d.is_zero()) c(contains(row.zero, j), at + " is zero but not listed so");
        else if (d == four_eps_q) c(contains(row.plus, j), at + " is +4 eps Q but not listed so");
        else if (d == -four_eps_q) c(contains(row.minus, j), at + " is -4 eps Q but not listed so");
        else c(false, at + " is not 0 or +-4 eps Q");
      }
    }
    auto lib = symbolic_compatibility_table();
    c(lib.all_classified, "library left a determinant unclassified");
    for (size_t i = 0; i < 12; ++i)
      c(lib.table.rows[i].zero == table::kCompatibility[i].zero && lib.table.rows[i].plus == table::kCompatibility[i].plus &&
            lib.table.rows[i].minus == table::kCompatibility[i].minus,
        "library table differs in row " + std::to_string(i + 1));
    return c.r;
  });

  criterion(2, "distances: 66 squared distances match the five class polynomials", 1, [&] {
    const Polynomial ab = s.alpha - s.beta;
    const Polynomial two(2), four(4), eight(8), twelve(12), sixteen(16);
    const Polynomial c16 = sixteen * s.epsilon * s.epsilon;
    const Polynomial c8 = eight * (s.delta * s.delta + s.epsilon * s.epsilon);
    const Polynomial cminus = two * ab * ab + four * (s.delta - s.epsilon) * (s.delta - s.epsilon);
    const Polynomial cplus = two * ab * ab + four * (s.delta + s.epsilon) * (s.delta + s.epsilon);
    const Polynomial cinc = two * ab * ab + four * s.delta * s.delta + twelve * s.epsilon * s.epsilon;
    Checker c;
    for (int i = 1; i <= 12; ++i) {
      const auto& row = table::kDistances[static_cast<size_t>(i - 1)];
      for (int j = i + 1; j <= 12; ++j) {
        auto m = full(SymStrain<Polynomial>(s[i] - s[j]));
        Polynomial d(0);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) d += m[a][b] * m[a][b];
        const Polynomial& want = contains(row.c16, j)      ? c16
                                 : contains(row.c8, j)     ? c8
                                 : contains(row.cminus, j) ? cminus
                                 : contains(row.cplus, j)  ? cplus
                                                           : cinc;
        c(d == want, "pair " + std::to_string(i) + "," + std::to_string(j));
      }
    }
    int lib = 0;
    for (const auto& e : symbolic_distance_table()) lib += e.cls != DistanceClass::Unclassified;
    c(lib == 66, "library classified " + std::to_string(lib) + " pairs");
    return c.r;
  });

  criterion(3, "symmetry: order 24 from r1, r2, r3 (generator table reproduced), 48 with r0, r0 on the four families", 1, [&] {
    Checker c;
    std::vector<Permutation> derived;
    for (int a = 1; a <= 3; ++a) {
      derived.push_back(permutation_from_rotation(a));
      c(derived.back() == Permutation(table::kGenerators[static_cast<size_t>(a - 1)]),
        "r" + std::to_string(a) + " differs from the generator table");
    }
    auto g = generate_group(derived);
    c(g.order() == 24, "rotation group order " + std::to_string(g.order()));
    derived.push_back(inversion());
    auto h = generate_group(derived);
    c(h.order() == 48, "full group order " + std::to_string(h.order()));
    c(!is_symmetry_symbolic(inversion()).holds, "r0 preserves E identically");
    for (const auto& p : fixture::materials()) {
      auto v = build_variants(p);
      c(!is_symmetry(inversion(), v).holds, "r0 preserves E");
      c(!is_tuple_symmetry(inversion(), compatible_pairs(v), v).holds, "r0 preserves the compatible pairs");
      c(is_tuple_symmetry(inversion(), incompatible_pairs(v), v).holds, "r0 breaks the incompatible pairs");
      c(is_tuple_symmetry(inversion(), incompatible_triples(v), v).holds, "r0 breaks the incompatible triples");
    }
    return c.r;
  });

  criterion(4, "facets: 25 (NiTi), 7 (eps = delta), 33 (eps > delta) with the published vertex sets", 10, [&] {
    Checker c;
    auto ia = enumerate_facets(build_variants(fixture::niti()));
    auto bd = enumerate_facets(build_variants(fixture::boundary()));
    auto ib = enumerate_facets(build_variants(fixture::regime_ib()));
    c(ia.size() == 25 && vertex_sets(ia) == table::facets_ia(), "NiTi facets differ");
    c(bd.size() == 7 && vertex_sets(bd) == table::facets_boundary(), "eps = delta facets differ");
    c(ib.size() == 33 && vertex_sets(ib) == table::facets_ib(), "eps > delta facets differ");
    return c.r;
  });

  criterion(5, "vertices and edges: 12 vertices, 66 edges, edge facet counts (eps != delta)", 5, [&] {
    Checker c;
    for (const auto& p : {fixture::niti(), fixture::regime_ib()}) {
      auto v = build_variants(p);
      auto f = enumerate_facets(v);
      for (int i = 1; i <= 12; ++i) c(smallest_face({i}, f).is_vertex, "vertex " + std::to_string(i));
      for (int i = 1; i <= 12; ++i)
        for (int j = i + 1; j <= 12; ++j)
          c(smallest_face({i, j}, f).is_edge, "edge " + std::to_string(i) + "," + std::to_string(j));
      for (const auto& [pair, n] : edge_facet_counts(f)) c(n >= 4, "an edge in fewer than 4 facets");
      std::set<FacetGroup> groups;
      for (const auto& x : f) groups.insert(x.group);
      for (const auto& pr : incompatible_pairs(v)) {
        auto per = edge_group_counts(pr[0], pr[1], f);
        for (auto g : groups) c(per[g] == 1, "incompatible edge not in exactly one facet of a group");
      }
    }
    return c.r;
  });

  criterion(6, "T3 table: lambda and (alpha - beta) delta + eps^2 - delta^2 for NiTi, CuZr, TiNiCu within 5e-5", 2, [&] {
    Checker c;
    for (const auto& m : table::kMaterials) {
      auto p = LatticeParams::parse(m.params);
      auto v = build_variants(p);
      for (const auto& t : table::kTriples) {
        auto rec = solve_t3(v, t);
        for (const auto& l : rec.lambdas) {
          double x = l.approx();
          c(std::abs(x - m.lambda) <= kLambdaTol || std::abs(1 - x - m.lambda) <= kLambdaTol,
            std::string(m.name) + " lambda " + std::to_string(x));
        }
      }
      double qv = std::round(classify(p).degeneracy.to_double() * 1e4) / 1e4;
      c(std::abs(qv - m.degeneracy) <= kDegeneracyTol, std::string(m.name) + " degeneracy " + std::to_string(qv));
    }
    return c.r;
  });

  criterion(7, "level-1 T3s: 8 triples in one S4 orbit, symmetric, distinct compatible nodes, incompatible barycentre", 5, [&] {
    Checker c;
    for (const auto& p : fixture::materials()) {
      auto v = build_variants(p);
      auto triples = enumerate_incompatible_triples(v);
      c(triples == table::kTriples, "triple list differs");
      c(orbit({1, 6, 12}, rotation_group()).size() == 8, "not a single orbit of 8");
      std::vector<AlgebraicScalar> known;
      for (const auto& t : triples) {
        auto rec = solve_t3(v, t, known);
        known.insert(known.end(), rec.lambdas.begin(), rec.lambdas.end());
        auto n = t3_nodes_checks(rec);
        c(rec.symmetric && n.nodes_distinct && n.nodes_pairwise_compatible && n.nodes_compatible_with_vertices,
          "node checks fail");
        c(n.barycentre_incompatible == std::array<bool, 3>{true, true, true}, "barycentre compatible with a vertex");
      }
    }
    return c.r;
  });

  criterion(8, "dual pairs: three determinant identities and a 4-dimensional six-node hull (NiTi)", 5, [&] {
    Checker c;
    auto v = build_variants(fixture::niti());
    std::string fallback;
    for (const auto& t : table::kTriples) {
      auto d = dual_pair_identities(v, t);
      c(d.identities.size() == 3 && d.identities_cyclic, "identities are not three cyclic orderings");
      c(d.nodes_pairwise_compatible, "nodes not pairwise compatible");
      c(d.hull_dim_exact == 4, "exact hull dimension is not 4");
      if (d.interval_lower_bound != 4) fallback = " (interval bound below 4)";
    }
    c.r.detail += "exact rank in the shared field; interval lower bound 4" + fallback;
    return c.r;
  });

  criterion(9, "level-2 T3s: determinant chain identity, 24 records, (1,0,0) rejected", 5, [&] {
    Checker c;
    auto v = build_variants(fixture::niti());
    auto all = enumerate_level2(v);
    c(all.size() == 24, std::to_string(all.size()) + " records");
    for (const auto& l : all) c(l.chain_identical && l.det_sign != 0, "chain not identical");
    try {
      (void)level2_t3(v, {3, 8, 11}, 1, {AlgebraicScalar(1), AlgebraicScalar(0), AlgebraicScalar(0)});
      c(false, "(1,0,0) accepted");
    } catch (const Error& e) {
      c(e.code() == ErrorCode::DegenerateT3, "(1,0,0) raised " + std::string(to_string(e.code())));
    }
    return c.r;
  });

  criterion(10, "5D witness: 32 samples on NiTi all T3, six affinely independent points", 10, [&] {
    Checker c;
    auto w = five_dim_witness(build_variants(fixture::niti()), {3, 8, 11}, 32);
    c(w.samples == 32 && w.t3_passed == 32, std::to_string(w.t3_passed) + " of " + std::to_string(w.samples));
    c(w.dimension == 5 && w.independent_points.size() == 6, "dimension " + std::to_string(w.dimension));
    if (c.r.ok) c.r.detail = w.certificate;
    return c.r;
  });

  criterion(11, "property suites: plane examples, 1000 random planes vs Sturm, 100 adjugates, facet S4-invariance", 10, [&] {
    Checker c;
    using S = SymStrain<Rational>;
    c(classify_plane(S{1, 1, -2, 0, 0, 0}, S{0, 0, 0, 0, 0, 1}).form == CanonicalForm::XSumOfSquares, "x(x^2+y^2)");
    c(classify_plane(S{0, 0, 0, 1, 1, 1}, S{1, -1, 0, 0, 0, 0}).form == CanonicalForm::XCubed, "x^3");
    c(classify_plane(S{1, -1, 0, 0, 0, 0}, S{0, 0, 0, 0, 0, 1}).form == CanonicalForm::XYSquared, "xy^2");
    c(classify_plane(S{1, 0, -1, 0, 0, 0}, S{0, 1, -1, 0, 0, 0}).form == CanonicalForm::XYXPlusY, "xy(x+y)");

    oracle::RandomRationals rng(2024);
    int planes = 0;
    while (planes < 1000) {
      long span = planes % 3 == 0 ? 1 : 6;
      S e1, e2;
      for (auto* e : {&e1, &e2}) {
        for (auto& x : e->v) x = Rational(rng.range(-span, span));
        e->v[2] = -e->v[0] - e->v[1];
      }
      if (rank(Matrix<Rational>{{e1.v.begin(), e1.v.end()}, {e2.v.begin(), e2.v.end()}}) < 2) continue;
      ++planes;
      auto k = classify_plane(e1, e2);
      // cubic rebuilt from four evaluations of the determinant
      auto det_at = [&](long x, long y) { return (Rational(x) * e1 + Rational(y) * e2).det(); };
      Rational c0 = det_at(1, 0), c3 = det_at(0, 1);
      Rational p = det_at(1, 1) - c0 - c3, m = det_at(1, -1) - c0 + c3;  // c1 + c2, c2 - c1
      // t = x / y, constant term first: c3 + c2 t + c1 t^2 + c0 t^3
      oracle::Coeffs g{c3.raw(), ((p + m) / Rational(2)).raw(), ((p - m) / Rational(2)).raw(), c0.raw()};
      oracle::trim(g);
      int roots;
      if (g.empty()) {
        roots = -1;  // identically zero
      } else {
        mpq_class bound = 1;
        for (const auto& x : g) bound += abs(x) / abs(g.back());
        roots = (c0.is_zero() ? 1 : 0) + (g.size() > 1 ? oracle::sturm_closed(g, -bound, bound) : 0);
      }
      int got = k.kind == PlaneKind::Plane ? -1 : static_cast<int>(k.kind) + 1;
      c(got == roots, "plane " + std::to_string(planes) + ": " + std::to_string(got) + " vs " + std::to_string(roots));
    }

    for (int n = 0; n < 100; ++n) {
      S e;
      for (auto& x : e.v) x = rng.rational();
      auto a = full(e), b = full(e.cof());
      Rational d = oracle::det3_cofactor(a);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Rational sum(0);
          for (int k = 0; k < 3; ++k) sum += a[i][k] * b[k][j];
          c(sum == (i == j ? d : Rational(0)), "adjugate identity");
        }
    }

    for (const auto& p : {fixture::niti(), fixture::boundary(), fixture::regime_ib()})
      c(s4_invariant(enumerate_facets(build_variants(p))), "facet list not S4-invariant");
    return c.r;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
