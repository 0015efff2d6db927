#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/polytope.hpp"
#include "martensite/symmetry.hpp"
#include "martensite/t3.hpp"
#include "published_tables.hpp"

using namespace martensite;

namespace {

using table::Golden;

Golden golden_ia() { return table::facets_ia(); }
Golden golden_boundary() { return table::facets_boundary(); }
Golden golden_ib() { return table::facets_ib(); }

Golden vertex_sets(const std::vector<Facet>& f) {
  Golden g;
  for (const auto& x : f) g.insert(x.vertices);
  return g;
}

std::map<FacetGroup, int> group_sizes(const std::vector<Facet>& f) {
  std::map<FacetGroup, int> m;
  for (const auto& x : f) ++m[x.group];
  return m;
}

void check_soundness(const VariantSet& v, const std::vector<Facet>& facets) {
  for (const auto& f : facets) {
    CHECK(f.normal.trace().is_zero());
    CHECK(affine_dim(v.subset(f.vertices)) == 4);
    for (int j = 1; j <= 12; ++j) {
      bool on = std::binary_search(f.vertices.begin(), f.vertices.end(), j);
      Rational d = inner(f.normal, v[j]) - f.offset;
      if (on) CHECK(d.is_zero());
      else CHECK(d.sign() < 0);
    }
  }
}

void check_s4_invariance(const std::vector<Facet>& facets) {
  auto sets = vertex_sets(facets);
  for (const auto& g : rotation_group().elements)
    for (const auto& s : sets) CHECK(sets.count(g.apply_set(s)));
  // each orbit carries one label, and each label one orbit
  std::map<FacetGroup, std::set<int>> orbits;
  for (const auto& f : facets) orbits[f.group].insert(f.orbit);
  for (const auto& [g, o] : orbits) CHECK(o.size() == 1);
}

}  // namespace

TEST_CASE("affine dimension") {
  auto v = build_variants(fixture::niti());
  CHECK(affine_dim(v.subset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})) == 5);
  CHECK(affine_dim(v.subset({1, 2, 5, 6})) == 3);
  auto b = build_variants(fixture::boundary());
  CHECK(affine_dim(b.subset({1, 5, 6})) == 2);
  CHECK(affine_dim(v.subset({1, 5, 6})) == 2);
  auto flat = build_variants(LatticeParams::parse("0.02,0.02,0.05,0.04"));
  CHECK(affine_dim(flat.subset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})) == 3);
}

TEST_CASE("facets in regime Ia") {
  for (const auto& p : fixture::materials()) {
    auto v = build_variants(p);
    auto e = enumerate_facets_detailed(v);
    CHECK(e.facets.size() == 25);
    CHECK(vertex_sets(e.facets) == golden_ia());
    auto sizes = group_sizes(e.facets);
    CHECK(sizes[FacetGroup::FiveVertex] == 12);
    CHECK(sizes[FacetGroup::T3Pair] == 4);
    CHECK(sizes[FacetGroup::CompatibleTriplePair] == 6);
    CHECK(sizes[FacetGroup::EightVertex] == 3);
    check_soundness(v, e.facets);
    check_s4_invariance(e.facets);
  }
}

TEST_CASE("facets on the boundary eps = delta") {
  auto v = build_variants(fixture::boundary());
  auto f = enumerate_facets(v);
  CHECK(f.size() == 7);
  CHECK(vertex_sets(f) == golden_boundary());
  auto sizes = group_sizes(f);
  CHECK(sizes[FacetGroup::NineVertex] == 4);
  CHECK(sizes[FacetGroup::EightVertex] == 3);
  check_soundness(v, f);
  check_s4_invariance(f);
}

TEST_CASE("facets in regime Ib") {
  auto v = build_variants(fixture::regime_ib());
  auto f = enumerate_facets(v);
  CHECK(f.size() == 33);
  CHECK(vertex_sets(f) == golden_ib());
  auto sizes = group_sizes(f);
  CHECK(sizes[FacetGroup::FiveVertex] == 12);
  CHECK(sizes[FacetGroup::FiveVertexB] == 12);
  CHECK(sizes[FacetGroup::CompatibleTriplePair] == 6);
  CHECK(sizes[FacetGroup::EightVertex] == 3);
  check_soundness(v, f);
  check_s4_invariance(f);
}

TEST_CASE("the first five-vertex facet exists only in regime Ia") {
  IndexSet s = {1, 2, 3, 7, 10};
  CHECK(vertex_sets(enumerate_facets(build_variants(fixture::niti()))).count(s) == 1);
  CHECK(vertex_sets(enumerate_facets(build_variants(fixture::boundary()))).count(s) == 0);
  CHECK(vertex_sets(enumerate_facets(build_variants(fixture::regime_ib()))).count(s) == 0);
}

TEST_CASE("merge completeness") {
  for (const auto& p : {fixture::niti(), fixture::boundary(), fixture::regime_ib()}) {
    auto v = build_variants(p);
    auto e = enumerate_facets_detailed(v);
    CHECK(e.g1.size() <= 792);
    for (const auto& s : e.g2) {
      int containing = 0;
      for (const auto& f : e.facets)
        if (std::includes(f.vertices.begin(), f.vertices.end(), s.begin(), s.end())) ++containing;
      CHECK(containing == 1);
    }
    // every facet is the union of the five-subsets that generated it
    for (const auto& f : e.facets) {
      std::set<int> u;
      for (const auto& s : e.g2)
        if (std::includes(f.vertices.begin(), f.vertices.end(), s.begin(), s.end())) u.insert(s.begin(), s.end());
      CHECK(IndexSet(u.begin(), u.end()) == f.vertices);
    }
  }
}

TEST_CASE("inversion invariance of the designated facets") {
  for (const auto& p : {fixture::niti(), fixture::boundary(), fixture::regime_ib()}) {
    for (const auto& f : enumerate_facets(build_variants(p)))
      if (f.group == FacetGroup::T3Pair || f.group == FacetGroup::EightVertex)
        CHECK(inversion().apply_set(f.vertices) == f.vertices);
  }
  // the nine-vertex facets are not fixed: r0 sends each outside the facet list
  auto b = vertex_sets(enumerate_facets(build_variants(fixture::boundary())));
  for (const auto& s : golden_boundary())
    if (s.size() == 9) CHECK(b.count(inversion().apply_set(s)) == 0);
  Golden ia_five, ib_five;
  for (const auto& f : enumerate_facets(build_variants(fixture::niti())))
    if (f.group == FacetGroup::FiveVertex) ia_five.insert(inversion().apply_set(f.vertices));
  for (const auto& f : enumerate_facets(build_variants(fixture::regime_ib())))
    if (f.group == FacetGroup::FiveVertex) ib_five.insert(f.vertices);
  CHECK(ia_five == ib_five);
}

TEST_CASE("vertices and edges of the polytope") {
  auto v = build_variants(fixture::niti());
  auto f = enumerate_facets(v);
  for (int i = 1; i <= 12; ++i) CHECK(smallest_face({i}, f).is_vertex);
  CHECK(smallest_face({1, 6}, f).is_edge);
  CHECK(polytope_edges(f).size() == 66);
  CHECK(polytope_edges(enumerate_facets(build_variants(fixture::regime_ib()))).size() == 66);
  // {1,2,3} lies in the simplex facet {1,2,3,7,10} in Ia; at eps = delta it is cut
  // out by two nine-vertex facets and an eight-vertex one
  CHECK(smallest_face({1, 2, 3}, f).smallest_face == IndexSet{1, 2, 3});
  auto b = enumerate_facets(build_variants(fixture::boundary()));
  CHECK(smallest_face({1, 2, 3}, b).smallest_face == IndexSet{1, 2, 3});
  // at eps = delta e1 + e6 = e4 + e5, so [1,6] and [4,5] are diagonals of a parallelogram
  auto bv = build_variants(fixture::boundary());
  CHECK(bv[1] + bv[6] == bv[4] + bv[5]);
  CHECK(smallest_face({1, 6}, b).smallest_face == IndexSet{1, 4, 5, 6});
  CHECK(polytope_edges(b).size() == 30);
}

TEST_CASE("edge facet counts") {
  for (const auto& p : {fixture::niti(), fixture::regime_ib()}) {
    auto v = build_variants(p);
    auto f = enumerate_facets(v);
    auto counts = edge_facet_counts(f);
    CHECK(counts.size() == 66);
    for (const auto& [pair, c] : counts) CHECK(c >= 4);
    for (const auto& pair : incompatible_pairs(v)) {
      auto g = edge_group_counts(pair[0], pair[1], f);
      std::set<FacetGroup> present;
      for (const auto& x : f) present.insert(x.group);
      for (auto grp : present) CHECK(g[grp] == 1);
    }
  }
}

TEST_CASE("lamination equals convex hull") {
  auto v = build_variants(fixture::niti());
  CHECK_FALSE(lamination_equals_convex(v, enumerate_facets(v)));
  auto degenerate = build_variants(LatticeParams::parse("3/4,0,1,1/2"));
  CHECK(lamination_equals_convex(degenerate, std::vector<Facet>{}));
  CHECK(lamination_equals_convex(v, IndexSet{1, 2}));
  CHECK_FALSE(lamination_equals_convex(v, IndexSet{1, 6}));
  CHECK(lamination_equals_convex(v, IndexSet{1, 2, 3}));
}

TEST_CASE("facet preconditions") {
  auto flat = build_variants(LatticeParams::parse("0.02,0.02,0.05,0.04"));
  try {
    (void)enumerate_facets(flat);
    FAIL("expected FlatPolytope");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FlatPolytope);
  }
  try {
    (void)enumerate_facets(build_variants(LatticeParams::parse("3/4,0,1,1/2")));
    FAIL("expected DegenerateParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateParams);
  }
}

TEST_CASE("each T3 with its dual lies in a facet when eps <= delta") {
  for (const auto& p : {fixture::niti(), fixture::boundary()}) {
    auto v = build_variants(p);
    auto f = enumerate_facets(v);
    for (const auto& t : enumerate_incompatible_triples(v)) {
      IndexSet u(t.begin(), t.end());
      auto d = inversion().apply(u);
      u.insert(u.end(), d.begin(), d.end());
      std::sort(u.begin(), u.end());
      bool in_facet = false;
      for (const auto& x : f) in_facet |= std::includes(x.vertices.begin(), x.vertices.end(), u.begin(), u.end());
      CHECK(in_facet);
    }
  }
  // in regime Ia the union is itself a facet
  auto f = enumerate_facets(build_variants(fixture::niti()));
  CHECK(vertex_sets(f).count({1, 2, 7, 8, 9, 10}) == 1);
}
