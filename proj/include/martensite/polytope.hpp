#pragma once

#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "martensite/rational.hpp"
#include "martensite/sym_strain.hpp"
#include "martensite/variants.hpp"

namespace martensite {

using IndexSet = std::vector<int>;  // sorted, one-based

enum class FacetGroup { FiveVertex, T3Pair, CompatibleTriplePair, EightVertex, NineVertex, FiveVertexB };
std::string_view to_string(FacetGroup g);

struct Facet {
  IndexSet vertices;
  /// Trace-free normal with <normal, e> = offset on the facet and < offset off it,
  /// scaled to a primitive integer vector; <,> weighs off-diagonal entries by 2.
  SymStrain<Rational> normal;
  Rational offset;
  FacetGroup group = FacetGroup::FiveVertex;
  int orbit = 0;  // index of its S4 orbit in the facet list
};

struct FacetEnumeration {
  std::vector<IndexSet> g1;          // five-subsets spanning a 4-dimensional affine set
  std::vector<IndexSet> g2;          // those whose hyperplane leaves E on one side
  std::size_t g2_strict = 0;         // members with no other vertex on the hyperplane
  std::vector<Facet> facets;         // merged, sorted by vertex set
};

/// Three-stage facet enumeration. Throws FlatPolytope unless E spans five
/// dimensions and DegenerateParams when every pair is compatible.
FacetEnumeration enumerate_facets_detailed(const VariantSet& v);
std::vector<Facet> enumerate_facets(const VariantSet& v);

struct FaceQueryResult {
  IndexSet input;
  IndexSet smallest_face;  // intersection of the facets containing the input
  bool is_vertex = false;
  bool is_edge = false;
};
FaceQueryResult smallest_face(IndexSet indices, const std::vector<Facet>& facets);

/// Number of facets containing each of the 66 pairs.
std::map<std::pair<int, int>, int> edge_facet_counts(const std::vector<Facet>& facets);
/// Facets containing the pair, counted per group.
std::map<FacetGroup, int> edge_group_counts(int i, int j, const std::vector<Facet>& facets);

/// Edges of C(E): pairs that are their own smallest face.
std::vector<std::pair<int, int>> polytope_edges(const std::vector<Facet>& facets);

/// Whether every edge of the convex hull of E joins a compatible pair.
bool lamination_equals_convex(const VariantSet& v, const std::vector<Facet>& facets);
/// Same question for a subset of E. Settled when every pair is compatible or the
/// subset is affinely independent (every pair is then an edge); throws
/// Unsupported otherwise.
bool lamination_equals_convex(const VariantSet& v, const IndexSet& subset);

}  // namespace martensite
