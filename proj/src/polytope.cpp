#include "martensite/polytope.hpp"

#include <algorithm>
#include <optional>

#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/symmetry.hpp"

namespace martensite {

std::string_view to_string(FacetGroup g) {
  switch (g) {
    case FacetGroup::FiveVertex: return "FiveVertex";
    case FacetGroup::T3Pair: return "T3Pair";
    case FacetGroup::CompatibleTriplePair: return "CompatibleTriplePair";
    case FacetGroup::EightVertex: return "EightVertex";
    case FacetGroup::NineVertex: return "NineVertex";
    case FacetGroup::FiveVertexB: return "FiveVertexB";
  }
  return "?";
}

namespace {

std::vector<SymStrain<Rational>> points(const VariantSet& v, const IndexSet& s) {
  std::vector<SymStrain<Rational>> out;
  for (int i : s) out.push_back(v[i]);
  return out;
}

// Scale to a primitive integer vector.
SymStrain<Rational> primitive(SymStrain<Rational> n) {
  mpz_class l = 1, g = 0;
  for (const auto& x : n.v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  for (auto& x : n.v) {
    x = x * Rational(l, 1);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
  }
  for (auto& x : n.v) x = x / Rational(g, 1);
  return n;
}

// Normal of the hyperplane through the five points inside the
// trace slice, or nothing when they do not span four dimensions.
std::optional<SymStrain<Rational>> hyperplane_normal(const std::vector<SymStrain<Rational>>& p) {
  Matrix<Rational> rows;
  for (size_t k = 1; k < p.size(); ++k) {
    auto d = p[k] - p[0];
    rows.push_back({d.v[0], d.v[1], d.v[2], Rational(2) * d.v[3], Rational(2) * d.v[4], Rational(2) * d.v[5]});
  }
  rows.push_back({1, 1, 1, 0, 0, 0});
  auto ns = nullspace(rows, 6);
  if (ns.size() != 1) return std::nullopt;
  SymStrain<Rational> n;
  for (size_t k = 0; k < 6; ++k) n.v[k] = ns[0][k];
  return n;
}

bool contains_incompatible_triple(const IndexSet& s, const VariantSet& v) {
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      for (size_t c = b + 1; c < s.size(); ++c)
        if (!is_compatible(v[s[a]], v[s[b]]) && !is_compatible(v[s[b]], v[s[c]]) &&
            !is_compatible(v[s[a]], v[s[c]]))
          return true;
  return false;
}

bool contains_inversion_pair(const IndexSet& s) {
  for (int i : s)
    if (i % 2 == 1 && std::binary_search(s.begin(), s.end(), i + 1)) return true;
  return false;
}

FacetGroup label(const IndexSet& s, const VariantSet& v) {
  switch (s.size()) {
    case 8: return FacetGroup::EightVertex;
    case 9: return FacetGroup::NineVertex;
    case 6: return contains_incompatible_triple(s, v) ? FacetGroup::T3Pair : FacetGroup::CompatibleTriplePair;
    case 5: return contains_inversion_pair(s) ? FacetGroup::FiveVertex : FacetGroup::FiveVertexB;
    default: throw Error(ErrorCode::Unsupported, "facet with " + std::to_string(s.size()) + " vertices");
  }
}

bool subset_of(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

FacetEnumeration enumerate_facets_detailed(const VariantSet& v) {
  std::vector<SymStrain<Rational>> all(v.strains.begin(), v.strains.end());
  if (v.flags.flat_polytope || affine_dim(all) != 5)
    throw Error(ErrorCode::FlatPolytope, "the variants do not span a five-dimensional polytope");
  if (v.flags.all_compatible) throw Error(ErrorCode::DegenerateParams, "every pair of variants is compatible");

  FacetEnumeration out;
  std::map<std::array<Rational, 6>, Facet> merged;
  std::vector<bool> pick(kVariantCount, false);
  std::fill(pick.begin(), pick.begin() + 5, true);
  do {
    IndexSet s;
    for (int i = 0; i < kVariantCount; ++i)
      if (pick[static_cast<size_t>(i)]) s.push_back(i + 1);
    auto n = hyperplane_normal(points(v, s));
    if (!n) continue;
    out.g1.push_back(s);

    Rational offset = inner(*n, v[s[0]]);
    int above = 0, below = 0, on = 0;
    for (int j = 1; j <= kVariantCount; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      int c = (inner(*n, v[j]) - offset).sign();
      (c > 0 ? above : c < 0 ? below : on)++;
    }
    if (above > 0 && below > 0) continue;
    out.g2.push_back(s);
    if (on == 0) ++out.g2_strict;

    // outward: every other vertex at or below the offset
    SymStrain<Rational> normal = primitive(above > 0 ? -*n : *n);
    auto& f = merged[normal.v];
    if (f.vertices.empty()) {
      f.normal = normal;
      f.offset = inner(normal, v[s[0]]);
      for (int j = 1; j <= kVariantCount; ++j)
        if (inner(normal, v[j]) == f.offset) f.vertices.push_back(j);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));

  for (auto& [key, f] : merged) out.facets.push_back(f);
  std::sort(out.facets.begin(), out.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });

  // S4 orbits, labelled per orbit
  std::vector<int> orbit_of(out.facets.size(), -1);
  int next = 0;
  for (size_t k = 0; k < out.facets.size(); ++k) {
    if (orbit_of[k] >= 0) continue;
    auto o = orbit(out.facets[k].vertices, rotation_group());
    FacetGroup g = label(out.facets[k].vertices, v);
    for (size_t m = 0; m < out.facets.size(); ++m) {
      if (!o.count(out.facets[m].vertices)) continue;
      if (label(out.facets[m].vertices, v) != g) throw Error(ErrorCode::Unsupported, "orbit with mixed labels");
      orbit_of[m] = next;
      out.facets[m].group = g;
      out.facets[m].orbit = next;
    }
    ++next;
  }
  return out;
}

std::vector<Facet> enumerate_facets(const VariantSet& v) { return enumerate_facets_detailed(v).facets; }

FaceQueryResult smallest_face(IndexSet indices, const std::vector<Facet>& facets) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  FaceQueryResult r;
  r.input = indices;
  for (int i = 1; i <= kVariantCount; ++i) r.smallest_face.push_back(i);
  for (const auto& f : facets) {
    if (!subset_of(indices, f.vertices)) continue;
    IndexSet meet;
    std::set_intersection(r.smallest_face.begin(), r.smallest_face.end(), f.vertices.begin(), f.vertices.end(),
                          std::back_inserter(meet));
    r.smallest_face = meet;
  }
  r.is_vertex = indices.size() == 1 && r.smallest_face == indices;
  r.is_edge = indices.size() == 2 && r.smallest_face == indices;
  return r;
}

std::map<std::pair<int, int>, int> edge_facet_counts(const std::vector<Facet>& facets) {
  std::map<std::pair<int, int>, int> out;
  for (int i = 1; i <= kVariantCount; ++i)
    for (int j = i + 1; j <= kVariantCount; ++j) {
      int c = 0;
      for (const auto& f : facets)
        if (subset_of({i, j}, f.vertices)) ++c;
      out[{i, j}] = c;
    }
  return out;
}

std::map<FacetGroup, int> edge_group_counts(int i, int j, const std::vector<Facet>& facets) {
  std::map<FacetGroup, int> out;
  IndexSet pair = {std::min(i, j), std::max(i, j)};
  for (const auto& f : facets)
    if (subset_of(pair, f.vertices)) ++out[f.group];
  return out;
}

std::vector<std::pair<int, int>> polytope_edges(const std::vector<Facet>& facets) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= kVariantCount; ++i)
    for (int j = i + 1; j <= kVariantCount; ++j)
      if (smallest_face({i, j}, facets).is_edge) out.emplace_back(i, j);
  return out;
}

bool lamination_equals_convex(const VariantSet& v, const std::vector<Facet>& facets) {
  if (v.flags.all_compatible) return true;
  for (auto [i, j] : polytope_edges(facets))
    if (!is_compatible(v[i], v[j])) return false;
  return true;
}

bool lamination_equals_convex(const VariantSet& v, const IndexSet& subset) {
  bool all_compatible = true;
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b) all_compatible &= is_compatible(v[subset[a]], v[subset[b]]);
  if (all_compatible) return true;
  if (affine_dim(points(v, subset)) == static_cast<int>(subset.size()) - 1) return false;
  throw Error(ErrorCode::Unsupported, "edge structure of this subset is not determined");
}

}  // namespace martensite
