#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "martensite/algebraic.hpp"
#include "martensite/polynomial.hpp"
#include "martensite/sym_strain.hpp"
#include "martensite/symmetry.hpp"
#include "martensite/variants.hpp"

namespace martensite {

using Triple = std::array<int, 3>;
using AlgStrain = SymStrain<AlgebraicScalar>;

/// Signs of det(e1 - e2), det(e2 - e3), det(e3 - e1).
struct T3Signs {
  std::array<int, 3> signs{};
  bool is_t3 = false;
  int common_sign = 0;  // 0 unless is_t3
};

/// Exact sign test; throws TraceMismatch for unequal traces.
template <class T>
T3Signs t3_signs(const SymStrain<T>& e1, const SymStrain<T>& e2, const SymStrain<T>& e3);
extern template T3Signs t3_signs(const SymStrain<Rational>&, const SymStrain<Rational>&, const SymStrain<Rational>&);
extern template T3Signs t3_signs(const AlgStrain&, const AlgStrain&, const AlgStrain&);

inline bool is_t3(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2, const SymStrain<Rational>& e3) {
  return t3_signs(e1, e2, e3).is_t3;
}

/// The pairwise incompatible triples of E in ascending order, each checked to be
/// a T3. Throws DegenerateParams when every pair is compatible.
std::vector<Triple> enumerate_incompatible_triples(const VariantSet& v);

/// lambda -> det(lambda a + (1 - lambda) b - c), constant term first.
UPoly scaffold_cubic(const SymStrain<Rational>& a, const SymStrain<Rational>& b, const SymStrain<Rational>& c);

struct T3Record {
  std::array<SymStrain<Rational>, 3> vertices;
  std::optional<Triple> indices;  // variant indices, ascending
  int det_sign = 0;
  std::array<UPoly, 3> cubics;                // for lambda12, lambda23, lambda31
  std::array<AlgebraicScalar, 3> lambdas;     // lambda12, lambda23, lambda31
  std::array<AlgStrain, 3> scaffold;          // e11 in (e2,e3), e22 in (e3,e1), e33 in (e1,e2)
  bool shared_field = true;                   // all lambdas live in one field
  /// Nodes e12, e23, e31 and their barycentric coordinates in the vertex order;
  /// absent when the lambdas live in different fields.
  std::optional<std::array<AlgStrain, 3>> nodes;
  std::optional<std::array<std::array<AlgebraicScalar, 3>, 3>> node_barycentric;
  bool symmetric = false;
  std::string orientation = "ascending";
};

/// Scaffold parameters, scaffold points and nodes. Each lambda is the unique root
/// in (0,1) of its cubic; a second root there raises MultipleRootsInUnitInterval.
/// Irrational lambdas are expressed through `known` (or one minus a known value)
/// when possible, so related T3s share a field. Throws NotT3.
T3Record solve_t3(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2, const SymStrain<Rational>& e3,
                  const std::vector<AlgebraicScalar>& known = {});
T3Record solve_t3(const VariantSet& v, const Triple& t, const std::vector<AlgebraicScalar>& known = {});

struct NodeChecks {
  bool nodes_available = false;
  bool lambdas_in_unit_interval = false;
  bool scaffold_compatible = false;       // e_ii compatible with e_i
  bool nodes_pairwise_compatible = false;
  bool nodes_compatible_with_vertices = false;  // e_ij with e_i and e_j
  bool nodes_distinct = false;
  std::array<bool, 3> barycentre_incompatible{};

  bool all() const;
};
NodeChecks t3_nodes_checks(const T3Record& t);

/// Arms [e_i, far node on the cevian through e_i] and the node triangle. In the
/// left case the arms end at e12, e23, e31; in the right case at e31, e12, e23.
struct T3Skeleton {
  bool left_case = true;
  std::array<int, 3> arm_node{};  // node index (0: e12, 1: e23, 2: e31) per vertex
  std::array<AlgStrain, 3> arm_ends;
  std::array<AlgStrain, 3> triangle;
  bool arms_compatible = false;
  bool triangle_compatible = false;
};
/// Throws Unsupported when the record carries no nodes.
T3Skeleton t3_skeleton(const T3Record& t);

/// The T3 with vertices mu e0 + (1 - mu) e_i. Throws IncompatibleCenter unless e0
/// is compatible with every vertex, DegenerateLambda at mu = 1, InvalidParams
/// outside [0, 1].
T3Record continuum_t3(const T3Record& t, const SymStrain<Rational>& e0, const Rational& mu);

/// The triples adjacent to `t` on the cube of T3s (images under quarter turns),
/// in ascending order.
std::vector<Triple> cube_neighbours(const Triple& t);
/// Order-3 rotation fixing `t` and its dual; of the two, the one sending the
/// first vertex of the first neighbour to the smaller index.
Permutation diagonal_rotation(const Triple& t);

struct DualPairReport {
  Triple tau, dual;
  /// Orderings (f1, f2, f3) of the dual with det(x e1 + y e2 + z e3 - (x f1 + y f2 + z f3)) = 0
  /// identically in x, y, z and the lattice parameters.
  std::vector<Triple> identities;
  bool identities_cyclic = false;     // exactly the three cyclic shifts of one ordering
  bool nodes_available = false;
  bool nodes_pairwise_compatible = false;
  /// Affine dimension of the six nodes by exact rank over the shared field.
  std::optional<int> hull_dim_exact;
  /// Independent lower bound: a square minor of the interval-enclosed difference
  /// matrix whose determinant enclosure excludes zero.
  int interval_lower_bound = 0;
  std::string interval_certificate;
};
DualPairReport dual_pair_identities(const VariantSet& v, const Triple& tau);

struct Level2T3 {
  Triple base;
  Triple neighbour;
  int neighbour_choice = 1;
  Permutation rotation;
  std::array<Triple, 3> vertex_indices;  // neighbour, r(neighbour), r^2(neighbour), order kept
  std::array<AlgebraicScalar, 3> barycentric;
  std::array<AlgStrain, 3> vertices;
  std::array<Polynomial, 3> det_chain;   // in x, y, z and the lattice parameters
  bool chain_identical = false;
  AlgebraicScalar common_det;
  int det_sign = 0;
  std::array<bool, 3> barycentre_incompatible{};
  std::optional<T3Record> solved;        // when the vertices are rational
};

/// n1 = x e(a) + y e(b) + z e(c) over the chosen neighbour (a, b, c) of `base`, and
/// its images under the diagonal rotation. Throws InvalidParams off the simplex and
/// DegenerateT3 when the common determinant vanishes.
Level2T3 level2_t3(const VariantSet& v, const Triple& base, int neighbour_choice,
                   const std::array<AlgebraicScalar, 3>& barycentric);

/// The 24 level-2 T3s: each base triple with the three nodes of its first neighbour.
std::vector<Level2T3> enumerate_level2(const VariantSet& v);

struct FiveDimWitness {
  Triple base, neighbour, dual;
  std::size_t samples = 0;
  std::size_t t3_passed = 0;
  std::vector<std::array<Rational, 6>> weights;   // mu1..mu3 on the neighbour, mu'1..mu'3 on its dual
  std::vector<bool> sample_is_t3;
  std::vector<std::size_t> independent_points;    // indices into the sampled point list (3 per sample)
  int dimension = 0;
  std::string certificate;
};

/// Halton points on the 5-simplex, deterministic.
std::vector<std::array<Rational, 6>> simplex_samples(std::size_t n);
/// Samples p1 from the nodes of the first neighbour of `base` and its dual, forms
/// (p1, r p1, r^2 p1) and certifies dimension 5 of the union. Throws
/// InsufficientSamples when fewer than six affinely independent points appear.
FiveDimWitness five_dim_witness(const VariantSet& v, const Triple& base, std::size_t n,
                                const std::vector<std::array<Rational, 6>>& extra = {});

/// Some relabelling sigma gives lambda'_ij = lambda_sigma(i)sigma(j), with
/// lambda_ji = 1 - lambda_ij for reversed pairs.
bool similar(const T3Record& a, const T3Record& b);

}  // namespace martensite
