#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "martensite/sym_strain.hpp"
#include "martensite/variants.hpp"

namespace martensite {

/// Bijection of the one-based index set {1..12}.
class Permutation {
 public:
  Permutation();
  /// Throws InvalidParams unless `images` is a bijection of 1..12.
  explicit Permutation(const std::array<int, kVariantCount>& images);

  int operator()(int i) const { return img_.at(static_cast<size_t>(i - 1)); }
  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  Permutation inverse() const;
  bool is_identity() const;
  const std::array<int, kVariantCount>& images() const { return img_; }

  /// Elementwise image, order kept.
  std::vector<int> apply(const std::vector<int>& tuple) const;
  /// Elementwise image, sorted.
  std::vector<int> apply_set(const std::vector<int>& set) const;
  /// Cycle notation, "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, kVariantCount> img_;
};

/// r0 (swaps 2k-1 and 2k) and r1, r2, r3 as index permutations.
const Permutation& inversion();
const Permutation& rotation_generator(int axis);

/// r_i e = R_i e R_i^T.
template <class T>
SymStrain<T> rotation_action(int axis, const SymStrain<T>& e) {
  return conjugate(quarter_turn(axis), e);
}

/// Derives the index permutation induced by the quarter turn about `axis` by
/// matching rotated symbolic strains against the variant table.
Permutation permutation_from_rotation(int axis);

struct PermGroup {
  std::vector<Permutation> elements;  // sorted
  std::vector<std::string> generator_labels;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

/// Closure of the generators under composition, breadth first.
PermGroup generate_group(const std::vector<Permutation>& generators, std::vector<std::string> labels = {});
const PermGroup& rotation_group();  // S4 from r1, r2, r3
const PermGroup& full_group();      // S4 x C2 from r0, r1, r2, r3

using IndexTuple = std::vector<int>;
using TupleFamily = std::vector<IndexTuple>;

/// {p x : p in g} with each image sorted as a set.
std::set<IndexTuple> orbit(const IndexTuple& x, const PermGroup& g);

struct SymmetryCheck {
  bool holds = true;
  bool symbolic = false;                      // decided by polynomial identities
  std::optional<std::pair<int, int>> witness;  // first offending pair
  std::string reason;
};

/// Distance and |det| preservation over all pairs of E, exact.
SymmetryCheck is_symmetry(const Permutation& p, const VariantSet& v);
/// Same check with polynomial identities in alpha, beta, delta, epsilon.
SymmetryCheck is_symmetry_symbolic(const Permutation& p);
/// Preservation required only within the tuples of `family`; throws
/// FamilyNotClosed if p does not map the family onto itself.
SymmetryCheck is_tuple_symmetry(const Permutation& p, const TupleFamily& family, const VariantSet& v);

TupleFamily all_pairs();
TupleFamily compatible_pairs(const VariantSet& v);
TupleFamily incompatible_pairs(const VariantSet& v);
TupleFamily incompatible_triples(const VariantSet& v);

/// Negating epsilon in the symbolic strains permutes them by r0.
bool inversion_matches_epsilon_negation();

/// Whether some linear L on Sym(3) satisfies L e(i) = e(r0 i) for all i,
/// decided per output component by comparing rank(A) with rank([A | b]).
struct LinearityReport {
  std::size_t rank_coefficients = 0;
  std::vector<std::size_t> rank_augmented;  // one per output entry
  bool solvable = true;
};
LinearityReport inversion_linearity(const VariantSet& v);

}  // namespace martensite
