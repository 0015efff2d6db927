#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "martensite/polynomial.hpp"
#include "martensite/rational.hpp"
#include "martensite/sym_strain.hpp"

namespace martensite {

inline constexpr int kVariantCount = 12;

enum class Regime { Ia, Boundary, Ib };
std::string_view to_string(Regime r);

/// Exact lattice parameters (alpha, beta, delta, epsilon).
struct LatticeParams {
  Rational alpha, beta, delta, epsilon;

  /// "a,b,d,e" with each entry a decimal or p/q literal.
  static LatticeParams parse(std::string_view text);
  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

struct ParamFlags {
  Regime regime = Regime::Ia;
  bool all_compatible = false;  // (alpha - beta) delta + eps^2 - delta^2 = 0
  bool flat_polytope = false;   // alpha = beta
  Rational degeneracy;          // (alpha - beta) delta + eps^2 - delta^2
};

/// Rejects epsilon <= 0 or delta <= 0 with InvalidParams.
ParamFlags classify(const LatticeParams& p);

/// The twelve monoclinic-I strains over any scalar ring, in variant order.
template <class T>
std::array<SymStrain<T>, kVariantCount> monoclinic_strains(const T& a, const T& b, const T& d, const T& e) {
  const T z = T(0);
  const T md = z - d, me = z - e;
  return {{
      {a, a, b, d, e, e},     {a, a, b, d, me, me},   {a, a, b, md, me, e},   {a, a, b, md, e, me},
      {a, b, a, e, d, e},     {a, b, a, me, d, me},   {a, b, a, me, md, e},   {a, b, a, e, md, me},
      {b, a, a, e, e, d},     {b, a, a, me, me, d},   {b, a, a, me, e, md},   {b, a, a, e, me, md},
  }};
}

struct VariantSet {
  LatticeParams params;
  ParamFlags flags;
  std::array<SymStrain<Rational>, kVariantCount> strains;

  /// One-based variant access.
  const SymStrain<Rational>& operator[](int i) const { return strains.at(static_cast<size_t>(i - 1)); }
  std::vector<SymStrain<Rational>> subset(const std::vector<int>& indices) const;
};

VariantSet build_variants(const LatticeParams& params);

/// The strains with alpha, beta, delta, epsilon as polynomial indeterminates.
struct SymbolicVariants {
  VarId alpha_id, beta_id, delta_id, epsilon_id;
  Polynomial alpha, beta, delta, epsilon;
  std::array<SymStrain<Polynomial>, kVariantCount> strains;

  const SymStrain<Polynomial>& operator[](int i) const { return strains.at(static_cast<size_t>(i - 1)); }
  std::map<VarId, Rational> substitution(const LatticeParams& p) const;
};

const SymbolicVariants& symbolic_variants();

/// (alpha - beta) delta + eps^2 - delta^2 over the symbolic parameters.
Polynomial degeneracy_polynomial();
/// 4 eps ((alpha - beta) delta + eps^2 - delta^2).
Polynomial incompatibility_determinant();

/// Partition of the other eleven indices by det(e(j) - e(i)). `plus` collects
/// j with det = +4 eps Q, `minus` those with -4 eps Q (Q the degeneracy quantity).
struct CompatRow {
  std::vector<int> zero, plus, minus;
  friend bool operator==(const CompatRow&, const CompatRow&) = default;
};

struct CompatibilityTable {
  std::array<CompatRow, kVariantCount> rows;
  bool degenerate = false;  // every pair compatible
  int plus_sign = 0;        // numeric sign of 4 eps Q (0 when degenerate or symbolic)
};

/// Exact table for numeric parameters.
CompatibilityTable compatibility_table(const VariantSet& v);

/// Table derived from polynomial identities; `all_classified` reports that every
/// determinant was 0 or +-4 eps Q identically.
struct SymbolicCompatibility {
  CompatibilityTable table;
  bool all_classified = true;
};
SymbolicCompatibility symbolic_compatibility_table();

enum class DistanceClass {
  SixteenEps2,          // 16 eps^2
  EightDeltaEps,        // 8 (delta^2 + eps^2)
  ABDeltaMinusEps,      // 2 (alpha - beta)^2 + 4 (delta - eps)^2
  ABDeltaPlusEps,       // 2 (alpha - beta)^2 + 4 (delta + eps)^2
  Incompatible,         // 2 (alpha - beta)^2 + 4 delta^2 + 12 eps^2
  Unclassified,
};
std::string_view to_string(DistanceClass c);
Polynomial distance_class_polynomial(DistanceClass c);

struct DistanceEntry {
  int i = 0, j = 0;
  DistanceClass cls = DistanceClass::Unclassified;
  Polynomial symbolic;
  Rational value;  // numeric squared distance (zero for the symbolic table)
};

/// All 66 unordered pairs, i < j, classified through polynomial identities.
std::vector<DistanceEntry> symbolic_distance_table();
std::vector<DistanceEntry> distance_table(const VariantSet& v);

/// Linear functional on Sym(3) acting on (e11, e22, e33, e12, e13, e23).
struct LinearFunctional {
  std::string name;
  std::array<Rational, 6> coeffs;

  template <class T>
  T operator()(const SymStrain<T>& e) const {
    T s(0);
    for (size_t k = 0; k < 6; ++k)
      if (!coeffs[k].is_zero()) s += T(coeffs[k]) * e.v[k];
    return s;
  }
};

/// H0, H1, H2, H3 with Hi = H0 composed with the i-th quarter turn.
std::array<LinearFunctional, 4> rotation_functionals();
/// H_ij e = e_ij for 1 <= i <= j <= 3.
LinearFunctional entry_functional(int i, int j);
/// Looks up "H0".."H3" or "H11".."H33".
LinearFunctional functional_by_name(std::string_view name);

struct Extremisers {
  std::vector<int> minimisers, maximisers;
  Rational min_value, max_value;
};
Extremisers functional_extremisers(const VariantSet& v, const LinearFunctional& h);

}  // namespace martensite
