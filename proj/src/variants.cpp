#include "martensite/variants.hpp"

#include <algorithm>
#include <sstream>

#include "martensite/error.hpp"

namespace martensite {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Ia: return "Ia";
    case Regime::Boundary: return "boundary";
    case Regime::Ib: return "Ib";
  }
  return "?";
}

LatticeParams LatticeParams::parse(std::string_view text) {
  std::vector<Rational> vals;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty lattice parameter in '" + s + "'");
    vals.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (vals.size() != 4) throw Error(ErrorCode::ParseError, "expected four parameters alpha,beta,delta,epsilon");
  return {vals[0], vals[1], vals[2], vals[3]};
}

ParamFlags classify(const LatticeParams& p) {
  if (p.epsilon.sign() <= 0 || p.delta.sign() <= 0)
    throw Error(ErrorCode::InvalidParams, "epsilon and delta must be positive");
  ParamFlags f;
  f.regime = p.epsilon < p.delta ? Regime::Ia : (p.epsilon == p.delta ? Regime::Boundary : Regime::Ib);
  f.degeneracy = (p.alpha - p.beta) * p.delta + p.epsilon * p.epsilon - p.delta * p.delta;
  f.all_compatible = f.degeneracy.is_zero();
  f.flat_polytope = p.alpha == p.beta;
  return f;
}

std::vector<SymStrain<Rational>> VariantSet::subset(const std::vector<int>& indices) const {
  std::vector<SymStrain<Rational>> out;
  for (int i : indices) out.push_back((*this)[i]);
  return out;
}

VariantSet build_variants(const LatticeParams& params) {
  VariantSet v;
  v.params = params;
  v.flags = classify(params);
  v.strains = monoclinic_strains(params.alpha, params.beta, params.delta, params.epsilon);
  return v;
}

const SymbolicVariants& symbolic_variants() {
  static const SymbolicVariants sv = [] {
    SymbolicVariants s;
    s.alpha_id = intern_variable("alpha");
    s.beta_id = intern_variable("beta");
    s.delta_id = intern_variable("delta");
    s.epsilon_id = intern_variable("epsilon");
    s.alpha = Polynomial::var(s.alpha_id);
    s.beta = Polynomial::var(s.beta_id);
    s.delta = Polynomial::var(s.delta_id);
    s.epsilon = Polynomial::var(s.epsilon_id);
    s.strains = monoclinic_strains(s.alpha, s.beta, s.delta, s.epsilon);
    return s;
  }();
  return sv;
}

std::map<VarId, Rational> SymbolicVariants::substitution(const LatticeParams& p) const {
  return {{alpha_id, p.alpha}, {beta_id, p.beta}, {delta_id, p.delta}, {epsilon_id, p.epsilon}};
}

Polynomial degeneracy_polynomial() {
  const auto& s = symbolic_variants();
  return (s.alpha - s.beta) * s.delta + s.epsilon * s.epsilon - s.delta * s.delta;
}

Polynomial incompatibility_determinant() { return Polynomial(4) * symbolic_variants().epsilon * degeneracy_polynomial(); }

CompatibilityTable compatibility_table(const VariantSet& v) {
  CompatibilityTable t;
  t.degenerate = v.flags.all_compatible;
  t.plus_sign = t.degenerate ? 0 : v.flags.degeneracy.sign();  // epsilon > 0
  for (int i = 1; i <= kVariantCount; ++i) {
    auto& row = t.rows[static_cast<size_t>(i - 1)];
    for (int j = 1; j <= kVariantCount; ++j) {
      if (j == i) continue;
      int s = (v[j] - v[i]).det().sign();
      if (s == 0) row.zero.push_back(j);
      else if (s == t.plus_sign) row.plus.push_back(j);
      else row.minus.push_back(j);
    }
  }
  return t;
}

SymbolicCompatibility symbolic_compatibility_table() {
  const auto& s = symbolic_variants();
  const Polynomial plus = incompatibility_determinant();
  const Polynomial minus = -plus;
  SymbolicCompatibility out;
  for (int i = 1; i <= kVariantCount; ++i) {
    auto& row = out.table.rows[static_cast<size_t>(i - 1)];
    for (int j = 1; j <= kVariantCount; ++j) {
      if (j == i) continue;
      Polynomial d = (s[j] - s[i]).det();
      if (d.is_zero()) row.zero.push_back(j);
      else if (d == plus) row.plus.push_back(j);
      else if (d == minus) row.minus.push_back(j);
      else out.all_classified = false;
    }
  }
  return out;
}

std::string_view to_string(DistanceClass c) {
  switch (c) {
    case DistanceClass::SixteenEps2: return "16 eps^2";
    case DistanceClass::EightDeltaEps: return "8 (delta^2 + eps^2)";
    case DistanceClass::ABDeltaMinusEps: return "2 (alpha - beta)^2 + 4 (delta - eps)^2";
    case DistanceClass::ABDeltaPlusEps: return "2 (alpha - beta)^2 + 4 (delta + eps)^2";
    case DistanceClass::Incompatible: return "2 (alpha - beta)^2 + 4 delta^2 + 12 eps^2";
    case DistanceClass::Unclassified: return "unclassified";
  }
  return "?";
}

Polynomial distance_class_polynomial(DistanceClass c) {
  const auto& s = symbolic_variants();
  const Polynomial ab2 = Polynomial(2) * pow(s.alpha - s.beta, 2);
  switch (c) {
    case DistanceClass::SixteenEps2: return Polynomial(16) * pow(s.epsilon, 2);
    case DistanceClass::EightDeltaEps: return Polynomial(8) * (pow(s.delta, 2) + pow(s.epsilon, 2));
    case DistanceClass::ABDeltaMinusEps: return ab2 + Polynomial(4) * pow(s.delta - s.epsilon, 2);
    case DistanceClass::ABDeltaPlusEps: return ab2 + Polynomial(4) * pow(s.delta + s.epsilon, 2);
    case DistanceClass::Incompatible:
      return ab2 + Polynomial(4) * pow(s.delta, 2) + Polynomial(12) * pow(s.epsilon, 2);
    case DistanceClass::Unclassified: break;
  }
  return {};
}

std::vector<DistanceEntry> symbolic_distance_table() {
  static const std::vector<DistanceEntry> table = [] {
    const auto& s = symbolic_variants();
    const DistanceClass classes[] = {DistanceClass::SixteenEps2, DistanceClass::EightDeltaEps,
                                     DistanceClass::ABDeltaMinusEps, DistanceClass::ABDeltaPlusEps,
                                     DistanceClass::Incompatible};
    std::vector<DistanceEntry> out;
    for (int i = 1; i <= kVariantCount; ++i)
      for (int j = i + 1; j <= kVariantCount; ++j) {
        DistanceEntry d;
        d.i = i;
        d.j = j;
        d.symbolic = norm_sq(SymStrain<Polynomial>(s[i] - s[j]));
        for (auto c : classes)
          if (d.symbolic == distance_class_polynomial(c)) d.cls = c;
        out.push_back(std::move(d));
      }
    return out;
  }();
  return table;
}

std::vector<DistanceEntry> distance_table(const VariantSet& v) {
  auto out = symbolic_distance_table();
  for (auto& d : out) d.value = norm_sq(SymStrain<Rational>(v[d.i] - v[d.j]));
  return out;
}

std::array<LinearFunctional, 4> rotation_functionals() {
  std::array<LinearFunctional, 4> h;
  h[0] = {"H0", {0, 0, 0, -1, -1, -1}};
  for (int i = 1; i <= 3; ++i) {
    LinearFunctional f{"H" + std::to_string(i), {}};
    for (size_t k = 0; k < 6; ++k) {
      SymStrain<Rational> basis;
      basis.v[k] = Rational(1);
      f.coeffs[k] = h[0](conjugate(quarter_turn(i), basis));
    }
    h[static_cast<size_t>(i)] = f;
  }
  return h;
}

LinearFunctional entry_functional(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int idx[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
  if (i < 1 || j > 3) throw Error(ErrorCode::InvalidParams, "entry functional indices must lie in 1..3");
  LinearFunctional f{"H" + std::to_string(i) + std::to_string(j), {}};
  f.coeffs[static_cast<size_t>(idx[i - 1][j - 1])] = Rational(1);
  return f;
}

LinearFunctional functional_by_name(std::string_view name) {
  for (const auto& h : rotation_functionals())
    if (h.name == name) return h;
  if (name.size() == 3 && name[0] == 'H') {
    int i = name[1] - '0', j = name[2] - '0';
    if (i >= 1 && i <= 3 && j >= 1 && j <= 3) return entry_functional(i, j);
  }
  throw Error(ErrorCode::ParseError, "unknown functional '" + std::string(name) + "'");
}

Extremisers functional_extremisers(const VariantSet& v, const LinearFunctional& h) {
  Extremisers x;
  std::array<Rational, kVariantCount> vals;
  for (int i = 1; i <= kVariantCount; ++i) vals[static_cast<size_t>(i - 1)] = h(v[i]);
  x.min_value = *std::min_element(vals.begin(), vals.end());
  x.max_value = *std::max_element(vals.begin(), vals.end());
  for (int i = 1; i <= kVariantCount; ++i) {
    if (vals[static_cast<size_t>(i - 1)] == x.min_value) x.minimisers.push_back(i);
    if (vals[static_cast<size_t>(i - 1)] == x.max_value) x.maximisers.push_back(i);
  }
  return x;
}

}  // namespace martensite
