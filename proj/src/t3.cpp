#include "martensite/t3.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/roots.hpp"

namespace martensite {

namespace {

int sign_of(const Rational& x) { return x.sign(); }
int sign_of(const AlgebraicScalar& x) { return x.sign(); }

AlgStrain scale(const AlgebraicScalar& c, const AlgStrain& e) {
  return map_strain<AlgebraicScalar>(e, [&](const AlgebraicScalar& x) { return c * x; });
}

bool compatible(const AlgStrain& a, const AlgStrain& b) { return (a - b).det().is_zero(); }

// Point with barycentric coordinates `b` over three vertices.
AlgStrain combine(const std::array<AlgebraicScalar, 3>& b, const std::array<SymStrain<Rational>, 3>& e) {
  AlgStrain out;
  for (size_t m = 0; m < 3; ++m) out += scale(b[m], lift(e[m]));
  return out;
}

// Strain sum_m c[m] e(m) over the twelve variants.
using VariantCoeffs = std::array<AlgebraicScalar, kVariantCount>;

AlgStrain from_coeffs(const VariantSet& v, const VariantCoeffs& c) {
  AlgStrain out;
  for (int m = 1; m <= kVariantCount; ++m)
    if (!c[static_cast<size_t>(m - 1)].is_zero()) out += scale(c[static_cast<size_t>(m - 1)], lift(v[m]));
  return out;
}

VariantCoeffs permute_coeffs(const Permutation& p, const VariantCoeffs& c) {
  VariantCoeffs out;
  for (int m = 1; m <= kVariantCount; ++m) out[static_cast<size_t>(p(m) - 1)] = c[static_cast<size_t>(m - 1)];
  return out;
}

bool same_field(const std::vector<AlgebraicScalar>& xs) {
  const NumberField* f = nullptr;
  for (const auto& x : xs) {
    if (x.is_rational()) continue;
    if (f && f != x.field().get()) return false;
    f = x.field().get();
  }
  return true;
}

Rational halton(std::size_t index, unsigned base) {
  Rational r(0), f(1);
  while (index > 0) {
    f = f / Rational(static_cast<long>(base));
    r += f * Rational(static_cast<long>(index % base));
    index /= base;
  }
  return r;
}

Interval enclosure_of(const AlgebraicScalar& x) {
  static const Rational w = Rational(1) / pow(Rational(2), 80);
  return x.enclosure(w);
}

std::string join(const std::vector<size_t>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// Largest r with an r x r minor whose interval determinant excludes zero.
std::pair<int, std::string> interval_rank_witness(const Matrix<Interval>& m) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t r = std::min(rows, cols); r > 0; --r) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(r), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(r), true);
      do {
        std::vector<size_t> ri, ci;
        for (size_t i = 0; i < rows; ++i)
          if (rsel[i]) ri.push_back(i);
        for (size_t j = 0; j < cols; ++j)
          if (csel[j]) ci.push_back(j);
        Matrix<Interval> sub;
        for (size_t i : ri) {
          std::vector<Interval> row;
          for (size_t j : ci) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        if (!interval_det(sub).contains_zero())
          return {static_cast<int>(r), "interval minor rows " + join(ri) + " cols " + join(ci)};
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return {0, "no non-singular minor"};
}

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

Triple to_triple(const std::vector<int>& v) { return {v.at(0), v.at(1), v.at(2)}; }

}  // namespace

template <class T>
T3Signs t3_signs(const SymStrain<T>& e1, const SymStrain<T>& e2, const SymStrain<T>& e3) {
  if (!(e1.trace() == e2.trace()) || !(e2.trace() == e3.trace()))
    throw Error(ErrorCode::TraceMismatch, "T3 vertices must have equal traces");
  T3Signs s;
  s.signs = {sign_of((e1 - e2).det()), sign_of((e2 - e3).det()), sign_of((e3 - e1).det())};
  s.is_t3 = s.signs[0] != 0 && s.signs[0] == s.signs[1] && s.signs[1] == s.signs[2];
  s.common_sign = s.is_t3 ? s.signs[0] : 0;
  return s;
}

template T3Signs t3_signs(const SymStrain<Rational>&, const SymStrain<Rational>&, const SymStrain<Rational>&);
template T3Signs t3_signs(const AlgStrain&, const AlgStrain&, const AlgStrain&);

std::vector<Triple> enumerate_incompatible_triples(const VariantSet& v) {
  if (v.flags.all_compatible)
    throw Error(ErrorCode::DegenerateParams, "every pair of variants is compatible at these parameters");
  std::vector<Triple> out;
  for (const auto& t : incompatible_triples(v)) {
    if (!is_t3(v[t[0]], v[t[1]], v[t[2]]))
      throw Error(ErrorCode::NotT3, "pairwise incompatible triple fails the sign test");
    out.push_back(to_triple(t));
  }
  return out;
}

UPoly scaffold_cubic(const SymStrain<Rational>& a, const SymStrain<Rational>& b, const SymStrain<Rational>& c) {
  // det(A + lambda B) with A = b - c, B = a - b
  SymStrain<Rational> A = b - c, B = a - b;
  return UPoly({A.det(), inner(A.cof(), B), inner(A, B.cof()), B.det()});
}

T3Record solve_t3(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2, const SymStrain<Rational>& e3,
                  const std::vector<AlgebraicScalar>& known) {
  T3Signs s = t3_signs(e1, e2, e3);
  if (!s.is_t3) throw Error(ErrorCode::NotT3, "determinant signs differ or vanish");

  T3Record t;
  t.vertices = {e1, e2, e3};
  t.det_sign = s.common_sign;
  t.cubics = {scaffold_cubic(e1, e2, e3), scaffold_cubic(e2, e3, e1), scaffold_cubic(e3, e1, e2)};

  std::vector<AlgebraicScalar> pool;
  for (const auto& k : known)
    if (!k.is_rational()) pool.push_back(k);
  for (size_t k = 0; k < 3; ++k) {
    auto roots = isolate_cubic_roots(t.cubics[k], Interval(Rational(0), Rational(1)), true);
    if (roots.empty()) throw Error(ErrorCode::NotT3, "scaffold cubic has no root in (0,1)");
    if (roots.size() > 1 || roots[0].multiplicity > 1)
      throw Error(ErrorCode::MultipleRootsInUnitInterval, "scaffold cubic has several roots in (0,1)");
    const RootInterval& r = roots[0];
    if (r.exact) {
      t.lambdas[k] = AlgebraicScalar(*r.exact);
      continue;
    }
    std::vector<AlgebraicScalar> candidates;
    for (const auto& c : pool) {
      candidates.push_back(c);
      candidates.push_back(AlgebraicScalar(1) - c);
    }
    if (auto m = match_root(t.cubics[k], r, candidates)) {
      t.lambdas[k] = *m;
    } else {
      t.lambdas[k] = AlgebraicScalar::root_of(r);
      pool.push_back(t.lambdas[k]);
    }
  }
  const auto& l = t.lambdas;
  const AlgebraicScalar one(1);
  t.scaffold = {scale(l[1], lift(e2)) + scale(one - l[1], lift(e3)), scale(l[2], lift(e3)) + scale(one - l[2], lift(e1)),
                scale(l[0], lift(e1)) + scale(one - l[0], lift(e2))};
  t.symmetric = l[0] == l[1] && l[1] == l[2];
  t.shared_field = same_field({l[0], l[1], l[2]});
  if (!t.shared_field) return t;

  // Cevian i runs from vertex i to the scaffold point P[i] on the opposite side.
  const AlgebraicScalar zero(0);
  std::array<std::array<AlgebraicScalar, 3>, 3> P = {{
      {zero, l[1], one - l[1]},
      {one - l[2], zero, l[2]},
      {l[0], one - l[0], zero},
  }};
  auto node = [&](size_t i, size_t j) {
    size_t k = 3 - i - j;
    AlgebraicScalar s = P[j][k] / (P[j][k] + P[i][k] * P[j][i]);
    std::array<AlgebraicScalar, 3> b;
    for (size_t m = 0; m < 3; ++m) b[m] = s * P[i][m];
    b[i] += one - s;
    return b;
  };
  std::array<std::array<AlgebraicScalar, 3>, 3> nb = {node(0, 1), node(1, 2), node(2, 0)};
  t.node_barycentric = nb;
  t.nodes = std::array<AlgStrain, 3>{combine(nb[0], t.vertices), combine(nb[1], t.vertices),
                                     combine(nb[2], t.vertices)};
  return t;
}

T3Record solve_t3(const VariantSet& v, const Triple& t, const std::vector<AlgebraicScalar>& known) {
  Triple s = sorted(t);
  T3Record r = solve_t3(v[s[0]], v[s[1]], v[s[2]], known);
  r.indices = s;
  return r;
}

bool NodeChecks::all() const {
  return nodes_available && lambdas_in_unit_interval && scaffold_compatible && nodes_pairwise_compatible &&
         nodes_compatible_with_vertices && nodes_distinct && barycentre_incompatible[0] && barycentre_incompatible[1] &&
         barycentre_incompatible[2];
}

NodeChecks t3_nodes_checks(const T3Record& t) {
  NodeChecks c;
  c.lambdas_in_unit_interval = std::all_of(t.lambdas.begin(), t.lambdas.end(), [](const AlgebraicScalar& l) {
    return l.sign() > 0 && (AlgebraicScalar(1) - l).sign() > 0;
  });
  c.scaffold_compatible = true;
  for (size_t i = 0; i < 3; ++i) c.scaffold_compatible &= compatible(lift(t.vertices[i]), t.scaffold[i]);
  SymStrain<Rational> bc = Rational(1, 3) * (t.vertices[0] + t.vertices[1] + t.vertices[2]);
  for (size_t i = 0; i < 3; ++i) c.barycentre_incompatible[i] = !(t.vertices[i] - bc).det().is_zero();
  if (!t.nodes) return c;
  c.nodes_available = true;
  const auto& n = *t.nodes;
  c.nodes_pairwise_compatible = compatible(n[0], n[1]) && compatible(n[1], n[2]) && compatible(n[2], n[0]);
  c.nodes_distinct = !(n[0] == n[1]) && !(n[1] == n[2]) && !(n[2] == n[0]);
  c.nodes_compatible_with_vertices = true;
  for (size_t k = 0; k < 3; ++k) {
    // node k is e_{k,k+1}
    c.nodes_compatible_with_vertices &= compatible(n[k], lift(t.vertices[k]));
    c.nodes_compatible_with_vertices &= compatible(n[k], lift(t.vertices[(k + 1) % 3]));
  }
  return c;
}

T3Skeleton t3_skeleton(const T3Record& t) {
  if (!t.nodes) throw Error(ErrorCode::Unsupported, "T3 nodes unavailable: scaffold parameters in different fields");
  const auto& b = *t.node_barycentric;
  T3Skeleton s;
  int left = 0;
  for (size_t i = 0; i < 3; ++i) {
    // cevian i carries nodes e_{i,i+1} (index i) and e_{i-1,i} (index i-1); the
    // farther one has the smaller weight on vertex i
    size_t a = i, c = (i + 2) % 3;
    size_t far = compare(b[a][i], b[c][i]) < 0 ? a : c;
    s.arm_node[i] = static_cast<int>(far);
    if (far == a) ++left;
    s.arm_ends[i] = (*t.nodes)[far];
  }
  if (left != 0 && left != 3) throw Error(ErrorCode::Unsupported, "inconsistent skeleton orientation");
  s.left_case = left == 3;
  s.triangle = *t.nodes;
  s.arms_compatible = true;
  for (size_t i = 0; i < 3; ++i) s.arms_compatible &= compatible(lift(t.vertices[i]), s.arm_ends[i]);
  const auto& n = s.triangle;
  s.triangle_compatible = compatible(n[0], n[1]) && compatible(n[1], n[2]) && compatible(n[2], n[0]);
  return s;
}

T3Record continuum_t3(const T3Record& t, const SymStrain<Rational>& e0, const Rational& mu) {
  if (mu == Rational(1)) throw Error(ErrorCode::DegenerateLambda, "continuum parameter 1 collapses the T3");
  if (mu.sign() < 0 || mu > Rational(1)) throw Error(ErrorCode::InvalidParams, "continuum parameter outside [0,1)");
  for (const auto& e : t.vertices)
    if (!is_compatible(e0, e)) throw Error(ErrorCode::IncompatibleCenter, "centre is incompatible with a vertex");
  std::array<SymStrain<Rational>, 3> w;
  for (size_t i = 0; i < 3; ++i) w[i] = mu * e0 + (Rational(1) - mu) * t.vertices[i];
  std::vector<AlgebraicScalar> known(t.lambdas.begin(), t.lambdas.end());
  return solve_t3(w[0], w[1], w[2], known);
}

std::vector<Triple> cube_neighbours(const Triple& t) {
  std::set<Triple> out;
  std::vector<int> v(t.begin(), t.end());
  for (int axis = 1; axis <= 3; ++axis) {
    const Permutation& g = rotation_generator(axis);
    out.insert(to_triple(g.apply_set(v)));
    out.insert(to_triple(g.inverse().apply_set(v)));
  }
  out.erase(sorted(t));
  return {out.begin(), out.end()};
}

Permutation diagonal_rotation(const Triple& t) {
  std::vector<int> v(t.begin(), t.end());
  std::sort(v.begin(), v.end());
  int first = cube_neighbours(t).at(0)[0];
  std::optional<Permutation> best;
  for (const auto& g : rotation_group().elements) {
    if (g.is_identity() || !(g * g * g).is_identity() || g.apply_set(v) != v) continue;
    if (!best || g(first) < (*best)(first)) best = g;
  }
  if (!best) throw Error(ErrorCode::Unsupported, "no order-3 rotation fixes the triple");
  return *best;
}

namespace {

SymStrain<Polynomial> symbolic_combo(const Triple& idx, const std::array<Polynomial, 3>& w) {
  const auto& s = symbolic_variants();
  SymStrain<Polynomial> out;
  for (size_t m = 0; m < 3; ++m) out += w[m] * s[idx[m]];
  return out;
}

std::array<Polynomial, 3> xyz() { return {Polynomial::var("x"), Polynomial::var("y"), Polynomial::var("z")}; }

}  // namespace

DualPairReport dual_pair_identities(const VariantSet& v, const Triple& tau) {
  DualPairReport rep;
  rep.tau = sorted(tau);
  rep.dual = to_triple(inversion().apply_set({tau.begin(), tau.end()}));

  const auto w = xyz();
  auto lhs = symbolic_combo(rep.tau, w);
  Triple f = rep.dual;
  do {
    if ((lhs - symbolic_combo(f, w)).det().is_zero()) rep.identities.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  if (rep.identities.size() == 3) {
    const Triple& a = rep.identities[0];
    std::set<Triple> shifts = {a, {a[1], a[2], a[0]}, {a[2], a[0], a[1]}};
    rep.identities_cyclic = shifts == std::set<Triple>(rep.identities.begin(), rep.identities.end());
  }

  T3Record t1 = solve_t3(v, rep.tau);
  T3Record t2 = solve_t3(v, rep.dual, {t1.lambdas.begin(), t1.lambdas.end()});
  std::vector<AlgStrain> nodes;
  std::vector<AlgebraicScalar> lambdas(t1.lambdas.begin(), t1.lambdas.end());
  lambdas.insert(lambdas.end(), t2.lambdas.begin(), t2.lambdas.end());
  if (t1.nodes && t2.nodes) {
    nodes.insert(nodes.end(), t1.nodes->begin(), t1.nodes->end());
    nodes.insert(nodes.end(), t2.nodes->begin(), t2.nodes->end());
  }
  if (nodes.empty()) return rep;

  if (same_field(lambdas)) {
    rep.nodes_available = true;
    rep.nodes_pairwise_compatible = true;
    for (size_t a = 0; a < nodes.size(); ++a)
      for (size_t b = a + 1; b < nodes.size(); ++b) rep.nodes_pairwise_compatible &= compatible(nodes[a], nodes[b]);
    rep.hull_dim_exact = affine_dim(nodes);
  }
  Matrix<Interval> diff;
  for (size_t a = 1; a < nodes.size(); ++a) {
    std::vector<Interval> row;
    for (size_t k = 0; k < 6; ++k) row.push_back(enclosure_of(nodes[a].v[k] - nodes[0].v[k]));
    diff.push_back(row);
  }
  std::tie(rep.interval_lower_bound, rep.interval_certificate) = interval_rank_witness(diff);
  return rep;
}

Level2T3 level2_t3(const VariantSet& v, const Triple& base, int neighbour_choice,
                   const std::array<AlgebraicScalar, 3>& barycentric) {
  AlgebraicScalar sum(0);
  for (const auto& b : barycentric) {
    if (b.sign() < 0) throw Error(ErrorCode::InvalidParams, "barycentric coordinates must be non-negative");
    sum += b;
  }
  if (!(sum == AlgebraicScalar(1))) throw Error(ErrorCode::InvalidParams, "barycentric coordinates must sum to 1");
  auto neighbours = cube_neighbours(base);
  if (neighbour_choice < 1 || neighbour_choice > static_cast<int>(neighbours.size()))
    throw Error(ErrorCode::InvalidParams, "neighbour choice must be 1, 2 or 3");

  Level2T3 l;
  l.base = sorted(base);
  l.neighbour = neighbours[static_cast<size_t>(neighbour_choice - 1)];
  l.neighbour_choice = neighbour_choice;
  l.rotation = diagonal_rotation(base);
  l.barycentric = barycentric;
  std::vector<int> nb(l.neighbour.begin(), l.neighbour.end());
  l.vertex_indices = {l.neighbour, to_triple(l.rotation.apply(nb)), to_triple((l.rotation * l.rotation).apply(nb))};

  const auto w = xyz();
  std::array<SymStrain<Polynomial>, 3> sym;
  for (size_t m = 0; m < 3; ++m) sym[m] = symbolic_combo(l.vertex_indices[m], w);
  l.det_chain = {(sym[0] - sym[1]).det(), (sym[1] - sym[2]).det(), (sym[2] - sym[0]).det()};
  l.chain_identical = !l.det_chain[0].is_zero() && l.det_chain[0] == l.det_chain[1] && l.det_chain[1] == l.det_chain[2];

  for (size_t m = 0; m < 3; ++m) {
    AlgStrain e;
    for (size_t k = 0; k < 3; ++k) e += scale(barycentric[k], lift(v[l.vertex_indices[m][k]]));
    l.vertices[m] = e;
  }
  l.common_det = (l.vertices[0] - l.vertices[1]).det();
  if (l.common_det.is_zero()) throw Error(ErrorCode::DegenerateT3, "level-2 triple has vanishing determinant");
  l.det_sign = t3_signs(l.vertices[0], l.vertices[1], l.vertices[2]).common_sign;
  if (l.det_sign == 0) throw Error(ErrorCode::DegenerateT3, "level-2 triple fails the sign test");

  AlgStrain bc = scale(AlgebraicScalar(Rational(1, 3)), l.vertices[0] + l.vertices[1] + l.vertices[2]);
  for (size_t m = 0; m < 3; ++m) l.barycentre_incompatible[m] = !compatible(l.vertices[m], bc);

  if (std::all_of(barycentric.begin(), barycentric.end(), [](const AlgebraicScalar& b) { return b.is_rational(); })) {
    std::array<SymStrain<Rational>, 3> r;
    for (size_t m = 0; m < 3; ++m)
      r[m] = map_strain<Rational>(l.vertices[m], [](const AlgebraicScalar& x) { return x.rational_value(); });
    l.solved = solve_t3(r[0], r[1], r[2]);
  }
  return l;
}

std::vector<Level2T3> enumerate_level2(const VariantSet& v) {
  std::vector<Level2T3> out;
  std::vector<AlgebraicScalar> known;
  for (const auto& tau : enumerate_incompatible_triples(v)) {
    T3Record t1 = solve_t3(v, cube_neighbours(tau).at(0), known);
    if (!t1.node_barycentric) throw Error(ErrorCode::Unsupported, "level-1 nodes unavailable");
    known.insert(known.end(), t1.lambdas.begin(), t1.lambdas.end());
    for (const auto& b : *t1.node_barycentric) out.push_back(level2_t3(v, tau, 1, b));
  }
  return out;
}

std::vector<std::array<Rational, 6>> simplex_samples(std::size_t n) {
  static const unsigned primes[6] = {2, 3, 5, 7, 11, 13};
  std::vector<std::array<Rational, 6>> out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::array<Rational, 6> u;
    Rational s(0);
    for (size_t k = 0; k < 6; ++k) {
      u[k] = halton(i, primes[k]);
      s += u[k];
    }
    for (auto& x : u) x = x / s;
    out.push_back(u);
  }
  return out;
}

FiveDimWitness five_dim_witness(const VariantSet& v, const Triple& base, std::size_t n,
                                const std::vector<std::array<Rational, 6>>& extra) {
  FiveDimWitness w;
  w.base = sorted(base);
  w.neighbour = cube_neighbours(base).at(0);
  w.dual = to_triple(inversion().apply_set({w.neighbour.begin(), w.neighbour.end()}));
  Permutation r = diagonal_rotation(base);

  T3Record t1 = solve_t3(v, w.neighbour);
  T3Record t2 = solve_t3(v, w.dual, {t1.lambdas.begin(), t1.lambdas.end()});
  std::vector<AlgebraicScalar> lambdas(t1.lambdas.begin(), t1.lambdas.end());
  lambdas.insert(lambdas.end(), t2.lambdas.begin(), t2.lambdas.end());
  if (!t1.node_barycentric || !t2.node_barycentric || !same_field(lambdas))
    throw Error(ErrorCode::Unsupported, "nodes of the T3 and its dual do not share a field");

  // nodes as coefficient vectors over the twelve variants
  std::array<VariantCoeffs, 6> node_coeffs;
  for (size_t i = 0; i < 3; ++i) {
    for (size_t m = 0; m < 3; ++m) {
      node_coeffs[i][static_cast<size_t>(w.neighbour[m] - 1)] = (*t1.node_barycentric)[i][m];
      node_coeffs[3 + i][static_cast<size_t>(w.dual[m] - 1)] = (*t2.node_barycentric)[i][m];
    }
  }

  w.weights = simplex_samples(n);
  w.weights.insert(w.weights.end(), extra.begin(), extra.end());
  w.samples = w.weights.size();

  std::vector<AlgStrain> chosen;
  Matrix<AlgebraicScalar> rows;
  std::size_t point_index = 0;
  for (const auto& mu : w.weights) {
    VariantCoeffs c;
    for (size_t i = 0; i < 6; ++i)
      for (size_t m = 0; m < kVariantCount; ++m) c[m] += AlgebraicScalar(mu[i]) * node_coeffs[i][m];
    VariantCoeffs c1 = permute_coeffs(r, c), c2 = permute_coeffs(r, c1);
    std::array<AlgStrain, 3> pts = {from_coeffs(v, c), from_coeffs(v, c1), from_coeffs(v, c2)};
    bool ok = t3_signs(pts[0], pts[1], pts[2]).is_t3;
    w.sample_is_t3.push_back(ok);
    if (ok) ++w.t3_passed;
    for (const auto& p : pts) {
      if (chosen.size() < 6) {
        if (chosen.empty()) {
          chosen.push_back(p);
          w.independent_points.push_back(point_index);
        } else {
          auto d = p - chosen[0];
          Matrix<AlgebraicScalar> trial = rows;
          trial.emplace_back(d.v.begin(), d.v.end());
          if (rank(trial) == trial.size()) {
            rows = trial;
            chosen.push_back(p);
            w.independent_points.push_back(point_index);
          }
        }
      }
      ++point_index;
    }
  }
  w.dimension = static_cast<int>(chosen.size()) - 1;
  if (w.dimension < 5)
    throw Error(ErrorCode::InsufficientSamples,
                "only " + std::to_string(w.dimension) + " affinely independent directions in the sample");
  w.certificate = "exact rank 5 over Q(lambda), points " + join(w.independent_points);
  return w;
}

bool similar(const T3Record& a, const T3Record& b) {
  // lambda(i, j) for the ordered pair; reversing the pair gives 1 - lambda
  auto lam = [](const T3Record& t, int i, int j) {
    if ((i + 1) % 3 == j) return t.lambdas[static_cast<size_t>(i)];
    return AlgebraicScalar(1) - t.lambdas[static_cast<size_t>(j)];
  };
  std::array<int, 3> sigma = {0, 1, 2};
  do {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      ok = lam(b, i, (i + 1) % 3) == lam(a, sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>((i + 1) % 3)]);
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace martensite
