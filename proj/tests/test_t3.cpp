#include <doctest.h>

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/t3.hpp"
#include "oracles.hpp"

using namespace martensite;

namespace {

const std::vector<Triple> kTriples = {{1, 6, 12}, {1, 8, 10}, {2, 5, 11}, {2, 7, 9},
                                      {3, 6, 9},  {3, 8, 11}, {4, 5, 10}, {4, 7, 12}};

bool near(const AlgebraicScalar& x, double target, double tol) {
  return std::abs(x.approx() - target) <= tol;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("T3 sign test") {
  auto v = build_variants(fixture::niti());
  CHECK(is_t3(v[1], v[6], v[12]));
  CHECK_FALSE(is_t3(v[1], v[2], v[3]));
  CHECK_FALSE(is_t3(v[1], v[1], v[6]));
  SymStrain<Rational> off{1, 0, 0, 0, 0, 0};
  CHECK(code_of([&] { (void)is_t3(v[1], v[6], off); }) == ErrorCode::TraceMismatch);
}

TEST_CASE("the eight incompatible triples") {
  for (const auto& p : fixture::materials()) {
    auto v = build_variants(p);
    auto t = enumerate_incompatible_triples(v);
    CHECK(t == kTriples);
  }
  auto o = orbit({1, 6, 12}, rotation_group());
  CHECK(o.size() == 8);
  auto degenerate = build_variants(LatticeParams::parse("3/4,0,1,1/2"));
  CHECK(code_of([&] { (void)enumerate_incompatible_triples(degenerate); }) == ErrorCode::DegenerateParams);
}

TEST_CASE("scaffold cubic matches a direct determinant") {
  oracle::RandomRationals rng(31);
  auto v = build_variants(fixture::niti());
  for (int n = 0; n < 30; ++n) {
    Rational l = rng.rational();
    auto p = scaffold_cubic(v[1], v[6], v[12]);
    CHECK(p.eval(l) == (l * v[1] + (Rational(1) - l) * v[6] - v[12]).det());
  }
}

TEST_CASE("lambda values against the tabulated ones") {
  const std::map<int, double> table6 = {{0, 0.6830}, {1, 0.0396}, {2, 0.6683}};
  auto mats = fixture::materials();
  for (size_t m = 0; m < mats.size(); ++m) {
    auto v = build_variants(mats[m]);
    for (const auto& t : kTriples) {
      auto r = solve_t3(v, t);
      CAPTURE(t[0]);
      CHECK(r.symmetric);
      CHECK(r.shared_field);
      for (const auto& l : r.lambdas) {
        bool direct = near(l, table6.at(static_cast<int>(m)), 5e-5);
        bool reversed = near(AlgebraicScalar(1) - l, table6.at(static_cast<int>(m)), 5e-5);
        CHECK((direct || reversed));
      }
    }
  }
  auto v = build_variants(fixture::niti());
  CHECK(near(solve_t3(v, {1, 8, 10}).lambdas[0], 0.683046, 1e-6));
  CHECK(near(solve_t3(v, {1, 6, 12}).lambdas[0], 0.316954, 1e-6));
}

TEST_CASE("each lambda is the only root of its cubic in (0,1)") {
  auto v = build_variants(fixture::niti());
  for (const auto& t : kTriples) {
    auto r = solve_t3(v, t);
    for (size_t k = 0; k < 3; ++k) {
      oracle::Coeffs c;
      for (const auto& x : r.cubics[k].coeffs()) c.push_back(x.raw());
      CHECK(oracle::sturm_distinct_roots(c, 0, 1) == 1);
      CHECK(eval(r.cubics[k], r.lambdas[k]).is_zero());
    }
  }
}

TEST_CASE("nodes and scaffold checks") {
  for (const auto& p : fixture::materials()) {
    auto v = build_variants(p);
    for (const auto& t : kTriples) {
      auto r = solve_t3(v, t);
      auto c = t3_nodes_checks(r);
      CHECK(c.nodes_available);
      CHECK(c.lambdas_in_unit_interval);
      CHECK(c.scaffold_compatible);
      CHECK(c.nodes_pairwise_compatible);
      CHECK(c.nodes_compatible_with_vertices);
      CHECK(c.nodes_distinct);
      CHECK(c.all());
      // each node lies on both cevians: barycentric coordinates sum to one and
      // the cevian through vertex i keeps the ratio of the scaffold point
      for (const auto& b : *r.node_barycentric) CHECK(b[0] + b[1] + b[2] == AlgebraicScalar(1));
    }
  }
}

TEST_CASE("nodes lie on both scaffold segments") {
  auto v = build_variants(fixture::niti());
  auto r = solve_t3(v, {1, 8, 10});
  const auto& l = r.lambdas;
  const auto& b = *r.node_barycentric;
  // e12 on [e1, e11]: coordinates 2 and 3 in ratio lambda23 : 1 - lambda23
  CHECK(b[0][1] * (AlgebraicScalar(1) - l[1]) == b[0][2] * l[1]);
  // e12 on [e2, e22]: coordinates 3 and 1 in ratio lambda31 : 1 - lambda31
  CHECK(b[0][2] * (AlgebraicScalar(1) - l[2]) == b[0][0] * l[2]);
}

TEST_CASE("the eight T3s are similar") {
  auto v = build_variants(fixture::niti());
  auto ref = solve_t3(v, kTriples[0]);
  for (const auto& t : kTriples) CHECK(similar(ref, solve_t3(v, t)));
}

TEST_CASE("skeleton") {
  auto v = build_variants(fixture::niti());
  std::set<std::pair<int, bool>> sign_case;
  for (const auto& t : kTriples) {
    auto r = solve_t3(v, t);
    auto s = t3_skeleton(r);
    CHECK(s.arms_compatible);
    CHECK(s.triangle_compatible);
    sign_case.insert({r.det_sign, s.left_case});
  }
  // the case is a function of the common determinant sign
  std::set<int> signs;
  for (auto [sg, c] : sign_case) signs.insert(sg);
  CHECK(signs.size() == sign_case.size());
}

TEST_CASE("three-dimensional continuum") {
  auto v = build_variants(fixture::niti());
  auto t = solve_t3(v, {1, 8, 10});
  // the dual's vertices are compatible with all three vertices
  for (int c : {2, 7, 9}) {
    auto same = continuum_t3(t, v[c], Rational(0));
    CHECK(same.vertices == t.vertices);
    auto half = continuum_t3(t, v[c], Rational(1, 2));
    CHECK(half.det_sign == t.det_sign);
    auto third = continuum_t3(t, v[c], Rational(1, 3));
    for (size_t i = 0; i < 3; ++i) {
      auto d0 = (t.vertices[i] - t.vertices[(i + 1) % 3]).det();
      auto d1 = (third.vertices[i] - third.vertices[(i + 1) % 3]).det();
      CHECK(d1 == pow(Rational(2, 3), 3) * d0);
    }
    CHECK(third.lambdas == t.lambdas);
  }
  CHECK(code_of([&] { (void)continuum_t3(t, v[2], Rational(1)); }) == ErrorCode::DegenerateLambda);
  CHECK(code_of([&] { (void)continuum_t3(t, v[3], Rational(1, 2)); }) == ErrorCode::IncompatibleCenter);
}

TEST_CASE("dual pair identities") {
  auto v = build_variants(fixture::niti());
  auto rep = dual_pair_identities(v, {1, 8, 10});
  CHECK(rep.dual == Triple{2, 7, 9});
  CHECK(rep.identities_cyclic);
  std::set<Triple> expected = {{2, 9, 7}, {7, 2, 9}, {9, 7, 2}};
  CHECK(std::set<Triple>(rep.identities.begin(), rep.identities.end()) == expected);
  CHECK(rep.nodes_available);
  CHECK(rep.nodes_pairwise_compatible);
  REQUIRE(rep.hull_dim_exact.has_value());
  CHECK(*rep.hull_dim_exact == 4);
  CHECK(rep.interval_lower_bound == 4);
  for (const auto& t : kTriples) {
    auto r = dual_pair_identities(v, t);
    CHECK(r.identities_cyclic);
    CHECK(r.hull_dim_exact == 4);
  }
}

TEST_CASE("cube neighbours and diagonal rotation") {
  CHECK(cube_neighbours({3, 8, 11}) == std::vector<Triple>{{1, 8, 10}, {2, 5, 11}, {3, 6, 9}});
  auto r = diagonal_rotation({3, 8, 11});
  CHECK(r.apply({1, 8, 10}) == std::vector<int>{5, 11, 2});
  CHECK((r * r).apply({1, 8, 10}) == std::vector<int>{9, 3, 6});
  for (const auto& t : kTriples) CHECK(cube_neighbours(t).size() == 3);
}

TEST_CASE("level-2 T3 from a node of the first neighbour") {
  auto v = build_variants(fixture::niti());
  auto t1 = solve_t3(v, {1, 8, 10});
  auto l = level2_t3(v, {3, 8, 11}, 1, (*t1.node_barycentric)[0]);
  CHECK(l.chain_identical);
  CHECK(l.det_sign != 0);
  CHECK(l.barycentre_incompatible == std::array<bool, 3>{true, true, true});
  CHECK(l.vertex_indices[1] == Triple{5, 11, 2});
  CHECK(l.vertex_indices[2] == Triple{9, 3, 6});

  std::array<AlgebraicScalar, 3> vertex = {1, 0, 0};
  CHECK(code_of([&] { (void)level2_t3(v, {3, 8, 11}, 1, vertex); }) == ErrorCode::DegenerateT3);
  // a vertex shared with the base collapses onto the base T3 itself
  std::array<AlgebraicScalar, 3> shared = {0, 1, 0};
  auto back = level2_t3(v, {3, 8, 11}, 1, shared);
  CHECK(std::set<int>{back.vertex_indices[0][1], back.vertex_indices[1][1], back.vertex_indices[2][1]} ==
        std::set<int>{3, 8, 11});
  std::array<AlgebraicScalar, 3> off = {1, 1, 0};
  CHECK(code_of([&] { (void)level2_t3(v, {3, 8, 11}, 1, off); }) == ErrorCode::InvalidParams);

  // rational interior point: the triple is solved as an ordinary T3
  std::array<AlgebraicScalar, 3> mid = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  auto m = level2_t3(v, {3, 8, 11}, 1, mid);
  REQUIRE(m.solved.has_value());
  CHECK(m.solved->symmetric);
  CHECK(t3_nodes_checks(*m.solved).all());
}

TEST_CASE("24 level-2 T3s") {
  auto v = build_variants(fixture::niti());
  auto all = enumerate_level2(v);
  CHECK(all.size() == 24);
  std::set<std::set<Triple>> distinct;
  for (const auto& l : all) {
    CHECK(l.chain_identical);
    CHECK(l.barycentre_incompatible == std::array<bool, 3>{true, true, true});
    distinct.insert({l.vertex_indices.begin(), l.vertex_indices.end()});
  }
  CHECK(distinct.size() == 8);
}

TEST_CASE("five-dimensional set of T3s") {
  auto v = build_variants(fixture::niti());
  auto start = std::chrono::steady_clock::now();
  std::array<Rational, 6> at_node = {1, 0, 0, 0, 0, 0};
  auto w = five_dim_witness(v, {3, 8, 11}, 32, {at_node});
  CHECK(w.dimension == 5);
  CHECK(w.samples == 33);
  CHECK(w.t3_passed == w.samples);
  CHECK(w.independent_points.size() == 6);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
  CHECK(code_of([&] { (void)five_dim_witness(v, {3, 8, 11}, 0); }) == ErrorCode::InsufficientSamples);
  auto s = simplex_samples(5);
  for (const auto& mu : s) {
    Rational sum(0);
    for (const auto& x : mu) {
      CHECK(x.sign() > 0);
      sum += x;
    }
    CHECK(sum == Rational(1));
  }
}
