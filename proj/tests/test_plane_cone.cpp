#include <doctest.h>

#include <algorithm>

#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/plane_cone.hpp"
#include "oracles.hpp"

using namespace martensite;

namespace {

using S = SymStrain<Rational>;

// Entry order (11, 22, 33, 12, 13, 23).
S sym(long a11, long a22, long a33, long a12, long a13, long a23) { return S{a11, a22, a33, a12, a13, a23}; }

std::vector<std::string> equations(const PlaneClassification& c) {
  std::vector<std::string> out;
  for (const auto& w : c.witnesses) out.push_back(w.equation());
  std::sort(out.begin(), out.end());
  return out;
}

S random_trace_free(oracle::RandomRationals& rng, long span) {
  S e;
  for (size_t k = 0; k < 6; ++k) e.v[k] = Rational(rng.range(-span, span));
  e.v[2] = -e.v[0] - e.v[1];
  return e;
}

// Distinct real projective roots of c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3.
int oracle_projective_roots(const std::array<Rational, 4>& c) {
  oracle::Coeffs g{c[3].raw(), c[2].raw(), c[1].raw(), c[0].raw()};
  oracle::trim(g);
  int at_infinity = c[0].is_zero() ? 1 : 0;
  if (g.size() <= 1) return at_infinity;
  mpq_class bound = 1;
  for (const auto& x : g) bound += abs(x) / abs(g.back());
  return at_infinity + oracle::sturm_closed(g, -bound, bound);
}

}  // namespace

TEST_CASE("one compatible direction: x(x^2+y^2)") {
  // diag(x, x, -2x) + y (e23 + e32)
  auto c = classify_plane(sym(1, 1, -2, 0, 0, 0), sym(0, 0, 0, 0, 0, 1));
  CHECK(c.kind == PlaneKind::OneLine);
  CHECK(c.form == CanonicalForm::XSumOfSquares);
  CHECK(equations(c) == std::vector<std::string>{"x = 0"});
}

TEST_CASE("one compatible direction: x^3") {
  auto c = classify_plane(sym(0, 0, 0, 1, 1, 1), sym(1, -1, 0, 0, 0, 0));
  CHECK(c.kind == PlaneKind::OneLine);
  CHECK(c.form == CanonicalForm::XCubed);
  REQUIRE(c.witnesses.size() == 1);
  CHECK(c.witnesses[0].equation() == "x = 0");
  CHECK(c.witnesses[0].multiplicity == 3);
}

TEST_CASE("two compatible directions: xy^2") {
  auto c = classify_plane(sym(1, -1, 0, 0, 0, 0), sym(0, 0, 0, 0, 0, 1));
  CHECK(c.kind == PlaneKind::TwoLines);
  CHECK(c.form == CanonicalForm::XYSquared);
  CHECK(equations(c) == std::vector<std::string>{"x = 0", "y = 0"});
  // det = -x y^2: the double direction is y = 0
  for (const auto& w : c.witnesses) CHECK(w.multiplicity == (w.equation() == "y = 0" ? 2 : 1));
}

TEST_CASE("three compatible directions") {
  auto c = classify_plane(sym(1, 0, -1, 0, 0, 0), sym(0, 1, -1, 0, 0, 0));
  CHECK(c.kind == PlaneKind::ThreeLines);
  CHECK(c.form == CanonicalForm::XYXPlusY);
  CHECK(equations(c) == std::vector<std::string>{"x = -y", "x = 0", "y = 0"});

  auto d = classify_plane(sym(-2, 1, 1, 0, 0, 0), sym(0, 0, 0, 0, 0, 1));
  CHECK(d.kind == PlaneKind::ThreeLines);
  CHECK(equations(d) == std::vector<std::string>{"x = -y", "x = 0", "x = y"});
}

TEST_CASE("compatible planes") {
  auto a = classify_plane(sym(0, 1, -1, 0, 0, 0), sym(0, 0, 0, 0, 0, 1));
  CHECK(a.kind == PlaneKind::Plane);
  CHECK(a.form == CanonicalForm::Zero);
  CHECK(a.witnesses.empty());
  CHECK(classify_plane(sym(0, 0, 0, 1, 0, 0), sym(0, 0, 0, 0, 1, 0)).kind == PlaneKind::Plane);
}

TEST_CASE("plane preconditions") {
  try {
    (void)classify_plane(sym(1, -1, 0, 0, 0, 0), sym(2, -2, 0, 0, 0, 0));
    FAIL("expected DependentBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DependentBasis);
  }
  try {
    (void)classify_plane(sym(1, 0, 0, 0, 0, 0), sym(0, 0, 0, 1, 0, 0));
    FAIL("expected NotTraceZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTraceZero);
  }
  // an affine plane in a non-zero trace slice
  auto c = classify_plane_through(sym(1, 1, 1, 0, 0, 0), sym(2, 1, 0, 0, 0, 0), sym(1, 2, 0, 0, 0, 0));
  CHECK(c.kind == PlaneKind::ThreeLines);
}

TEST_CASE("random planes: discriminant path agrees with root isolation") {
  oracle::RandomRationals rng(21);
  int seen[4] = {0, 0, 0, 0};
  for (int n = 0; n < 1000; ++n) {
    // small entries make degenerate cubics common enough to exercise every path
    long span = n % 3 == 0 ? 1 : 6;
    S e1 = random_trace_free(rng, span), e2 = random_trace_free(rng, span);
    if (rank(Matrix<Rational>{{e1.v.begin(), e1.v.end()}, {e2.v.begin(), e2.v.end()}}) < 2) continue;
    auto c = classify_plane(e1, e2);
    seen[static_cast<int>(c.kind)]++;
    if (c.kind == PlaneKind::Plane) continue;
    int expected = static_cast<int>(c.kind) + 1;
    CHECK(oracle_projective_roots(c.cubic) == expected);
    CHECK(static_cast<int>(c.witnesses.size()) == expected);
    int total = 0;
    for (const auto& w : c.witnesses) {
      total += w.multiplicity;
      if (w.exact) {
        S d = (*w.exact)[0] * e1 + (*w.exact)[1] * e2;
        CHECK(d.det().is_zero());
      } else {
        // the cubic changes sign across an isolated simple root
        auto f = [&](const Rational& t) {
          return c.cubic[0] * pow(t, 3) + c.cubic[1] * t * t + c.cubic[2] * t + c.cubic[3];
        };
        CHECK(f(w.slope->lo).sign() * f(w.slope->hi).sign() < 0);
        CHECK(w.slope->width() <= Rational(1, 1000000000L));
      }
    }
    CHECK(total == (c.form == CanonicalForm::XSumOfSquares ? 1 : 3));
  }
  for (int k = 0; k < 4; ++k) CHECK(seen[k] > 0);
}

TEST_CASE("classification is invariant under change of basis") {
  oracle::RandomRationals rng(22);
  for (int n = 0; n < 20; ++n) {
    S e1 = random_trace_free(rng, 2), e2 = random_trace_free(rng, 2);
    if (rank(Matrix<Rational>{{e1.v.begin(), e1.v.end()}, {e2.v.begin(), e2.v.end()}}) < 2) continue;
    auto ref = classify_plane(e1, e2);
    for (int m = 0; m < 100; ++m) {
      Rational a = rng.rational(5, 4), b = rng.rational(5, 4), c = rng.rational(5, 4), d = rng.rational(5, 4);
      if ((a * d - b * c).is_zero()) continue;
      auto got = classify_plane(a * e1 + b * e2, c * e1 + d * e2);
      CHECK(got.kind == ref.kind);
      CHECK(got.form == ref.form);
    }
  }
}
