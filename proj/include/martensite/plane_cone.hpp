#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "martensite/interval.hpp"
#include "martensite/rational.hpp"
#include "martensite/sym_strain.hpp"

namespace martensite {

enum class PlaneKind { OneLine, TwoLines, ThreeLines, Plane };
/// Normal forms of a real binary cubic up to change of basis.
enum class CanonicalForm { XSumOfSquares, XCubed, XYSquared, XYXPlusY, Zero };

std::string_view to_string(PlaneKind k);
std::string_view to_string(CanonicalForm f);

/// Projective direction (x:y) in the basis (e1, e2). Rational directions are
/// stored as a primitive integer pair; irrational ones as x = t y with t isolated.
struct Direction {
  std::optional<std::array<Rational, 2>> exact;
  std::optional<Interval> slope;
  int multiplicity = 1;

  /// "x = 0", "y = 0", "x = -y", "2 x = 3 y" or "x = t y, t in [lo, hi]".
  std::string equation() const;
};

struct PlaneClassification {
  PlaneKind kind = PlaneKind::Plane;
  CanonicalForm form = CanonicalForm::Zero;
  /// det(x e1 + y e2) = c[0] x^3 + c[1] x^2 y + c[2] x y^2 + c[3] y^3.
  std::array<Rational, 4> cubic;
  Rational discriminant;
  std::vector<Direction> witnesses;
};

/// det(x e1 + y e2) as binary cubic coefficients (x^3 first).
std::array<Rational, 4> plane_cubic(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2);

/// Discriminant of a binary cubic, valid when the x^3 coefficient vanishes.
Rational binary_cubic_discriminant(const std::array<Rational, 4>& c);

/// Compatible cone of span{e1, e2}. Both must be trace free (NotTraceZero) and
/// independent (DependentBasis). `width` bounds irrational slope enclosures.
PlaneClassification classify_plane(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2,
                                   const Rational& width = Rational(1, 1000000000L));

/// Same for the affine plane through `base`, `a`, `b` of one trace slice.
PlaneClassification classify_plane_through(const SymStrain<Rational>& base, const SymStrain<Rational>& a,
                                           const SymStrain<Rational>& b,
                                           const Rational& width = Rational(1, 1000000000L));

}  // namespace martensite
