#include "martensite/plane_cone.hpp"

#include <sstream>

#include "martensite/error.hpp"
#include "martensite/linalg.hpp"
#include "martensite/roots.hpp"
#include "martensite/upoly.hpp"

namespace martensite {

std::string_view to_string(PlaneKind k) {
  switch (k) {
    case PlaneKind::OneLine: return "one line";
    case PlaneKind::TwoLines: return "two lines";
    case PlaneKind::ThreeLines: return "three lines";
    case PlaneKind::Plane: return "plane";
  }
  return "?";
}

std::string_view to_string(CanonicalForm f) {
  switch (f) {
    case CanonicalForm::XSumOfSquares: return "x(x^2+y^2)";
    case CanonicalForm::XCubed: return "x^3";
    case CanonicalForm::XYSquared: return "xy^2";
    case CanonicalForm::XYXPlusY: return "xy(x+y)";
    case CanonicalForm::Zero: return "0";
  }
  return "?";
}

namespace {

std::string term(const Rational& c, const char* var) {
  if (c == Rational(1)) return var;
  if (c == Rational(-1)) return std::string("-") + var;
  return c.str() + " " + var;
}

Direction rational_direction(Rational x, Rational y, int mult) {
  // primitive integer pair, first non-zero entry positive
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), x.denominator().get_mpz_t(), y.denominator().get_mpz_t());
  x = x * Rational(l, 1);
  y = y * Rational(l, 1);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), y.numerator().get_mpz_t());
  x = x / Rational(g, 1);
  y = y / Rational(g, 1);
  if (x.sign() < 0 || (x.is_zero() && y.sign() < 0)) {
    x = -x;
    y = -y;
  }
  Direction d;
  d.exact = std::array<Rational, 2>{x, y};
  d.multiplicity = mult;
  return d;
}

}  // namespace

std::string Direction::equation() const {
  if (exact) {
    const Rational& x = (*exact)[0];
    const Rational& y = (*exact)[1];
    if (x.is_zero()) return "x = 0";
    if (y.is_zero()) return "y = 0";
    return "x = " + term(x / y, "y");
  }
  std::ostringstream os;
  os << "x = t y, t in [" << slope->lo.decimal(12) << ", " << slope->hi.decimal(12) << "]";
  return os.str();
}

std::array<Rational, 4> plane_cubic(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2) {
  return {e1.det(), inner(e1.cof(), e2), inner(e1, e2.cof()), e2.det()};
}

Rational binary_cubic_discriminant(const std::array<Rational, 4>& c) {
  const Rational &a = c[0], &b = c[1], &cc = c[2], &d = c[3];
  return b * b * cc * cc - Rational(4) * a * pow(cc, 3) - Rational(4) * pow(b, 3) * d - Rational(27) * a * a * d * d +
         Rational(18) * a * b * cc * d;
}

PlaneClassification classify_plane(const SymStrain<Rational>& e1, const SymStrain<Rational>& e2,
                                   const Rational& width) {
  if (!e1.trace().is_zero() || !e2.trace().is_zero())
    throw Error(ErrorCode::NotTraceZero, "plane basis must be trace free");
  if (rank(Matrix<Rational>{{e1.v.begin(), e1.v.end()}, {e2.v.begin(), e2.v.end()}}) < 2)
    throw Error(ErrorCode::DependentBasis, "plane basis vectors are linearly dependent");

  PlaneClassification out;
  out.cubic = plane_cubic(e1, e2);
  const auto& c = out.cubic;
  out.discriminant = binary_cubic_discriminant(c);
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero()) return out;

  // Projective root (1:0) has multiplicity equal to the power of y dividing f.
  int at_infinity = 0;
  while (at_infinity < 3 && c[static_cast<size_t>(at_infinity)].is_zero()) ++at_infinity;
  if (at_infinity > 0) out.witnesses.push_back(rational_direction(Rational(1), Rational(0), at_infinity));

  UPoly g({c[3], c[2], c[1], c[0]});
  if (g.degree() > 0) {
    Rational b = cauchy_bound(g);
    for (auto r : isolate_cubic_roots(g, Interval(-b, b))) {
      if (r.exact) {
        out.witnesses.push_back(rational_direction(*r.exact, Rational(1), r.multiplicity));
      } else {
        r.refine(width);
        Direction d;
        d.slope = r.interval;
        d.multiplicity = r.multiplicity;
        out.witnesses.push_back(d);
      }
    }
  }

  const int sgn = out.discriminant.sign();
  if (sgn > 0) {
    out.kind = PlaneKind::ThreeLines;
    out.form = CanonicalForm::XYXPlusY;
  } else if (sgn < 0) {
    out.kind = PlaneKind::OneLine;
    out.form = CanonicalForm::XSumOfSquares;
  } else {
    // repeated root; the Hessian covariant vanishes exactly for a triple root
    bool triple = (c[1] * c[1] - Rational(3) * c[0] * c[2]).is_zero() &&
                  (c[1] * c[2] - Rational(9) * c[0] * c[3]).is_zero() &&
                  (c[2] * c[2] - Rational(3) * c[1] * c[3]).is_zero();
    out.kind = triple ? PlaneKind::OneLine : PlaneKind::TwoLines;
    out.form = triple ? CanonicalForm::XCubed : CanonicalForm::XYSquared;
  }
  return out;
}

PlaneClassification classify_plane_through(const SymStrain<Rational>& base, const SymStrain<Rational>& a,
                                           const SymStrain<Rational>& b, const Rational& width) {
  return classify_plane(a - base, b - base, width);
}

}  // namespace martensite
