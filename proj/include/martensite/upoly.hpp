#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "martensite/interval.hpp"
#include "martensite/rational.hpp"

namespace martensite {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs) : UPoly(std::vector<Rational>(coeffs)) {}
  static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  /// Horner evaluation over an interval argument; encloses the range.
  Interval eval(const Interval& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;
  /// p(a + b x)
  UPoly compose_affine(const Rational& a, const Rational& b) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
  UPoly g, s, t;  // g = s*a + t*b, g monic
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace martensite
