#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "martensite/interval.hpp"
#include "martensite/roots.hpp"
#include "martensite/upoly.hpp"

namespace martensite {

/// Q(theta) for a real irrational theta of degree 2 or 3, given by its minimal
/// polynomial and an isolating interval. Since the degree is at most 3, the
/// defining polynomial is irreducible as soon as it has no rational roots.
class NumberField {
 public:
  /// `f` must have exactly one root in `iv`, that root must be irrational.
  /// Rational roots elsewhere are divided out.
  NumberField(const UPoly& f, const Interval& iv);

  const UPoly& defining() const { return f_; }
  int degree() const { return f_.degree(); }
  /// Isolating interval of width at most `width`.
  Interval isolating(const Rational& width) const;
  /// Same defining polynomial and same real root.
  bool same_as(const NumberField& o) const;

 private:
  UPoly f_;
  mutable std::mutex mu_;
  mutable RootInterval root_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q (null field) or of a NumberField, stored as a residue
/// polynomial in the generator of degree below the field degree.
class AlgebraicScalar {
 public:
  AlgebraicScalar() = default;
  AlgebraicScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  AlgebraicScalar(long v) : AlgebraicScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  AlgebraicScalar(int v) : AlgebraicScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  static AlgebraicScalar generator(const FieldPtr& field);
  static AlgebraicScalar from_residue(const FieldPtr& field, const UPoly& rep);
  /// The root described by `root`; rational roots stay rational.
  static AlgebraicScalar root_of(const RootInterval& root);

  const FieldPtr& field() const { return field_; }
  const UPoly& residue() const { return rep_; }
  bool is_rational() const { return !field_ || rep_.degree() <= 0; }
  /// Throws Unsupported if the value is irrational.
  Rational rational_value() const;

  bool is_zero() const { return rep_.is_zero(); }
  int sign() const;
  Interval enclosure(const Rational& width) const;
  double approx() const;
  AlgebraicScalar inverse() const;
  /// Primitive integer minimal polynomial over Q.
  UPoly minimal_polynomial() const;

  AlgebraicScalar& operator+=(const AlgebraicScalar& o);
  AlgebraicScalar& operator-=(const AlgebraicScalar& o);
  AlgebraicScalar& operator*=(const AlgebraicScalar& o);
  AlgebraicScalar& operator/=(const AlgebraicScalar& o) { return *this *= o.inverse(); }

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
  friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
  friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
  friend AlgebraicScalar operator-(const AlgebraicScalar& a);
  /// Value equality; works across different fields.
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);

  /// Enclosure rendered as "[lo, hi]" plus a decimal with `digits` places.
  std::string str(const Rational& width, int digits) const;

 private:
  AlgebraicScalar(FieldPtr f, UPoly rep);
  const FieldPtr& common_field(const AlgebraicScalar& o) const;
  FieldPtr field_;
  UPoly rep_;
};

/// Exact value comparison of real algebraic numbers possibly from different fields.
bool algebraic_equal(const AlgebraicScalar& a, const AlgebraicScalar& b);
/// -1, 0, +1 comparing a with b.
int compare(const AlgebraicScalar& a, const AlgebraicScalar& b);

/// Tries to find `root` (of `p`) inside field K among `candidates`. A candidate
/// matches when p vanishes on it exactly and its value lies in the root's
/// isolating interval.
std::optional<AlgebraicScalar> match_root(const UPoly& p, const RootInterval& root,
                                          const std::vector<AlgebraicScalar>& candidates);

/// p evaluated at an algebraic argument.
AlgebraicScalar eval(const UPoly& p, const AlgebraicScalar& x);

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const AlgebraicScalar& a) { return a.is_zero(); }

}  // namespace martensite
