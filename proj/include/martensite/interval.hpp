#pragma once

#include <algorithm>
#include <iosfwd>

#include "martensite/rational.hpp"

namespace martensite {

/// Closed interval [lo, hi] with rational endpoints; arithmetic is inclusion-isotone.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);
  explicit Interval(const Rational& point) : lo(point), hi(point) {}

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// +1 or -1 when the whole interval is strictly signed, 0 otherwise.
  int certain_sign() const;
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }

  Interval& operator+=(const Interval& o) { lo += o.lo; hi += o.hi; return *this; }
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Interval hull(const Interval& a, const Interval& b);
std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace martensite
