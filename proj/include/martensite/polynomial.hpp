#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "martensite/rational.hpp"
#include "martensite/upoly.hpp"

namespace martensite {

/// Index into a process-wide table of variable names. Interning keeps
/// exponent vectors comparable across independently built polynomials.
using VarId = std::uint32_t;

VarId intern_variable(std::string_view name);
const std::string& variable_name(VarId id);

/// Exponent vector indexed by VarId, trailing zeros trimmed.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the rationals. Terms with a zero
/// coefficient are never stored, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial var(std::string_view name);
  static Polynomial var(VarId id);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws Unsupported unless the polynomial is constant.
  Rational constant_value() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree_in(VarId v) const;
  unsigned total_degree() const;
  std::vector<VarId> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Replaces every occurrence of `v` by `value`.
  Polynomial substitute(VarId v, const Polynomial& value) const;
  /// Evaluates with the listed variables fixed; unlisted variables must not occur.
  Rational evaluate(const std::map<VarId, Rational>& values) const;
  /// Partial evaluation: listed variables replaced, the rest kept.
  Polynomial partial_evaluate(const std::map<VarId, Rational>& values) const;
  /// Requires `v` to be the only variable present.
  UPoly to_univariate(VarId v) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Exact determinant of a 3x3 polynomial matrix by the rule of Sarrus.
Polynomial poly_det3(const std::array<std::array<Polynomial, 3>, 3>& m);

}  // namespace martensite

namespace martensite {
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
}  // namespace martensite
