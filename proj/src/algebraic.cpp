#include "martensite/algebraic.hpp"

#include <array>
#include <ostream>
#include <sstream>

#include "martensite/error.hpp"

namespace martensite {

namespace {

const Rational& initial_width() {
  static const Rational w = pow(Rational(1, 2), 64);
  return w;
}

UPoly reduce(const UPoly& p, const FieldPtr& f) {
  if (!f) return p;
  return divmod(p, f->defining()).second;
}

// Characteristic polynomial of a small square matrix (Faddeev-LeVerrier).
UPoly charpoly(const std::vector<std::vector<Rational>>& a) {
  const size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (size_t k = 1; k <= n; ++k) {
    // m <- a*m + c[n-k+1] * I
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Rational tr(0);
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return UPoly(std::move(c));
}

}  // namespace

NumberField::NumberField(const UPoly& f, const Interval& iv) {
  UPoly g = f.primitive();
  for (const auto& r : isolate_cubic_roots(g, Interval(-cauchy_bound(g), cauchy_bound(g)))) {
    if (!r.exact) continue;
    g = divmod(g, UPoly({-*r.exact, Rational(1)})).first.primitive();
  }
  if (g.degree() < 2) throw Error(ErrorCode::Unsupported, "number field generator is rational");
  g = divmod(g, gcd(g, g.derivative())).first.primitive();
  auto in_window = isolate_cubic_roots(g, iv);
  if (in_window.size() != 1 || in_window.front().exact)
    throw Error(ErrorCode::Unsupported, "interval does not isolate one irrational root of " + g.str());
  f_ = g;
  root_ = in_window.front();
  root_.refine(initial_width());
}

Interval NumberField::isolating(const Rational& width) const {
  std::lock_guard lock(mu_);
  root_.refine(width);
  return root_.interval;
}

bool NumberField::same_as(const NumberField& o) const {
  if (this == &o) return true;
  if (!(f_ == o.f_)) return false;
  Interval a = isolating(initial_width()), b = o.isolating(initial_width());
  return a.intersects(b);
}

AlgebraicScalar::AlgebraicScalar(const Rational& r) : rep_(UPoly::constant(r)) {}
AlgebraicScalar::AlgebraicScalar(FieldPtr f, UPoly rep) : field_(std::move(f)), rep_(std::move(rep)) {}

AlgebraicScalar AlgebraicScalar::generator(const FieldPtr& field) { return {field, UPoly::x()}; }

AlgebraicScalar AlgebraicScalar::from_residue(const FieldPtr& field, const UPoly& rep) {
  return {field, reduce(rep, field)};
}

AlgebraicScalar AlgebraicScalar::root_of(const RootInterval& root) {
  if (root.exact) return {*root.exact};
  return generator(std::make_shared<const NumberField>(root.simple, root.interval));
}

Rational AlgebraicScalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::Unsupported, "value is irrational");
  return rep_.coeff(0);
}

const FieldPtr& AlgebraicScalar::common_field(const AlgebraicScalar& o) const {
  if (o.is_rational()) return field_;
  if (is_rational()) return o.field_;
  if (field_ == o.field_ || field_->same_as(*o.field_)) return field_;
  throw Error(ErrorCode::MixedField,
              "operands live in different fields: " + field_->defining().str() + " vs " + o.field_->defining().str());
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
  field_ = common_field(o);
  rep_ += o.rep_;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
  field_ = common_field(o);
  rep_ -= o.rep_;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
  field_ = common_field(o);
  rep_ = reduce(rep_ * o.rep_, field_);
  return *this;
}

AlgebraicScalar operator-(const AlgebraicScalar& a) { return {a.field_, -a.rep_}; }

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return {field_, UPoly::constant(rep_.coeff(0).inverse())};
  // The defining polynomial is irreducible, so gcd(rep, f) = 1.
  auto eg = extended_gcd(rep_, field_->defining());
  return {field_, reduce(eg.s, field_)};
}

Interval AlgebraicScalar::enclosure(const Rational& width) const {
  if (is_rational()) return Interval(rep_.coeff(0));
  Rational w = initial_width();
  for (;;) {
    Interval v = rep_.eval(field_->isolating(w));
    if (v.width() <= width) return v;
    w = w * pow(Rational(1, 2), 16);
  }
}

int AlgebraicScalar::sign() const {
  if (is_rational()) return rep_.coeff(0).sign();
  // Nonzero residue means nonzero value (irreducible defining polynomial), so
  // refinement terminates.
  Rational w = initial_width();
  for (;;) {
    Interval v = rep_.eval(field_->isolating(w));
    if (int s = v.certain_sign(); s != 0) return s;
    w = w * pow(Rational(1, 2), 16);
  }
}

double AlgebraicScalar::approx() const { return enclosure(pow(Rational(1, 2), 60)).midpoint().to_double(); }

UPoly AlgebraicScalar::minimal_polynomial() const {
  if (is_rational()) return UPoly({-rep_.coeff(0), Rational(1)}).primitive();
  const int n = field_->degree();
  // Matrix of multiplication by this element on the basis 1, theta, theta^2.
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  UPoly basis = UPoly::constant(1);
  for (int j = 0; j < n; ++j) {
    UPoly col = reduce(rep_ * basis, field_);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
    basis = basis * UPoly::x();
  }
  UPoly cp = charpoly(m);
  return divmod(cp, gcd(cp, cp.derivative())).first.primitive();
}

bool algebraic_equal(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
  if (a.is_rational() != b.is_rational()) return false;
  if (a.field() == b.field() || a.field()->same_as(*b.field())) return (a - b).is_zero();
  UPoly ma = a.minimal_polynomial(), mb = b.minimal_polynomial();
  if (!(ma == mb)) return false;
  // Same minimal polynomial: equal iff both values fall into the same isolating
  // interval of that polynomial.
  auto roots = isolate_cubic_roots(ma, Interval(-cauchy_bound(ma), cauchy_bound(ma)));
  auto which = [&](const AlgebraicScalar& v) {
    Rational w = pow(Rational(1, 2), 32);
    for (;;) {
      Interval e = v.enclosure(w);
      int hit = -1, hits = 0;
      for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].interval.intersects(e)) {
          hit = static_cast<int>(i);
          ++hits;
        }
      if (hits == 1) return hit;
      w = w * pow(Rational(1, 2), 16);
    }
  };
  return which(a) == which(b);
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) { return algebraic_equal(a, b); }

int compare(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (algebraic_equal(a, b)) return 0;
  Rational w = pow(Rational(1, 2), 32);
  for (;;) {
    Interval ea = a.enclosure(w), eb = b.enclosure(w);
    if (ea.hi < eb.lo) return -1;
    if (eb.hi < ea.lo) return 1;
    w = w * pow(Rational(1, 2), 16);
  }
}

std::optional<AlgebraicScalar> match_root(const UPoly& p, const RootInterval& root,
                                          const std::vector<AlgebraicScalar>& candidates) {
  for (const auto& c : candidates) {
    if (!eval(p, c).is_zero()) continue;
    if (root.exact) {
      if (c.is_rational() && c.rational_value() == *root.exact) return c;
      continue;
    }
    // The interval holds only this root of p and its endpoints are not roots,
    // so a root of p inside it is the root.
    Rational w = root.interval.width() / Rational(4);
    for (;;) {
      Interval e = c.enclosure(w);
      if (root.interval.contains(e)) return c;
      if (!root.interval.intersects(e)) break;
      w = w / Rational(1 << 16);
    }
  }
  return std::nullopt;
}

AlgebraicScalar eval(const UPoly& p, const AlgebraicScalar& x) {
  AlgebraicScalar acc(0);
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += AlgebraicScalar(p.coeff(i));
  }
  return acc;
}

std::string AlgebraicScalar::str(const Rational& width, int digits) const {
  std::ostringstream os;
  if (is_rational()) {
    os << rep_.coeff(0).str() << " ~ " << rep_.coeff(0).decimal(digits);
    return os.str();
  }
  Interval e = enclosure(width);
  os << "[" << e.lo.str() << ", " << e.hi.str() << "] ~ " << e.midpoint().decimal(digits);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a) { return os << a.str(Rational(1, 1000000000), 9); }

}  // namespace martensite
