#include "martensite/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "martensite/error.hpp"

namespace martensite {

namespace {

struct VariableTable {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

VariableTable& table() {
  static VariableTable t;
  return t;
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mul_monomial(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

VarId intern_variable(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  std::string key(name);
  if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
  auto id = static_cast<VarId>(t.names.size());
  t.names.push_back(key);
  t.ids.emplace(key, id);
  return id;
}

const std::string& variable_name(VarId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.at(id);
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::var(std::string_view name) { return var(intern_variable(name)); }

Polynomial Polynomial::var(VarId id) {
  Polynomial p;
  Monomial m(id + 1, 0);
  m[id] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::Unsupported, "polynomial is not constant: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Polynomial::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    if (v < m.size()) d = std::max(d, m[v]);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0 && std::find(out.begin(), out.end(), i) == out.end()) out.push_back(static_cast<VarId>(i));
  std::sort(out.begin(), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mul_monomial(ma, mb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::substitute(VarId v, const Polynomial& value) const {
  Polynomial out;
  std::vector<Polynomial> powers{Polynomial(1)};
  for (const auto& [m, c] : terms_) {
    unsigned e = v < m.size() ? m[v] : 0;
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    if (v < rest.size()) rest[v] = 0;
    trim(rest);
    Polynomial term;
    term.terms_.emplace(std::move(rest), c);
    out += term * powers[e];
  }
  return out;
}

Polynomial Polynomial::partial_evaluate(const std::map<VarId, Rational>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest = m;
    for (size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0) continue;
      auto it = values.find(static_cast<VarId>(i));
      if (it == values.end()) continue;
      coef *= pow(it->second, rest[i]);
      rest[i] = 0;
    }
    trim(rest);
    out.add_term(rest, coef);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& values) const {
  return partial_evaluate(values).constant_value();
}

UPoly Polynomial::to_univariate(VarId v) const {
  std::vector<Rational> coeffs(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i)
      if (i != v && m[i] != 0)
        throw Error(ErrorCode::Unsupported, "polynomial is not univariate in " + variable_name(v));
    coeffs[v < m.size() ? m[v] : 0] = c;
  }
  return UPoly(std::move(coeffs));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then reverse lexicographic on exponents.
  std::vector<std::pair<Monomial, Rational>> order(terms_.rbegin(), terms_.rend());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (auto e : a.first) da += e;
    for (auto e : b.first) db += e;
    return da > db;
  });
  for (const auto& [m, c] : order) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    bool wrote = false;
    if (m.empty() || !unit) {
      os << mag;
      wrote = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << variable_name(static_cast<VarId>(i));
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(1), b = p;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial poly_det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
  return m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1] -
         m[0][2] * m[1][1] * m[2][0] - m[0][0] * m[1][2] * m[2][1] - m[0][1] * m[1][0] * m[2][2];
}

}  // namespace martensite
