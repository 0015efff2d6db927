#include "martensite/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "martensite/error.hpp"

namespace martensite {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view s) {
  const std::string orig(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_part = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool exp_neg = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_neg = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw Error(ErrorCode::ParseError, "bad exponent in '" + orig + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_neg) exponent = -exponent;
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::ParseError, "bad decimal '" + orig + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number '" + orig + "'");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long shift = exponent - frac_len;
  if (shift >= 0) return Rational(num * pow10(static_cast<unsigned long>(shift)), mpz_class(1));
  return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational n = parse_decimal(text.substr(0, slash));
    Rational d = parse_decimal(text.substr(slash + 1));
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return n / d;
  }
  return parse_decimal(text);
}

long double Rational::to_long_double() const {
  // Enough for reporting; exact decisions never go through here.
  mpf_class f(q_, 128);
  long exp = 0;
  double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
  return static_cast<long double>(mant) * std::pow(2.0L, static_cast<long double>(exp));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::decimal(int digits) const {
  mpz_class scale = pow10(static_cast<unsigned long>(digits));
  // round half away from zero
  mpq_class scaled = ::abs(q_) * scale + mpq_class(1, 2);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  if (sgn(q_) < 0 && n != 0) s.insert(0, "-");
  return s;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace martensite
