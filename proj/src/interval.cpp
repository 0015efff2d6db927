#include "martensite/interval.hpp"

#include <array>
#include <ostream>

#include "martensite/error.hpp"

namespace martensite {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw Error(ErrorCode::InvalidParams, "interval with lo > hi");
}

int Interval::certain_sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  return 0;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational nlo = lo - o.hi;
  hi -= o.lo;
  lo = std::move(nlo);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (is_point() && o.is_point()) {
    lo *= o.lo;
    hi = lo;
    return *this;
  }
  std::array<Rational, 4> p{lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  Rational nlo = *mn, nhi = *mx;
  lo = std::move(nlo);
  hi = std::move(nhi);
  return *this;
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

}  // namespace martensite
