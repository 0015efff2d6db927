#include "martensite/roots.hpp"

#include <algorithm>

#include "martensite/error.hpp"

namespace martensite {

namespace {

// Rational roots p/q of an integer polynomial have q | leading coefficient, so
// they lie on the grid (1/a_n)Z. Once an isolating interval is narrower than
// that spacing it holds at most one grid point, which is tested exactly.
std::optional<Rational> rational_root_in(const UPoly& prim, const Interval& iv) {
  Rational step(mpz_class(1), prim.leading().numerator());
  mpz_class k = (iv.lo / step).floor();
  for (int d = 0; d <= 2; ++d) {
    Rational cand = Rational(mpz_class(k + d), mpz_class(1)) * step;
    if (cand <= iv.lo || cand >= iv.hi) continue;
    if (prim.eval(cand).is_zero()) return cand;
  }
  return std::nullopt;
}

UPoly deflate(const UPoly& p, const Rational& r) {
  return divmod(p, UPoly({-r, Rational(1)})).first;
}

}  // namespace

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sturm_variations(const std::vector<UPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  UPoly a = p.monic();
  UPoly b = a.derivative();
  UPoly c = gcd(a, b);
  UPoly w = divmod(a, c).first;
  UPoly y = divmod(b, c).first;
  UPoly z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    out.push_back(g);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
  }
  return out;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m(0);
  Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs() / lead);
  return m + Rational(1);
}

Rational default_report_width() { return Rational(1, 1000000000); }

void RootInterval::refine(const Rational& width) {
  if (exact) return;
  int slo = simple.sign_at(interval.lo);
  while (interval.width() > width) {
    Rational mid = interval.midpoint();
    int sm = simple.sign_at(mid);
    if (sm == 0) {
      exact = mid;
      interval = Interval(mid);
      return;
    }
    if (sm == slo) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
}

std::vector<RootInterval> isolate_cubic_roots(const UPoly& p, const Interval& window, bool open) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  if (p.degree() > 3) throw Error(ErrorCode::DegreeTooHigh, "root isolation is limited to degree 3, got " + p.str());

  std::vector<RootInterval> out;
  auto factors = squarefree_decomposition(p);
  for (size_t idx = 0; idx < factors.size(); ++idx) {
    const int mult = static_cast<int>(idx) + 1;
    UPoly q = factors[idx].primitive();
    if (q.degree() <= 0) continue;

    auto emit_exact = [&](const Rational& r) {
      if (window.contains(r) && !(open && (r == window.lo || r == window.hi)))
        out.push_back({Interval(r), mult, r, UPoly({-r, Rational(1)})});
      q = deflate(q, r).primitive();
    };

    if (q.eval(window.lo).is_zero()) emit_exact(window.lo);
    if (!window.is_point() && q.degree() > 0 && q.eval(window.hi).is_zero()) emit_exact(window.hi);
    if (window.is_point() || q.degree() <= 0) continue;

    // Work list of open intervals with non-root endpoints and their root counts.
    auto chain = sturm_chain(q);
    struct Cell {
      Rational lo, hi;
      int count;
    };
    std::vector<Cell> work;
    int total = sturm_variations(chain, window.lo) - sturm_variations(chain, window.hi);
    if (total > 0) work.push_back({window.lo, window.hi, total});
    std::vector<Cell> isolated;
    while (!work.empty()) {
      Cell c = work.back();
      work.pop_back();
      if (c.count == 1) {
        isolated.push_back(c);
        continue;
      }
      Rational mid = (c.lo + c.hi) / Rational(2);
      if (q.eval(mid).is_zero()) {
        emit_exact(mid);
        chain = sturm_chain(q);
        --c.count;
        if (c.count == 0 || q.degree() <= 0) continue;
      }
      int vm = sturm_variations(chain, mid);
      int left = sturm_variations(chain, c.lo) - vm;
      int right = sturm_variations(chain, c.hi);
      right = vm - right;
      if (left > 0) work.push_back({c.lo, mid, left});
      if (right > 0) work.push_back({mid, c.hi, right});
    }

    // Each isolated cell may still hold a rational root: narrow it below the
    // grid spacing of candidate denominators and test.
    for (const auto& c : isolated) {
      RootInterval ri{Interval(c.lo, c.hi), mult, std::nullopt, q};
      Rational grid(mpz_class(1), q.leading().numerator());
      ri.refine(grid / Rational(2));
      if (!ri.exact) {
        if (auto r = rational_root_in(q, ri.interval)) {
          ri.exact = *r;
          ri.interval = Interval(*r);
        }
      }
      if (ri.exact) ri.simple = UPoly({-*ri.exact, Rational(1)});
      out.push_back(std::move(ri));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.interval.lo < b.interval.lo; });
  return out;
}

}  // namespace martensite
