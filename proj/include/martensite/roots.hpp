#pragma once

#include <optional>
#include <vector>

#include "martensite/interval.hpp"
#include "martensite/upoly.hpp"

namespace martensite {

/// One distinct real root. `interval` contains exactly that root of `simple`,
/// a polynomial in which the root is simple; when `exact` is set the interval is
/// the point itself.
struct RootInterval {
  Interval interval;
  int multiplicity = 1;
  std::optional<Rational> exact;
  UPoly simple;

  bool is_rational() const { return exact.has_value(); }
  /// Bisects (exact signs) until width <= `width`; may discover a rational root.
  void refine(const Rational& width);
};

/// Sign variations of the Sturm chain of `p` at `x`.
std::vector<UPoly> sturm_chain(const UPoly& p);
int sturm_variations(const std::vector<UPoly>& chain, const Rational& x);

/// Yun factorisation: p = lc * prod_i f_i^i with each f_i squarefree and
/// pairwise coprime. Entry i-1 holds f_i (possibly constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Bound B with every real root in [-B, B].
Rational cauchy_bound(const UPoly& p);

/// Isolates every distinct real root of p inside the closed window (or the open
/// window when `open`), sorted ascending. Degree is capped at 3.
std::vector<RootInterval> isolate_cubic_roots(const UPoly& p, const Interval& window, bool open = false);

/// Refinement width used when reporting.
Rational default_report_width();

}  // namespace martensite
