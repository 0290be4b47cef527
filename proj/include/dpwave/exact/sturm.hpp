#pragma once

#include "dpwave/exact/poly.hpp"

// Sturm sequences over Q: exact real-root counting and isolation.

namespace dpwave::exact {

struct SturmChain {
  std::vector<QPoly> seq;  // p, p', then negated remainders
};

SturmChain sturm_chain(const QPoly& p);

// Sign variations of the chain evaluated at x.
int sign_variations(const SturmChain& chain, const Rat& x);

// Number of distinct real roots of p in the open interval (lo, hi).
// Rational roots at the endpoints are deflated first (exact), which
// realizes the "perturb by an exact nudge" contract; the deflation is
// reported through *endpoint_deflations when non-null.
int sturm_count(const QPoly& p, const Rat& lo, const Rat& hi, int* endpoint_deflations = nullptr);

// Exact Cauchy bound: all real roots lie in (-B, B).
Rat cauchy_bound(const QPoly& p);

// Distinct real roots on the whole line.
int sturm_count_all(const QPoly& p);

// Shrinks [lo, hi] (which must contain exactly one root) by bisection
// until hi - lo <= width; returns the rational enclosure.
struct RootBox {
  Rat lo, hi;
};
RootBox isolate_root(const QPoly& p, Rat lo, Rat hi, const Rat& width);

}  // namespace dpwave::exact
