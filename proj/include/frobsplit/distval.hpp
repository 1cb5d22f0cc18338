#pragma once
// Independent semi-normal representation of rank-1 divided-power elements:
// terms F^(A) h(H) E^(C) with the torus part h stored by its character
// values chi_lam(h) on an integer window. Pointwise products replace basis
// straightening of torus parts, which keeps large-exponent products cheap;
// two torus parts of binomial degree <= d agree iff their values agree on
// any d+1 consecutive integers.

#include <map>
#include <utility>
#include <vector>

#include "frobsplit/hyperalg.hpp"

namespace frob {

struct ValElem {
  int p = 2;
  long long lo = 0, hi = -1;  // value window [lo, hi]
  // (F-exponent, E-exponent) -> chi values of the torus part over the window
  std::map<std::pair<int, int>, std::vector<int>> t;
};

// Convert a rank-1 element to value form on [lo, hi]; tab must cover
// rows [lo, hi] up to the largest H-exponent in x.
ValElem val_from_dist(const DistElem& x, long long lo, long long hi, const BinomTable& tab);

// Product with output window [0, dcap]; input windows must be wide enough
// to cover every shifted evaluation (throws std::out_of_range otherwise).
ValElem val_mul(const ValElem& x, const ValElem& y, long long dcap, const BinomTable& tab);

// Equality of value forms on the window [lo, hi] (missing keys are zero).
bool val_equal(const ValElem& x, const ValElem& y, long long lo, long long hi);

}  // namespace frob
