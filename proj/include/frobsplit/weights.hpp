#pragma once
// Weight lattice of SL2^l: weights are integer vectors (coordinates in the
// fundamental-weight basis, one per SL2 factor).

#include <vector>

#include "frobsplit/fparith.hpp"

namespace frob {

using Weight = std::vector<long long>;

struct RootDatum {
  int rank = 1;  // number of SL2 factors
  int p = 2;
  RootDatum(int l, int prime);
  bool operator==(const RootDatum& o) const { return rank == o.rank && p == o.p; }
};

bool is_dominant(const Weight& w);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(const Weight& a, long long s);
Weight rho(const RootDatum& d);            // (1,...,1)
Weight steinberg_weight(const RootDatum& d);   // (p-1)rho
Weight two_p_minus_one_rho(const RootDatum& d);  // 2(p-1)rho
// lambda = lambda0 + p*lambda1 with 0 <= lambda0_i < p.
std::pair<Weight, Weight> decompose_p(const Weight& w, int p);
bool is_p_divisible(const Weight& w, int p);

// chi_lambda(binom(H_i; n)) = binom(lambda_i, n); extended multiplicatively
// over the H-part of a PBW monomial (see hyperalg for the full character).
int chi_binom(const Weight& w, int i, long long n, int p);

// Weyl group of SL2^l: sign flips per coordinate.
struct WeylElement {
  std::vector<bool> flip;  // flip[i]: apply the simple reflection in factor i
};
Weight weyl_apply(const WeylElement& w, const Weight& lam);
// dot action: w . lambda = w(lambda + rho) - rho
Weight weyl_dot(const WeylElement& w, const Weight& lam);

}  // namespace frob
