#pragma once
// Divided-power algebra of SL2^l over F_p in the PBW basis
// F^(a) [H;b] E^(c) (exponent vectors indexed by the SL2 factors).
// Cross-factor generators commute, so straightening reduces to the
// single-factor exchange rules.

#include <array>
#include <map>
#include <vector>

#include "frobsplit/weights.hpp"

namespace frob {

struct PBWMono {
  std::vector<int> a, b, c;  // F-, H-, E-exponents per factor

  explicit PBWMono(int rank) : a(rank, 0), b(rank, 0), c(rank, 0) {}
  PBWMono(std::vector<int> fa, std::vector<int> hb, std::vector<int> ec)
      : a(std::move(fa)), b(std::move(hb)), c(std::move(ec)) {}

  int rank() const { return int(a.size()); }
  bool is_one() const;
  auto operator<=>(const PBWMono&) const = default;
};

struct DistElem {
  RootDatum d;
  std::map<PBWMono, int> t;  // monomial -> nonzero coefficient

  explicit DistElem(const RootDatum& datum) : d(datum) {}
  bool is_zero() const { return t.empty(); }
  bool operator==(const DistElem& o) const { return d == o.d && t == o.t; }
};

// Guard against runaway exponents; exceeding it throws std::overflow_error.
int& dist_exp_limit();

DistElem dist_zero(const RootDatum& d);
DistElem dist_one(const RootDatum& d);
DistElem dist_from_mono(const RootDatum& d, const PBWMono& m, int coef = 1);
DistElem gen_E(const RootDatum& d, int i, int n);
DistElem gen_F(const RootDatum& d, int i, int n);
DistElem gen_H(const RootDatum& d, int i, int n);  // binom(H_i; n)

DistElem dist_add(const DistElem& x, const DistElem& y);
DistElem dist_sub(const DistElem& x, const DistElem& y);
DistElem dist_scale(const DistElem& x, int s);
DistElem multiply(const DistElem& x, const DistElem& y);

// weight of a PBW monomial under the adjoint torus action
Weight mono_weight(const PBWMono& m);

int counit(const DistElem& x);

// Dist(Fr): divides all exponents by p on monomials where possible,
// kills the rest.
DistElem dist_fr(const DistElem& x);

enum class Support { Uplus, Uminus, Torus, Borel, BorelPlus };
bool has_support(const DistElem& x, Support s);
// 'Fr on the named subalgebra: multiplies all exponents by p.
DistElem fr_prime(const DistElem& x, Support s);

// mu0 = prod_i sum_{j<p} (-1)^j [H_i; j], the weight-projector onto
// p-divisible weights; idempotent, central in the p-divisible part.
DistElem mu0(const RootDatum& d);

// Frobenius splitting homomorphism: F^(a)[H;b]E^(c) -> F^(pa)[H;pb]E^(pc) mu0.
DistElem phi(const DistElem& x);

DistElem antipode(const DistElem& x);
// anti-automorphism fixing E, F and negating H
DistElem tau(const DistElem& x);
// anti-automorphism exchanging E and F and fixing Dist(T)
DistElem omega(const DistElem& x);

using TensorElem = std::map<std::pair<PBWMono, PBWMono>, int>;
TensorElem coproduct(const DistElem& x);

// ad(x)(y) = sum x_(1) y S(x_(2))
DistElem adjoint(const DistElem& x, const DistElem& y);

// character chi_lambda on Dist(T) (throws if x is not supported on the torus)
int chi(const Weight& lam, const DistElem& x);

// E+ = prod_i E_i^((p-1))
DistElem e_plus(const RootDatum& d);

// Classification of the terms of E+ * F_i^((rp)) into the three buckets of
// the key commutation lemma: (1) the leading F_i^((rp)) E+ term with
// coefficient 1, (2) terms F^(s)(...) with p not dividing s, (3) terms
// F^(sp) z (...) with z in Dist(T_1) killed by chi_{2(p-1)rho}.
struct Lemma37Report {
  bool ok = false;
  bool leading_term_ok = false;
  int bucket1 = 0, bucket2 = 0, bucket3 = 0;
  int bucket3_groups = 0;
  std::string detail;
};
Lemma37Report lemma37_check(const RootDatum& d, int i, int r);

}  // namespace frob
