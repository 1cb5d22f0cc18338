#pragma once
// Finite-dimensional weight modules for SL2^l (and its Borel) over F_p.
// A module stores its basis weights and the matrices of the divided powers
// E_i^(p^k), F_i^(p^k); all other divided powers are reconstructed from the
// base-p digits of the exponent.

#include <map>
#include <random>
#include <vector>

#include "frobsplit/hyperalg.hpp"
#include "frobsplit/linalg.hpp"

namespace frob {

struct WtModule {
  RootDatum d;
  bool is_g = true;  // false: only the Borel (F, H) structure is present
  std::vector<Weight> wts;
  int levels = 0;  // stored digit levels k = 0..levels-1
  // E[i][k] / F[i][k]: matrix of E_i^(p^k) / F_i^(p^k)
  std::vector<std::vector<FpMat>> E, F;

  explicit WtModule(const RootDatum& datum) : d(datum) {}
  int dim() const { return int(wts.size()); }
};

// constructors
WtModule module_trivial(const RootDatum& d);
WtModule module_line(const RootDatum& d, const Weight& lam);  // 1-dim B-module
WtModule module_delta(const RootDatum& d, const Weight& lam);   // Weyl module
WtModule module_nabla(const RootDatum& d, const Weight& lam);   // dual Weyl (induced)
WtModule module_simple(const RootDatum& d, const Weight& lam);  // image of Delta -> nabla
WtModule module_steinberg(const RootDatum& d);                  // nabla((p-1)rho)
// simple module assembled as the twisted tensor product over p-digits
// (independent construction, used to cross-check module_simple)
WtModule module_simple_steinberg_product(const RootDatum& d, const Weight& lam);
// indecomposable two-dimensional B-module with weights 0 and -2e_0
WtModule module_b_two_dim(const RootDatum& d);

// structure maps
WtModule restrict_to_b(const WtModule& m);
WtModule direct_sum(const WtModule& m, const WtModule& n);
WtModule tensor(const WtModule& m, const WtModule& n);
WtModule frobenius_twist(const WtModule& m);
// Frobenius contraction: p-divisible weight block, weights divided by p,
// divided powers shifted one digit down.
WtModule contract_module(const WtModule& m);
WtModule dual_module(const WtModule& m);  // contragredient via the antipode
// submodule spanned by the columns of basis (must be stable)
WtModule submodule(const WtModule& m, const FpMat& basis);

enum class Gen { E, F };
// matrix of E_i^(r) or F_i^(r) for arbitrary r >= 0
FpMat divided_power_action(const WtModule& m, Gen g, int i, long long r);
// matrix of an arbitrary element
FpMat act(const WtModule& m, const DistElem& x);

// unipotent / torus group elements
struct GroupLetter {
  int kind;  // 0: x_{alpha_i}(z), 1: x_{-alpha_i}(z), 2: alpha_i^vee(z)
  int i = 0;
  int z = 1;       // scalar parameter
  bool formal = false;  // use the formal variable instead of z
};
FpMat group_word_action(const WtModule& m, const std::vector<GroupLetter>& word);
// same with one formal parameter; entries are polynomials in that variable
PolyMat group_word_action_formal(const WtModule& m, const std::vector<GroupLetter>& word);
// the simple reflection representative x_alpha(1) x_{-alpha}(-1) x_alpha(1)
std::vector<GroupLetter> simple_reflection_word(int i);

using Character = std::map<Weight, long long>;
Character character(const WtModule& m);
Character char_simple(const RootDatum& d, const Weight& lam);
long long dim_simple(const RootDatum& d, const Weight& lam);
// multiset of composition factors by highest weight (character subtraction)
std::map<Weight, long long> composition_factors(const WtModule& m);

// basis of Hom(m, n); G-equivariant if both are G-modules, else B-equivariant
std::vector<FpMat> hom_space(const WtModule& m, const WtModule& n);
bool is_isomorphic(const WtModule& m, const WtModule& n, std::mt19937_64& rng);
// the (up to scalar unique) nonzero map Delta(lam) -> nabla(lam)
FpMat canonical_map(const RootDatum& d, const Weight& lam);

// check the straightening relations as matrix identities for exponents <= nmax
bool validate_module(const WtModule& m, int nmax, std::string* why = nullptr);

}  // namespace frob
