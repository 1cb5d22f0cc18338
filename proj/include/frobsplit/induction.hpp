#pragma once
// The induction functor F_B^G in the functional model: an induced module is
// carried by functionals f with coordinates f(E^(n)) in M over a finite grid
// of E-exponents; the carrier is the largest Dist(G)-stable subspace of the
// weight box (equivalently, the integrable part).

#include <vector>

#include "frobsplit/gmod.hpp"

namespace frob {

struct InducedModule {
  WtModule base;                // M as a B-module
  WtModule mod;                 // the induced G-module in carrier coordinates
  std::vector<long long> nmax;  // grid bound per factor: 0 <= n_i <= nmax[i]
  FpMat carrier;                // ambient x dim(mod); columns = module basis

  long long amb_dim() const;
  long long amb_index(const std::vector<long long>& n, int j) const;
};

// buffer widens the weight box beyond max|weights of M| (the result is
// independent of it; useful as a cross-check)
InducedModule induce(const WtModule& m, long long buffer = 0);

// all grid exponent vectors in index order
std::vector<std::vector<long long>> grid_points(const InducedModule& ind);

// f(x) for a functional given by ambient coordinates; result in M-coordinates
std::vector<int> apply_functional(const InducedModule& ind, const std::vector<int>& f,
                                  const DistElem& x);

// ev: induce(M)|_B -> M, f -> f(1)
FpMat evaluation_map(const InducedModule& ind);

struct AdjunctionReport {
  bool ok = false;
  int dim_b = 0, dim_g = 0;
};
// Frobenius reciprocity Hom_B(Q|_B, M) = Hom_G(Q, induce(M)) with the
// explicit bijection psi -> ev . psi
AdjunctionReport adjunction_check(const WtModule& q, const WtModule& m);

// indices of p-divisible-weight basis vectors (the contract selection)
std::vector<int> p_divisible_indices(const WtModule& m);

// Phi: induce(M)^[1] -> induce(M^[1]), (Phi f)(x) = f(Dist(Fr) x);
// matrix with respect to the two carrier bases
FpMat phi_map(const InducedModule& src, const InducedModule& tgt);

// Psi_M: contract(induce(M)) -> induce(contract_B(M)), (Psi f)(x) = f(phi(x));
// columns indexed by p_divisible_indices(src.mod)
FpMat psi_map(const InducedModule& src, const InducedModule& tgt);

// Psi_{2(p-1)rho, M}: contract(induce(2(p-1)rho tensor M^[1])) -> induce(M),
// (Psi_rho f)(x) = f(E+ phi(x)) with the line coordinate stripped
FpMat psi_rho_map(const InducedModule& src, const InducedModule& tgt);

// cup product of two functionals, in ambient coordinates of ind_ab
std::vector<int> cup(const InducedModule& ind_a, const std::vector<int>& f,
                     const InducedModule& ind_b, const std::vector<int>& g,
                     const InducedModule& ind_ab);
// matrix of (f cup ?) : ind_b.mod -> ind_ab.mod
FpMat cup_left_matrix(const InducedModule& ind_a, const std::vector<int>& f,
                      const InducedModule& ind_b, const InducedModule& ind_ab);

// the canonical degree-(p-1)rho functional f0 in induce(2(p-1)rho), ambient
std::vector<int> f0_ambient(const InducedModule& ind_two_rho);

// functor on morphisms: u: M -> N induces induce(u): matrix between carriers
FpMat induce_map(const InducedModule& src, const InducedModule& tgt, const FpMat& u);

bool check_thm36(const WtModule& m, std::string* why = nullptr);

struct Thm310Report {
  bool ok = false;
  bool cup_f0_t_linear = false;
  bool cup_f0_g_linear = false;  // recorded, not asserted
  std::string why;
};
Thm310Report check_thm310(const WtModule& m);

// the B/T-level splitting: functionals on F-monomials over a finite grid;
// checks (Psi_B F^(pm) f) = F^(m) (Psi_B f) and the mu0-projection formula
bool psi_b_check(const WtModule& m, long long grid, std::string* why = nullptr);

}  // namespace frob
