#pragma once
// Frobenius splitting of P^1 in the graded model: the degree-m sections are
// binary forms with coefficient index n <-> x^(m-n) y^n, psi_A is the
// degreewise splitting A_pm -> A_m obtained from the contraction machinery,
// Theta is its chart/glue form, the Schubert points are compatibly split, and
// sigma is the Steinberg-weighted splitting.

#include <map>
#include <string>

#include "frobsplit/induction.hpp"

namespace frob {

// graded pieces A_m = induce(line(m)), cached lazily together with the
// carrier inverses; matrices below act on coefficient (ambient) coordinates
class FlagRing {
 public:
  FlagRing(int prime, long long dmax);
  int p() const { return d_.p; }
  long long dmax() const { return dmax_; }
  const InducedModule& piece(long long m) const;
  const FpMat& from_module(long long m) const;  // carrier
  const FpMat& to_module(long long m) const;    // carrier inverse
  FpMat amb_gen(long long m, Gen g, long long r) const;  // E^(r)/F^(r) on coefficients

 private:
  RootDatum d_;
  long long dmax_;
  mutable std::map<long long, InducedModule> cache_;
  mutable std::map<long long, FpMat> inv_;
};

// coefficient-vector arithmetic (degree = size - 1)
std::vector<int> form_mul(int p, const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> form_pow_p(int p, const std::vector<int>& a);
FpMat mul_matrix(int p, const std::vector<int>& a, long long db);  // (a * ?) : A_db -> A_(da+db)
FpMat pow_p_matrix(int p, long long m);                            // f -> f^p : A_m -> A_pm

// psi_A on A_pm -> A_m: through the induced-module contraction (abstract) and
// as the monomial splitting x^(pa) y^(pb) -> x^a y^b, else 0 (poly)
FpMat psi_a_abstract(const FlagRing& r, long long m);
FpMat psi_a_poly(int p, long long m);
bool psi_a_models_agree(const FlagRing& r, std::string* why = nullptr);
// psi_A(a^p b) = a psi_A(b) over all monomials a and degrees in range
bool psi_a_frobenius_linear(const FlagRing& r, std::string* why = nullptr);
// the same splitting on a product of two lines, against the grid subsampling
bool psi_a_rank2_check(int p, long long mmax, std::string* why = nullptr);

// semi-invariance of a Frobenius-semilinear graded map under a root subgroup,
// with the formal parameter xi = eta^p:
//   x(eta^p) . root_p( mat . x(-eta^p) ) == sum_{r<p} (-eta)^r (mat . gen^(r))
bool semi_invariance_check(const WtModule& src, const WtModule& tgt, const FpMat& mat,
                           Gen direction, std::string* why = nullptr);
// strict linearity: x(eta^p) . root_p( mat . x(-eta^p) ) == mat
bool root_linearity_check(const WtModule& src, const WtModule& tgt, const FpMat& mat,
                          Gen direction, std::string* why = nullptr);
bool psi_a_semi_invariant(const FlagRing& r, Gen direction, std::string* why = nullptr);

// Theta on the charts of P^1: chart E has coordinate t = x/y (t^j = x^j y^(M-j)
// over f_E = y^M), chart S has u = y/x; the matrix sends degree <= deg to
// degree <= deg, built from psi_A at line bundle O(scale)
FpMat theta_chart(const FlagRing& r, bool chart_s, long long scale, long long deg);
bool theta_glue_check(const FlagRing& r, std::string* why = nullptr);       // same rule on both charts
bool theta_splits_check(const FlagRing& r, std::string* why = nullptr);     // Theta . (p-th power) = id
bool theta_scale_independent(const FlagRing& r, std::string* why = nullptr);
bool theta_g_equivariance_fails(const FlagRing& r);  // naive equivariance has a witness failure

// Schubert points: degree-m piece of the ideal of X(w) (B-orbit closure) or
// X+(w) (B+-orbit closure), w in {e, s}; columns = basis in coefficients
FpMat schubert_ideal_perp(const FlagRing& r, bool w_s, bool plus, long long m);
FpMat schubert_ideal_poly(int p, bool w_s, bool plus, long long m);
bool schubert_models_agree(const FlagRing& r, std::string* why = nullptr);
// psi_A(I_pm) <= I_m for the four orbit ideals, their scheme union
// (intersection of ideals) and scheme intersection (sum of ideals)
bool theta_compatibility_check(const FlagRing& r, std::string* why = nullptr);

// Psi_(2(p-1)rho) is a left inverse of f -> (xy)^(p-1) f^p, through the
// induced-module route
bool f0_splitting_check(int p, long long mmax, std::string* why = nullptr);

// sigma: nabla(p-1+pm) -> nabla(m), the (p-1)rho-weighted splitting through
// St (x) nabla(m)^[1] = nabla(p-1+pm)
FpMat sigma_matrix(const FlagRing& r, long long m);   // (m+1) x (p-1+pm+1)
FpMat sigma_matrix_poly(int p, long long m);          // shifted monomial splitting

struct SigmaReport {
  bool ok = false;
  bool models = false;           // abstract route == shifted splitting
  bool left_inverse = false;     // sigma(y^(p-1) f^p) = f
  bool plus_compatible = false;  // sigma(I+(w)_(p-1+pm)) <= I+(w)_m
  bool minus_compatible = false; // sigma(y^(p-1) I(w)_pm) <= I(w)_m, with union/intersection
  bool b_plus_linear = false;    // x_alpha(xi) . sigma = sigma, formal xi
  bool b_semi_invariant = false; // F-direction semi-invariance, formal xi
  bool weight_vanishing = false; // lowest-weight coordinate of F^(pk) v is 0 off the lowest line
  std::string why;
};
SigmaReport sigma_checks(const FlagRing& r);

}  // namespace frob
