#pragma once
// Arithmetic over F_p: modular scalars, binomial coefficients of (possibly
// negative) integer arguments via base-p digit decomposition, and dense
// polynomials in one formal variable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frob {

struct PrimeModulus {
  int p = 2;
  explicit PrimeModulus(int prime);
};

inline int norm_mod(long long x, int p) {
  long long r = x % p;
  return int(r < 0 ? r + p : r);
}

int add_mod(int a, int b, int p);
int sub_mod(int a, int b, int p);
int mul_mod(int a, int b, int p);
int pow_mod(int a, long long e, int p);
int inv_mod(int a, int p);  // a != 0 mod p

// binom(n, k) mod p for any integer n and k >= 0 (0 for k < 0).
// n >= 0 uses Lucas' digit product; n < 0 uses the reflection
// binom(n, k) = (-1)^k binom(k - n - 1, k).
int binom_int(long long n, long long k, int p);

// factorial of n < p (throws otherwise; divided-power bookkeeping only
// ever needs digit factorials).
int fact_mod(int n, int p);

// Cached table of binom(lam, n) mod p over a window of integer rows,
// built by the Pascal recurrence (valid for negative upper index too).
class BinomTable {
 public:
  BinomTable(int p, long long lo, long long hi, int nmax);
  int operator()(long long lam, int n) const;
  int p() const { return p_; }

 private:
  int p_, nmax_;
  long long lo_, hi_;
  std::vector<int> tab_;  // (hi-lo+1) x (nmax+1)
};

// Dense polynomial over F_p, coefficient of x^i at index i.
struct DensePoly {
  int p = 2;
  std::vector<int> c;  // normalized: no trailing zeros

  DensePoly() = default;
  explicit DensePoly(int prime) : p(prime) {}
  DensePoly(int prime, std::vector<int> coeffs);

  static DensePoly constant(int prime, int value);
  static DensePoly monomial(int prime, int degree, int coeff = 1);

  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for zero
  int coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : 0; }
  void normalize();

  bool operator==(const DensePoly& o) const { return p == o.p && c == o.c; }
};

DensePoly poly_add(const DensePoly& a, const DensePoly& b);
DensePoly poly_sub(const DensePoly& a, const DensePoly& b);
DensePoly poly_mul(const DensePoly& a, const DensePoly& b);
DensePoly poly_scale(const DensePoly& a, int s);
int poly_eval(const DensePoly& a, int x);
DensePoly poly_compose(const DensePoly& a, const DensePoly& b);
std::string poly_to_string(const DensePoly& a, const std::string& var = "x");

}  // namespace frob
