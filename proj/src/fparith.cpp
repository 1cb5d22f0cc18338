#include "frobsplit/fparith.hpp"

#include <algorithm>

namespace frob {

PrimeModulus::PrimeModulus(int prime) : p(prime) {
  if (prime < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  for (int d = 2; (long long)d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("modulus is not prime");
}

int add_mod(int a, int b, int p) { return norm_mod((long long)a + b, p); }
int sub_mod(int a, int b, int p) { return norm_mod((long long)a - b, p); }
int mul_mod(int a, int b, int p) { return norm_mod((long long)a * b, p); }

int pow_mod(int a, long long e, int p) {
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  long long base = norm_mod(a, p), r = 1;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return int(r);
}

int inv_mod(int a, int p) {
  a = norm_mod(a, p);
  if (a == 0) throw std::domain_error("inv_mod: zero is not invertible");
  return pow_mod(a, p - 2, p);
}

namespace {
// binom(a, b) for digits 0 <= a, b < p.
int digit_binom(int a, int b, int p) {
  if (b > a) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return mul_mod(int(num), inv_mod(int(den), p), p);
}
}  // namespace

int binom_int(long long n, long long k, int p) {
  if (k < 0) return 0;
  if (n < 0) {
    // binom(n, k) = (-1)^k binom(k - n - 1, k)
    int v = binom_int(k - n - 1, k, p);
    return (k & 1) ? norm_mod(-(long long)v, p) : v;
  }
  if (k > n) return 0;
  long long r = 1;
  while (k > 0 || n > 0) {
    int nd = int(n % p), kd = int(k % p);
    r = r * digit_binom(nd, kd, p) % p;
    if (r == 0) return 0;
    n /= p;
    k /= p;
  }
  return int(r);
}

int fact_mod(int n, int p) {
  if (n < 0 || n >= p) throw std::invalid_argument("fact_mod: need 0 <= n < p");
  long long r = 1;
  for (int i = 2; i <= n; ++i) r = r * i % p;
  return int(r);
}

BinomTable::BinomTable(int p, long long lo, long long hi, int nmax)
    : p_(p), nmax_(nmax), lo_(lo), hi_(hi) {
  if (hi < lo || nmax < 0) throw std::invalid_argument("BinomTable: bad window");
  long long rows = hi - lo + 1;
  tab_.assign(size_t(rows) * (nmax + 1), 0);
  // bottom row directly, the rest by Pascal (a polynomial identity in the
  // upper index, so it holds for negative rows too)
  for (int n = 0; n <= nmax; ++n) tab_[n] = binom_int(lo, n, p);
  for (long long r = 1; r < rows; ++r) {
    int* cur = &tab_[size_t(r) * (nmax + 1)];
    const int* prev = &tab_[size_t(r - 1) * (nmax + 1)];
    cur[0] = 1;
    for (int n = 1; n <= nmax; ++n) cur[n] = add_mod(prev[n], prev[n - 1], p_);
  }
}

int BinomTable::operator()(long long lam, int n) const {
  if (n < 0) return 0;
  if (lam < lo_ || lam > hi_ || n > nmax_)
    throw std::out_of_range("BinomTable: query outside window");
  return tab_[size_t(lam - lo_) * (nmax_ + 1) + n];
}

DensePoly::DensePoly(int prime, std::vector<int> coeffs) : p(prime), c(std::move(coeffs)) {
  for (auto& x : c) x = norm_mod(x, p);
  normalize();
}

DensePoly DensePoly::constant(int prime, int value) {
  return DensePoly(prime, {value});
}

DensePoly DensePoly::monomial(int prime, int degree, int coeff) {
  std::vector<int> v(degree + 1, 0);
  v[degree] = coeff;
  return DensePoly(prime, std::move(v));
}

void DensePoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

DensePoly poly_add(const DensePoly& a, const DensePoly& b) {
  DensePoly r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = add_mod(a.coeff(int(i)), b.coeff(int(i)), a.p);
  r.normalize();
  return r;
}

DensePoly poly_sub(const DensePoly& a, const DensePoly& b) {
  return poly_add(a, poly_scale(b, a.p - 1));
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
  DensePoly r(a.p);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = norm_mod(r.c[i + j] + (long long)a.c[i] * b.c[j], a.p);
  r.normalize();
  return r;
}

DensePoly poly_scale(const DensePoly& a, int s) {
  DensePoly r(a.p);
  s = norm_mod(s, a.p);
  if (s == 0) return r;
  r.c = a.c;
  for (auto& x : r.c) x = mul_mod(x, s, a.p);
  r.normalize();
  return r;
}

int poly_eval(const DensePoly& a, int x) {
  long long r = 0;
  x = norm_mod(x, a.p);
  for (size_t i = a.c.size(); i-- > 0;) r = (r * x + a.c[i]) % a.p;
  return int(r);
}

DensePoly poly_compose(const DensePoly& a, const DensePoly& b) {
  DensePoly r(a.p);
  for (size_t i = a.c.size(); i-- > 0;) {
    r = poly_mul(r, b);
    r = poly_add(r, DensePoly::constant(a.p, a.c[i]));
  }
  return r;
}

std::string poly_to_string(const DensePoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || a.c[i] != 1) s += std::to_string(a.c[i]);
    if (i > 0) {
      if (a.c[i] != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace frob
