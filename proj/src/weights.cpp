#include "frobsplit/weights.hpp"

#include <stdexcept>

namespace frob {

RootDatum::RootDatum(int l, int prime) : rank(l), p(prime) {
  PrimeModulus check(prime);
  if (l < 1) throw std::invalid_argument("rank must be >= 1");
}

bool is_dominant(const Weight& w) {
  for (long long x : w)
    if (x < 0) return false;
  return true;
}

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  return weight_add(a, weight_scale(b, -1));
}

Weight weight_scale(const Weight& a, long long s) {
  Weight r = a;
  for (auto& x : r) x *= s;
  return r;
}

Weight rho(const RootDatum& d) { return Weight(d.rank, 1); }
Weight steinberg_weight(const RootDatum& d) { return Weight(d.rank, d.p - 1); }
Weight two_p_minus_one_rho(const RootDatum& d) { return Weight(d.rank, 2LL * (d.p - 1)); }

std::pair<Weight, Weight> decompose_p(const Weight& w, int p) {
  Weight w0(w.size()), w1(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    long long r = w[i] % p;
    if (r < 0) r += p;
    w0[i] = r;
    w1[i] = (w[i] - r) / p;
  }
  return {w0, w1};
}

bool is_p_divisible(const Weight& w, int p) {
  for (long long x : w)
    if (x % p != 0) return false;
  return true;
}

int chi_binom(const Weight& w, int i, long long n, int p) {
  if (i < 0 || i >= int(w.size())) throw std::out_of_range("chi_binom: bad index");
  return binom_int(w[i], n, p);
}

Weight weyl_apply(const WeylElement& w, const Weight& lam) {
  if (w.flip.size() != lam.size()) throw std::invalid_argument("weyl_apply: size mismatch");
  Weight r = lam;
  for (size_t i = 0; i < r.size(); ++i)
    if (w.flip[i]) r[i] = -r[i];
  return r;
}

Weight weyl_dot(const WeylElement& w, const Weight& lam) {
  Weight r = lam;
  for (auto& x : r) x += 1;
  r = weyl_apply(w, r);
  for (auto& x : r) x -= 1;
  return r;
}

}  // namespace frob
