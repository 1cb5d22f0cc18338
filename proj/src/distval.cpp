#include "frobsplit/distval.hpp"

#include <algorithm>
#include <stdexcept>

namespace frob {

ValElem val_from_dist(const DistElem& x, long long lo, long long hi, const BinomTable& tab) {
  if (x.d.rank != 1) throw std::invalid_argument("val_from_dist: rank-1 elements only");
  ValElem v;
  v.p = x.d.p;
  v.lo = lo;
  v.hi = hi;
  const size_t w = size_t(hi - lo + 1);
  for (auto& [m, co] : x.t) {
    auto key = std::make_pair(m.a[0], m.c[0]);
    auto it = v.t.find(key);
    if (it == v.t.end()) it = v.t.emplace(key, std::vector<int>(w, 0)).first;
    for (size_t j = 0; j < w; ++j)
      it->second[j] = norm_mod(it->second[j] + (long long)co * tab(lo + (long long)j, m.b[0]), v.p);
  }
  for (auto it = v.t.begin(); it != v.t.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(), [](int z) { return z == 0; });
    it = zero ? v.t.erase(it) : std::next(it);
  }
  return v;
}

ValElem val_mul(const ValElem& x, const ValElem& y, long long dcap, const BinomTable& tab) {
  if (x.p != y.p) throw std::invalid_argument("val_mul: modulus mismatch");
  const int p = x.p;
  ValElem r;
  r.p = p;
  r.lo = 0;
  r.hi = dcap;
  auto xval = [&](const std::vector<int>& h, long long lam) {
    if (lam < x.lo || lam > x.hi) throw std::out_of_range("val_mul: x window too small");
    return h[size_t(lam - x.lo)];
  };
  auto yval = [&](const std::vector<int>& h, long long lam) {
    if (lam < y.lo || lam > y.hi) throw std::out_of_range("val_mul: y window too small");
    return h[size_t(lam - y.lo)];
  };
  for (auto& [k1, h1] : x.t)
    for (auto& [k2, h2] : y.t) {
      const int A1 = k1.first, C1 = k1.second, A2 = k2.first, C2 = k2.second;
      for (int k = 0; k <= std::min(C1, A2); ++k) {
        long long A = (long long)A1 + A2 - k, C = (long long)C1 - k + C2;
        int outer = mul_mod(binom_int(A, A1, p), binom_int(C, C2, p), p);
        if (!outer) continue;
        const int m = A2 - k, n = C1 - k;
        std::vector<int> vals(size_t(dcap + 1), 0);
        bool nonzero = false;
        for (long long lam = 0; lam <= dcap; ++lam) {
          long long v = (long long)xval(h1, lam - 2 * m) * tab(lam - C1 - A2 + 2 * k, k) % p;
          v = v * yval(h2, lam - 2 * n) % p;
          v = v * outer % p;
          if (v) nonzero = true;
          vals[size_t(lam)] = int(v);
        }
        if (!nonzero) continue;
        auto key = std::make_pair(int(A), int(C));
        auto it = r.t.find(key);
        if (it == r.t.end()) {
          r.t.emplace(key, std::move(vals));
        } else {
          bool nz = false;
          for (size_t j = 0; j < vals.size(); ++j) {
            it->second[j] = add_mod(it->second[j], vals[j], p);
            nz = nz || it->second[j];
          }
          if (!nz) r.t.erase(it);
        }
      }
    }
  return r;
}

bool val_equal(const ValElem& x, const ValElem& y, long long lo, long long hi) {
  auto probe = [&](const ValElem& e, const std::pair<int, int>& key, long long lam) {
    if (lam < e.lo || lam > e.hi) throw std::out_of_range("val_equal: window too small");
    auto it = e.t.find(key);
    return it == e.t.end() ? 0 : it->second[size_t(lam - e.lo)];
  };
  std::vector<std::pair<int, int>> keys;
  for (auto& [k, h] : x.t) keys.push_back(k);
  for (auto& [k, h] : y.t) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto& k : keys)
    for (long long lam = lo; lam <= hi; ++lam)
      if (probe(x, k, lam) != probe(y, k, lam)) return false;
  return true;
}

}  // namespace frob
