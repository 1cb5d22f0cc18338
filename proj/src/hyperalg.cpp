#include "frobsplit/hyperalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace frob {

bool PBWMono::is_one() const {
  auto all0 = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };
  return all0(a) && all0(b) && all0(c);
}

int& dist_exp_limit() {
  static int limit = 4096;
  return limit;
}

static void check_exp(long long e) {
  if (e > dist_exp_limit())
    throw std::overflow_error("divided-power exponent limit exceeded");
}

DistElem dist_zero(const RootDatum& d) { return DistElem(d); }

DistElem dist_one(const RootDatum& d) {
  DistElem x(d);
  x.t[PBWMono(d.rank)] = 1;
  return x;
}

DistElem dist_from_mono(const RootDatum& d, const PBWMono& m, int coef) {
  DistElem x(d);
  coef = norm_mod(coef, d.p);
  if (coef != 0) x.t[m] = coef;
  return x;
}

static DistElem gen(const RootDatum& d, int i, int n, int which) {
  if (i < 0 || i >= d.rank) throw std::out_of_range("generator index out of range");
  if (n < 0) throw std::invalid_argument("negative divided power");
  check_exp(n);
  PBWMono m(d.rank);
  (which == 0 ? m.a : which == 1 ? m.b : m.c)[i] = n;
  return dist_from_mono(d, m);
}

DistElem gen_F(const RootDatum& d, int i, int n) { return gen(d, i, n, 0); }
DistElem gen_H(const RootDatum& d, int i, int n) { return gen(d, i, n, 1); }
DistElem gen_E(const RootDatum& d, int i, int n) { return gen(d, i, n, 2); }

static void add_term(DistElem& x, const PBWMono& m, long long coef) {
  int c = norm_mod(coef, x.d.p);
  if (c == 0) return;
  auto it = x.t.find(m);
  if (it == x.t.end()) {
    x.t.emplace(m, c);
  } else {
    it->second = add_mod(it->second, c, x.d.p);
    if (it->second == 0) x.t.erase(it);
  }
}

DistElem dist_add(const DistElem& x, const DistElem& y) {
  DistElem r = x;
  for (auto& [m, co] : y.t) add_term(r, m, co);
  return r;
}

DistElem dist_sub(const DistElem& x, const DistElem& y) {
  return dist_add(x, dist_scale(y, x.d.p - 1));
}

DistElem dist_scale(const DistElem& x, int s) {
  DistElem r(x.d);
  s = norm_mod(s, x.d.p);
  if (s == 0) return r;
  for (auto& [m, co] : x.t) r.t[m] = mul_mod(co, s, x.d.p);
  return r;
}

// ---- single-factor straightening -------------------------------------------
//
// H-parts are handled as coefficient vectors over the basis [H;0],[H;1],...
// with the shift rule [H+s; n] = sum_t binom(s,t) [H; n-t].

namespace {

using HVec = std::vector<int>;  // index n -> coefficient of [H;n]

// coefficients of [H+s; n]
HVec hvec_shifted_basis(int n, long long s, int p) {
  HVec v(n + 1, 0);
  for (int t = 0; t <= n; ++t) {
    int co = binom_int(s, t, p);
    if (co) v[n - t] = co;
  }
  return v;
}

// product in Dist(T) of one factor: [H;x][H;y] = sum_v c_v [H;x+y-v] with the
// trinomial c_v = (x+y-v)!/((x-v)!(y-v)!v!) = binom(x+y-v, y) binom(y, v)
// (check by evaluating both sides at an integer weight)
HVec hvec_mul(const HVec& f, const HVec& g, int p) {
  if (f.empty() || g.empty()) return {};
  HVec r(f.size() + g.size() - 1, 0);
  for (size_t x = 0; x < f.size(); ++x) {
    if (!f[x]) continue;
    for (size_t y = 0; y < g.size(); ++y) {
      if (!g[y]) continue;
      long long base = (long long)f[x] * g[y];
      for (size_t v = 0; v <= std::min(x, y); ++v) {
        long long co = base % p * binom_int((long long)(x + y - v), (long long)y, p) % p *
                       binom_int((long long)y, (long long)v, p) % p;
        r[x + y - v] = norm_mod(r[x + y - v] + co, p);
      }
    }
  }
  return r;
}

// F^(a1)[H;b1]E^(c1) * F^(a2)[H;b2]E^(c2) for one SL2 factor.
std::map<std::array<int, 3>, int> single_product(int p, std::array<int, 3> x,
                                                 std::array<int, 3> y) {
  auto [a1, b1, c1] = x;
  auto [a2, b2, c2] = y;
  std::map<std::array<int, 3>, int> res;
  int kmax = std::min(c1, a2);
  for (int k = 0; k <= kmax; ++k) {
    long long A = (long long)a1 + a2 - k;
    long long C = (long long)c1 - k + c2;
    check_exp(A);
    check_exp(C);
    int fco = binom_int(A, a1, p);
    int eco = binom_int(C, c2, p);
    int outer = mul_mod(fco, eco, p);
    if (outer == 0) continue;
    // [H;b1] moved right past F^(a2-k): substitute H -> H - 2(a2-k)
    HVec hA = hvec_shifted_basis(b1, -2LL * (a2 - k), p);
    // exchange factor binom(H - c1 - a2 + 2k; k)
    HVec hB = hvec_shifted_basis(k, 2LL * k - c1 - a2, p);
    // [H;b2] with E^(c1-k) moved left past it: substitute H -> H - 2(c1-k)
    HVec hC = hvec_shifted_basis(b2, -2LL * (c1 - k), p);
    HVec h = hvec_mul(hvec_mul(hA, hB, p), hC, p);
    for (size_t n = 0; n < h.size(); ++n) {
      if (!h[n]) continue;
      check_exp((long long)n);
      auto key = std::array<int, 3>{int(A), int(n), int(C)};
      res[key] = norm_mod(res[key] + (long long)outer * h[n], p);
      if (res[key] == 0) res.erase(key);
    }
  }
  return res;
}

}  // namespace

DistElem multiply(const DistElem& x, const DistElem& y) {
  if (!(x.d == y.d)) throw std::invalid_argument("multiply: root datum mismatch");
  const int rank = x.d.rank, p = x.d.p;
  DistElem out(x.d);
  for (auto& [m1, co1] : x.t) {
    for (auto& [m2, co2] : y.t) {
      // per-factor straightening, then the outer product across factors
      std::vector<std::pair<PBWMono, int>> acc{{PBWMono(rank), mul_mod(co1, co2, p)}};
      for (int i = 0; i < rank && !acc.empty(); ++i) {
        auto part = single_product(p, {m1.a[i], m1.b[i], m1.c[i]}, {m2.a[i], m2.b[i], m2.c[i]});
        std::vector<std::pair<PBWMono, int>> next;
        next.reserve(acc.size() * part.size());
        for (auto& [mono, co] : acc)
          for (auto& [abc, pc] : part) {
            PBWMono m = mono;
            m.a[i] = abc[0];
            m.b[i] = abc[1];
            m.c[i] = abc[2];
            next.emplace_back(std::move(m), mul_mod(co, pc, p));
          }
        acc = std::move(next);
      }
      for (auto& [m, co] : acc) add_term(out, m, co);
    }
  }
  return out;
}

Weight mono_weight(const PBWMono& m) {
  Weight w(m.rank());
  for (int i = 0; i < m.rank(); ++i) w[i] = 2LL * (m.c[i] - m.a[i]);
  return w;
}

int counit(const DistElem& x) {
  auto it = x.t.find(PBWMono(x.d.rank));
  return it == x.t.end() ? 0 : it->second;
}

DistElem dist_fr(const DistElem& x) {
  const int p = x.d.p;
  DistElem r(x.d);
  for (auto& [m, co] : x.t) {
    bool ok = true;
    PBWMono q(x.d.rank);
    for (int i = 0; i < x.d.rank && ok; ++i) {
      if (m.a[i] % p || m.b[i] % p || m.c[i] % p) ok = false;
      else {
        q.a[i] = m.a[i] / p;
        q.b[i] = m.b[i] / p;
        q.c[i] = m.c[i] / p;
      }
    }
    if (ok) add_term(r, q, co);
  }
  return r;
}

bool has_support(const DistElem& x, Support s) {
  for (auto& [m, co] : x.t)
    for (int i = 0; i < x.d.rank; ++i) {
      bool ok = true;
      switch (s) {
        case Support::Uplus: ok = m.a[i] == 0 && m.b[i] == 0; break;
        case Support::Uminus: ok = m.b[i] == 0 && m.c[i] == 0; break;
        case Support::Torus: ok = m.a[i] == 0 && m.c[i] == 0; break;
        case Support::Borel: ok = m.c[i] == 0; break;
        case Support::BorelPlus: ok = m.a[i] == 0; break;
      }
      if (!ok) return false;
    }
  return true;
}

DistElem fr_prime(const DistElem& x, Support s) {
  if (!has_support(x, s)) throw std::domain_error("fr_prime: element outside the stated subalgebra");
  const int p = x.d.p;
  DistElem r(x.d);
  for (auto& [m, co] : x.t) {
    PBWMono q(x.d.rank);
    for (int i = 0; i < x.d.rank; ++i) {
      check_exp((long long)m.a[i] * p);
      check_exp((long long)m.b[i] * p);
      check_exp((long long)m.c[i] * p);
      q.a[i] = m.a[i] * p;
      q.b[i] = m.b[i] * p;
      q.c[i] = m.c[i] * p;
    }
    add_term(r, q, co);
  }
  return r;
}

DistElem mu0(const RootDatum& d) {
  DistElem r = dist_one(d);
  for (int i = 0; i < d.rank; ++i) {
    DistElem f(d);
    for (int j = 0; j < d.p; ++j) {
      PBWMono m(d.rank);
      m.b[i] = j;
      add_term(f, m, (j & 1) ? -1 : 1);
    }
    r = multiply(r, f);
  }
  return r;
}

DistElem phi(const DistElem& x) {
  DistElem m0 = mu0(x.d);
  DistElem r(x.d);
  for (auto& [m, co] : x.t) {
    PBWMono q(x.d.rank);
    for (int i = 0; i < x.d.rank; ++i) {
      check_exp((long long)std::max({m.a[i], m.b[i], m.c[i]}) * x.d.p);
      q.a[i] = m.a[i] * x.d.p;
      q.b[i] = m.b[i] * x.d.p;
      q.c[i] = m.c[i] * x.d.p;
    }
    r = dist_add(r, dist_scale(multiply(dist_from_mono(x.d, q), m0), co));
  }
  return r;
}

namespace {

// binom(-H_i; n) = (-1)^n sum_j binom(n-1, j) [H_i; n-j]
DistElem neg_h(const RootDatum& d, int i, int n) {
  DistElem r(d);
  for (int j = 0; j <= n; ++j) {
    int co = binom_int(n - 1, j, d.p);
    if (!co) continue;
    PBWMono m(d.rank);
    m.b[i] = n - j;
    r = dist_add(r, dist_from_mono(d, m, (n & 1) ? -co : co));
  }
  return r;
}

DistElem h_part_mapped(const RootDatum& d, const PBWMono& m, bool negate_h) {
  DistElem h = dist_one(d);
  for (int i = 0; i < d.rank; ++i) {
    if (m.b[i] == 0) continue;
    h = multiply(h, negate_h ? neg_h(d, i, m.b[i]) : gen_H(d, i, m.b[i]));
  }
  return h;
}

// generic anti-automorphism determined by images of the three PBW parts
DistElem anti_map(const DistElem& x, bool swap_ef, bool negate_h, bool sign_ef) {
  DistElem r(x.d);
  for (auto& [m, co] : x.t) {
    // image of F^(a)[H;b]E^(c) is img(E) img(H) img(F)
    PBWMono epart(x.d.rank), fpart(x.d.rank);
    long long sign = 1;
    for (int i = 0; i < x.d.rank; ++i) {
      if (swap_ef) {
        epart.a[i] = m.c[i];
        fpart.c[i] = m.a[i];
      } else {
        epart.c[i] = m.c[i];
        fpart.a[i] = m.a[i];
      }
      if (sign_ef && ((m.a[i] + m.c[i]) & 1)) sign = -sign;
    }
    DistElem term = multiply(multiply(dist_from_mono(x.d, epart), h_part_mapped(x.d, m, negate_h)),
                             dist_from_mono(x.d, fpart));
    r = dist_add(r, dist_scale(term, norm_mod(co * sign, x.d.p)));
  }
  return r;
}

}  // namespace

DistElem antipode(const DistElem& x) { return anti_map(x, false, true, true); }
DistElem tau(const DistElem& x) { return anti_map(x, false, true, false); }
DistElem omega(const DistElem& x) { return anti_map(x, true, false, false); }

TensorElem coproduct(const DistElem& x) {
  const RootDatum& d = x.d;
  const int p = d.p;
  TensorElem out;
  auto tensor_add = [&](TensorElem& te, const PBWMono& u, const PBWMono& v, long long co) {
    int c = norm_mod(co, p);
    if (!c) return;
    auto key = std::make_pair(u, v);
    auto it = te.find(key);
    if (it == te.end()) te.emplace(key, c);
    else {
      it->second = add_mod(it->second, c, p);
      if (!it->second) te.erase(it);
    }
  };
  for (auto& [m, co] : x.t) {
    // primitive-divided-power coproducts per part; parts multiply disjointly,
    // so the tensor factors stay in PBW form without restraightening
    std::vector<std::pair<std::pair<PBWMono, PBWMono>, int>> acc{
        {{PBWMono(d.rank), PBWMono(d.rank)}, co}};
    auto expand = [&](int i, int n, int which) {
      if (n == 0) return;
      std::vector<std::pair<std::pair<PBWMono, PBWMono>, int>> next;
      for (auto& [uv, c0] : acc)
        for (int u = 0; u <= n; ++u) {
          auto pr = uv;
          (which == 0 ? pr.first.a : which == 1 ? pr.first.b : pr.first.c)[i] += u;
          (which == 0 ? pr.second.a : which == 1 ? pr.second.b : pr.second.c)[i] += n - u;
          next.push_back({pr, c0});
        }
      acc = std::move(next);
    };
    for (int i = 0; i < d.rank; ++i) {
      expand(i, m.a[i], 0);
      expand(i, m.b[i], 1);
      expand(i, m.c[i], 2);
    }
    for (auto& [uv, c0] : acc) tensor_add(out, uv.first, uv.second, c0);
  }
  return out;
}

DistElem adjoint(const DistElem& x, const DistElem& y) {
  DistElem r(x.d);
  for (auto& [uv, co] : coproduct(x)) {
    DistElem term = multiply(multiply(dist_from_mono(x.d, uv.first), y),
                             antipode(dist_from_mono(x.d, uv.second)));
    r = dist_add(r, dist_scale(term, co));
  }
  return r;
}

int chi(const Weight& lam, const DistElem& x) {
  if (!has_support(x, Support::Torus)) throw std::domain_error("chi: element not in Dist(T)");
  if (int(lam.size()) != x.d.rank) throw std::invalid_argument("chi: weight size mismatch");
  long long v = 0;
  for (auto& [m, co] : x.t) {
    long long term = co;
    for (int i = 0; i < x.d.rank; ++i) term = term * binom_int(lam[i], m.b[i], x.d.p) % x.d.p;
    v += term;
  }
  return norm_mod(v, x.d.p);
}

DistElem e_plus(const RootDatum& d) {
  PBWMono m(d.rank);
  for (int i = 0; i < d.rank; ++i) m.c[i] = d.p - 1;
  return dist_from_mono(d, m);
}

Lemma37Report lemma37_check(const RootDatum& d, int i, int r) {
  Lemma37Report rep;
  const int p = d.p;
  DistElem prod = multiply(e_plus(d), gen_F(d, i, r * p));
  // expected leading monomial F_i^((rp)) E+
  PBWMono lead(d.rank);
  lead.a[i] = r * p;
  for (int j = 0; j < d.rank; ++j) lead.c[j] = p - 1;

  // group residual p-divisible-F terms by (a, c); their H-parts must be
  // elements of Dist(T_1) killed by chi_{2(p-1)rho}
  std::map<std::pair<std::vector<int>, std::vector<int>>, DistElem> groups;
  for (auto& [m, co] : prod.t) {
    for (int j = 0; j < d.rank; ++j)
      if (j != i && m.a[j] != 0) {
        rep.detail = "unexpected F-exponent outside the chosen factor";
        return rep;
      }
    if (m == lead) {
      rep.leading_term_ok = (co == 1);
      ++rep.bucket1;
      continue;
    }
    int s = m.a[i];
    if (s % p != 0) {
      ++rep.bucket2;
      continue;
    }
    ++rep.bucket3;
    auto key = std::make_pair(m.a, m.c);
    auto it = groups.find(key);
    if (it == groups.end()) it = groups.emplace(key, dist_zero(d)).first;
    PBWMono hm(d.rank);
    hm.b = m.b;
    it->second = dist_add(it->second, dist_from_mono(d, hm, co));
  }
  rep.bucket3_groups = int(groups.size());
  Weight w = two_p_minus_one_rho(d);
  for (auto& [key, z] : groups) {
    for (auto& [m, co] : z.t)
      for (int j = 0; j < d.rank; ++j)
        if (m.b[j] >= p) {
          rep.detail = "torus factor not in Dist(T_1)";
          return rep;
        }
    if (chi(w, z) != 0) {
      rep.detail = "torus factor not killed by chi_{2(p-1)rho}";
      return rep;
    }
  }
  rep.ok = rep.leading_term_ok && rep.bucket1 == 1;
  if (!rep.ok && rep.detail.empty()) rep.detail = "leading term missing or with wrong coefficient";
  return rep;
}

}  // namespace frob
