#include "frobsplit/gmod.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace frob {

namespace {

long long pow_ll(int b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

// smallest L with p^L > max over factors of (max wt_i - min wt_i)/2;
// divided powers E_i^(r), F_i^(r) with r beyond that bound act by zero
int compute_levels(const std::vector<Weight>& wts, int rank, int p) {
  if (wts.empty()) return 0;
  long long half = 0;
  for (int i = 0; i < rank; ++i) {
    long long mx = wts[0][i], mn = wts[0][i];
    for (auto& w : wts) {
      mx = std::max(mx, w[i]);
      mn = std::min(mn, w[i]);
    }
    half = std::max(half, (mx - mn + 1) / 2);
  }
  int L = 0;
  long long q = 1;
  while (q <= half) {
    q *= p;
    ++L;
  }
  return L;
}

WtModule build_module(const RootDatum& d, std::vector<Weight> wts, bool is_g,
                      const std::function<FpMat(int, long long)>& fnE,
                      const std::function<FpMat(int, long long)>& fnF) {
  WtModule m(d);
  m.is_g = is_g;
  m.wts = std::move(wts);
  m.levels = compute_levels(m.wts, d.rank, d.p);
  m.F.assign(d.rank, {});
  if (is_g) m.E.assign(d.rank, {});
  for (int i = 0; i < d.rank; ++i)
    for (int k = 0; k < m.levels; ++k) {
      long long q = pow_ll(d.p, k);
      m.F[i].push_back(fnF(i, q));
      if (is_g) m.E[i].push_back(fnE(i, q));
    }
  return m;
}

FpMat h_diag(const WtModule& m, const std::vector<int>& b) {
  FpMat dmat(m.d.p, m.dim(), m.dim());
  for (int j = 0; j < m.dim(); ++j) {
    long long v = 1;
    for (int i = 0; i < m.d.rank; ++i) v = v * binom_int(m.wts[j][i], b[i], m.d.p) % m.d.p;
    dmat.at(j, j) = int(v);
  }
  return dmat;
}

// rank-1 Weyl module Delta(n): basis w_0..w_n, wt(w_j) = n - 2j
WtModule delta_sl2(int p, long long n) {
  RootDatum d1(1, p);
  std::vector<Weight> wts;
  for (long long j = 0; j <= n; ++j) wts.push_back({n - 2 * j});
  auto fnE = [=](int, long long r) {
    FpMat e(p, int(n + 1), int(n + 1));
    for (long long j = r; j <= n; ++j) e.at(int(j - r), int(j)) = binom_int(n - j + r, r, p);
    return e;
  };
  auto fnF = [=](int, long long r) {
    FpMat f(p, int(n + 1), int(n + 1));
    for (long long j = 0; j + r <= n; ++j) f.at(int(j + r), int(j)) = binom_int(j + r, r, p);
    return f;
  };
  return build_module(d1, wts, true, fnE, fnF);
}

// rank-1 induced module nabla(n) in the binary-form model:
// basis v_j = x^(n-j) y^j, wt(v_j) = n - 2j
WtModule nabla_sl2(int p, long long n) {
  RootDatum d1(1, p);
  std::vector<Weight> wts;
  for (long long j = 0; j <= n; ++j) wts.push_back({n - 2 * j});
  auto fnE = [=](int, long long r) {
    FpMat e(p, int(n + 1), int(n + 1));
    for (long long j = r; j <= n; ++j) e.at(int(j - r), int(j)) = binom_int(j, r, p);
    return e;
  };
  auto fnF = [=](int, long long r) {
    FpMat f(p, int(n + 1), int(n + 1));
    for (long long j = 0; j + r <= n; ++j) f.at(int(j + r), int(j)) = binom_int(n - j, r, p);
    return f;
  };
  return build_module(d1, wts, true, fnE, fnF);
}

// rank-l module from one rank-1 module per factor
WtModule assemble_outer(const RootDatum& d, const std::vector<WtModule>& fac) {
  if (int(fac.size()) != d.rank) throw std::invalid_argument("assemble_outer: factor count");
  std::vector<Weight> wts{{}};
  std::vector<int> dims;
  for (auto& f : fac) {
    dims.push_back(f.dim());
    std::vector<Weight> next;
    for (auto& w : wts)
      for (auto& fw : f.wts) {
        Weight nw = w;
        nw.push_back(fw[0]);
        next.push_back(nw);
      }
    wts = std::move(next);
  }
  auto lift = [&](int i, long long r, Gen g) {
    FpMat m = FpMat::identity(d.p, 1);
    for (int j = 0; j < d.rank; ++j) {
      FpMat blk = (j == i) ? divided_power_action(fac[j], g, 0, r)
                           : FpMat::identity(d.p, dims[j]);
      m = mat_kron(m, blk);
    }
    return m;
  };
  return build_module(
      d, wts, true, [&](int i, long long r) { return lift(i, r, Gen::E); },
      [&](int i, long long r) { return lift(i, r, Gen::F); });
}

void check_dominant(const Weight& lam, const RootDatum& d) {
  if (int(lam.size()) != d.rank) throw std::invalid_argument("weight size mismatch");
  if (!is_dominant(lam)) throw std::invalid_argument("dominant weight required");
}

}  // namespace

WtModule module_trivial(const RootDatum& d) {
  WtModule m(d);
  m.wts = {Weight(d.rank, 0)};
  m.levels = 0;
  m.E.assign(d.rank, {});
  m.F.assign(d.rank, {});
  return m;
}

WtModule module_line(const RootDatum& d, const Weight& lam) {
  if (int(lam.size()) != d.rank) throw std::invalid_argument("weight size mismatch");
  WtModule m(d);
  m.is_g = false;
  m.wts = {lam};
  m.levels = 0;
  m.F.assign(d.rank, {});
  return m;
}

WtModule module_delta(const RootDatum& d, const Weight& lam) {
  check_dominant(lam, d);
  std::vector<WtModule> fac;
  for (int i = 0; i < d.rank; ++i) fac.push_back(delta_sl2(d.p, lam[i]));
  return assemble_outer(d, fac);
}

WtModule module_nabla(const RootDatum& d, const Weight& lam) {
  check_dominant(lam, d);
  std::vector<WtModule> fac;
  for (int i = 0; i < d.rank; ++i) fac.push_back(nabla_sl2(d.p, lam[i]));
  return assemble_outer(d, fac);
}

WtModule module_steinberg(const RootDatum& d) { return module_nabla(d, steinberg_weight(d)); }

WtModule module_simple(const RootDatum& d, const Weight& lam) {
  check_dominant(lam, d);
  WtModule nab = module_nabla(d, lam);
  FpMat c = canonical_map(d, lam);
  // greedy weight-homogeneous independent columns of the image
  FpMat basis(d.p, nab.dim(), 0);
  for (int j = 0; j < c.cols; ++j) {
    FpMat col(d.p, c.rows, 1);
    for (int i = 0; i < c.rows; ++i) col.at(i, 0) = c.at(i, j);
    if (col.is_zero()) continue;
    FpMat cand = basis.cols ? mat_hstack(basis, col) : col;
    if (rank(cand) > basis.cols) basis = cand;
  }
  return submodule(nab, basis);
}

WtModule module_simple_steinberg_product(const RootDatum& d, const Weight& lam) {
  check_dominant(lam, d);
  RootDatum d1(1, d.p);
  std::vector<WtModule> fac;
  for (int i = 0; i < d.rank; ++i) {
    long long n = lam[i];
    WtModule f = module_trivial(d1);
    int k = 0;
    for (long long rest = n; rest > 0 || k == 0; rest /= d.p, ++k) {
      WtModule piece = delta_sl2(d.p, rest % d.p);  // simple for digits < p
      for (int t = 0; t < k; ++t) piece = frobenius_twist(piece);
      f = (k == 0) ? piece : tensor(f, piece);
      if (rest == 0) break;
    }
    fac.push_back(f);
  }
  return assemble_outer(d, fac);
}

WtModule module_b_two_dim(const RootDatum& d) {
  WtModule m(d);
  m.is_g = false;
  Weight low(d.rank, 0);
  low[0] = -2;
  m.wts = {Weight(d.rank, 0), low};
  m.levels = 1;
  m.F.assign(d.rank, {FpMat(d.p, 2, 2)});
  m.F[0][0].at(1, 0) = 1;
  return m;
}

WtModule restrict_to_b(const WtModule& m) {
  WtModule r = m;
  r.is_g = false;
  r.E.clear();
  return r;
}

WtModule direct_sum(const WtModule& m, const WtModule& n) {
  if (!(m.d == n.d) || m.is_g != n.is_g) throw std::invalid_argument("direct_sum: mismatch");
  std::vector<Weight> wts = m.wts;
  wts.insert(wts.end(), n.wts.begin(), n.wts.end());
  auto fn = [&](Gen g) {
    return [&, g](int i, long long r) {
      return mat_block_diag(divided_power_action(m, g, i, r), divided_power_action(n, g, i, r));
    };
  };
  return build_module(m.d, wts, m.is_g, fn(Gen::E), fn(Gen::F));
}

WtModule tensor(const WtModule& m, const WtModule& n) {
  if (!(m.d == n.d)) throw std::invalid_argument("tensor: datum mismatch");
  bool is_g = m.is_g && n.is_g;
  std::vector<Weight> wts;
  for (auto& a : m.wts)
    for (auto& b : n.wts) wts.push_back(weight_add(a, b));
  auto fn = [&](Gen g) {
    return [&, g](int i, long long r) {
      FpMat s(m.d.p, int(wts.size()), int(wts.size()));
      for (long long a = 0; a <= r; ++a) {
        FpMat part = mat_kron(divided_power_action(m, g, i, a),
                              divided_power_action(n, g, i, r - a));
        s = mat_add(s, part);
      }
      return s;
    };
  };
  return build_module(m.d, wts, is_g, fn(Gen::E), fn(Gen::F));
}

WtModule frobenius_twist(const WtModule& m) {
  std::vector<Weight> wts;
  for (auto& w : m.wts) wts.push_back(weight_scale(w, m.d.p));
  auto fn = [&](Gen g) {
    return [&, g](int i, long long r) {
      // E^(r) on the twist is E^(r/p) downstairs, zero if p does not divide r
      if (r % m.d.p) return FpMat::zero(m.d.p, m.dim(), m.dim());
      return divided_power_action(m, g, i, r / m.d.p);
    };
  };
  return build_module(m.d, wts, m.is_g, fn(Gen::E), fn(Gen::F));
}

WtModule contract_module(const WtModule& m) {
  const int p = m.d.p;
  std::vector<int> sel;
  for (int j = 0; j < m.dim(); ++j)
    if (is_p_divisible(m.wts[j], p)) sel.push_back(j);
  std::vector<Weight> wts;
  for (int j : sel) {
    Weight w = m.wts[j];
    for (auto& x : w) x /= p;
    wts.push_back(w);
  }
  auto fn = [&](Gen g) {
    return [&, g](int i, long long r) {
      FpMat big = divided_power_action(m, g, i, r * p);
      FpMat sub(p, int(sel.size()), int(sel.size()));
      for (size_t u = 0; u < sel.size(); ++u)
        for (size_t v = 0; v < sel.size(); ++v) sub.at(int(u), int(v)) = big.at(sel[u], sel[v]);
      return sub;
    };
  };
  return build_module(m.d, wts, m.is_g, fn(Gen::E), fn(Gen::F));
}

WtModule dual_module(const WtModule& m) {
  if (!m.is_g) throw std::invalid_argument("dual_module: G-modules only");
  std::vector<Weight> wts;
  for (auto& w : m.wts) wts.push_back(weight_scale(w, -1));
  auto fn = [&](Gen g) {
    return [&, g](int i, long long r) {
      FpMat t = mat_transpose(divided_power_action(m, g, i, r));
      return (r & 1) ? mat_scale(t, m.d.p - 1) : t;  // antipode sign (-1)^r
    };
  };
  return build_module(m.d, wts, true, fn(Gen::E), fn(Gen::F));
}

WtModule submodule(const WtModule& m, const FpMat& basis) {
  if (basis.rows != m.dim()) throw std::invalid_argument("submodule: shape mismatch");
  std::vector<Weight> wts;
  for (int j = 0; j < basis.cols; ++j) {
    Weight w;
    for (int i = 0; i < basis.rows; ++i)
      if (basis.at(i, j) != 0) {
        if (w.empty()) w = m.wts[i];
        else if (w != m.wts[i])
          throw std::invalid_argument("submodule: basis column not weight-homogeneous");
      }
    if (w.empty()) throw std::invalid_argument("submodule: zero basis column");
    wts.push_back(w);
  }
  auto fn = [&](Gen g) {
    return [&, g](int i, long long r) {
      auto x = solve(basis, mat_mul(divided_power_action(m, g, i, r), basis));
      if (!x) throw std::invalid_argument("submodule: basis not stable");
      return *x;
    };
  };
  return build_module(m.d, wts, m.is_g, fn(Gen::E), fn(Gen::F));
}

FpMat divided_power_action(const WtModule& m, Gen g, int i, long long r) {
  if (r < 0 || i < 0 || i >= m.d.rank) throw std::invalid_argument("divided_power_action: bad args");
  if (g == Gen::E && !m.is_g) throw std::domain_error("E-action on a B-module");
  const int p = m.d.p;
  FpMat acc = FpMat::identity(p, m.dim());
  long long unit = 1;
  int k = 0;
  for (long long rest = r; rest > 0; rest /= p, ++k) {
    int dk = int(rest % p);
    if (dk == 0) continue;
    if (k >= m.levels) return FpMat::zero(p, m.dim(), m.dim());
    const FpMat& base = (g == Gen::E ? m.E : m.F)[i][k];
    acc = mat_mul(acc, mat_pow(base, dk));
    unit = unit * fact_mod(dk, p) % p;
  }
  return mat_scale(acc, inv_mod(int(unit), p));
}

FpMat act(const WtModule& m, const DistElem& x) {
  if (!(m.d == x.d)) throw std::invalid_argument("act: datum mismatch");
  FpMat r(m.d.p, m.dim(), m.dim());
  for (auto& [mono, co] : x.t) {
    FpMat term = FpMat::identity(m.d.p, m.dim());
    for (int i = 0; i < m.d.rank; ++i)
      if (mono.c[i]) term = mat_mul(divided_power_action(m, Gen::E, i, mono.c[i]), term);
    term = mat_mul(h_diag(m, mono.b), term);
    for (int i = 0; i < m.d.rank; ++i)
      if (mono.a[i]) term = mat_mul(divided_power_action(m, Gen::F, i, mono.a[i]), term);
    r = mat_add(r, mat_scale(term, co));
  }
  return r;
}

namespace {

long long unipotent_range(const WtModule& m, int i) {
  if (m.dim() == 0) return 0;
  long long mx = m.wts[0][i], mn = m.wts[0][i];
  for (auto& w : m.wts) {
    mx = std::max(mx, w[i]);
    mn = std::min(mn, w[i]);
  }
  return (mx - mn + 1) / 2;
}

}  // namespace

std::vector<GroupLetter> simple_reflection_word(int i) {
  return {{0, i, 1, false}, {1, i, -1, false}, {0, i, 1, false}};
}

FpMat group_word_action(const WtModule& m, const std::vector<GroupLetter>& word) {
  FpMat r = FpMat::identity(m.d.p, m.dim());
  const int p = m.d.p;
  for (auto& g : word) {
    if (g.formal) throw std::invalid_argument("formal letter in scalar group word");
    FpMat cur(p, m.dim(), m.dim());
    if (g.kind == 2) {
      int z = norm_mod(g.z, p);
      if (z == 0) throw std::invalid_argument("torus parameter must be a unit");
      for (int j = 0; j < m.dim(); ++j) {
        long long e = m.wts[j][g.i] % (p - 1 == 0 ? 1 : p - 1);
        if (e < 0) e += (p - 1 == 0 ? 1 : p - 1);
        cur.at(j, j) = p == 2 ? 1 : pow_mod(z, e, p);
      }
    } else {
      long long range = unipotent_range(m, g.i);
      for (long long rr = 0; rr <= range; ++rr) {
        FpMat dp = divided_power_action(m, g.kind == 0 ? Gen::E : Gen::F, g.i, rr);
        cur = mat_add(cur, mat_scale(dp, pow_mod(g.z, rr, p)));
      }
    }
    r = mat_mul(r, cur);
  }
  return r;
}

PolyMat group_word_action_formal(const WtModule& m, const std::vector<GroupLetter>& word) {
  const int p = m.d.p;
  PolyMat r = poly_mat_identity(p, m.dim());
  for (auto& g : word) {
    PolyMat cur;
    if (!g.formal) {
      cur = poly_mat_from_scalar(group_word_action(m, {g}));
    } else {
      if (g.kind == 2) throw std::invalid_argument("formal torus letters unsupported");
      cur = PolyMat(m.dim(), std::vector<DensePoly>(m.dim(), DensePoly(p)));
      long long range = unipotent_range(m, g.i);
      for (long long rr = 0; rr <= range; ++rr) {
        FpMat dp = divided_power_action(m, g.kind == 0 ? Gen::E : Gen::F, g.i, rr);
        for (int u = 0; u < m.dim(); ++u)
          for (int v = 0; v < m.dim(); ++v)
            if (dp.at(u, v))
              cur[u][v] = poly_add(cur[u][v],
                                   DensePoly::monomial(p, int(rr), dp.at(u, v)));
      }
    }
    r = poly_mat_mul(r, cur);
  }
  return r;
}

Character character(const WtModule& m) {
  Character ch;
  for (auto& w : m.wts) ++ch[w];
  return ch;
}

Character char_simple(const RootDatum& d, const Weight& lam) {
  check_dominant(lam, d);
  // per factor: convolution over base-p digits of the restricted simple chars
  std::vector<std::map<long long, long long>> fac;
  for (int i = 0; i < d.rank; ++i) {
    std::map<long long, long long> ch{{0, 1}};
    long long q = 1;
    for (long long rest = lam[i]; rest > 0; rest /= d.p, q *= d.p) {
      long long dig = rest % d.p;
      std::map<long long, long long> next;
      for (auto& [w, c] : ch)
        for (long long j = 0; j <= dig; ++j) next[w + q * (dig - 2 * j)] += c;
      ch = std::move(next);
    }
    fac.push_back(std::move(ch));
  }
  Character out{{Weight{}, 1}};
  for (auto& ch : fac) {
    Character next;
    for (auto& [w, c] : out)
      for (auto& [x, cx] : ch) {
        Weight nw = w;
        nw.push_back(x);
        next[nw] += c * cx;
      }
    out = std::move(next);
  }
  return out;
}

long long dim_simple(const RootDatum& d, const Weight& lam) {
  long long dim = 1;
  for (int i = 0; i < d.rank; ++i)
    for (long long rest = lam[i]; rest > 0; rest /= d.p) dim *= rest % d.p + 1;
  return dim;
}

std::map<Weight, long long> composition_factors(const WtModule& m) {
  Character ch = character(m);
  std::map<Weight, long long> out;
  while (!ch.empty()) {
    for (auto it = ch.begin(); it != ch.end();)
      it = it->second == 0 ? ch.erase(it) : std::next(it);
    if (ch.empty()) break;
    auto best = ch.begin();
    auto total = [](const Weight& w) {
      long long s = 0;
      for (auto x : w) s += x;
      return s;
    };
    for (auto it = ch.begin(); it != ch.end(); ++it)
      if (total(it->first) > total(best->first) ||
          (total(it->first) == total(best->first) && it->first > best->first))
        best = it;
    Weight lam = best->first;
    long long mult = best->second;
    if (mult < 0 || !is_dominant(lam))
      throw std::logic_error("composition_factors: character is not a nonnegative sum of simples");
    for (auto& [w, c] : char_simple(m.d, lam)) ch[w] -= mult * c;
    out[lam] += mult;
  }
  return out;
}

std::vector<FpMat> hom_space(const WtModule& m, const WtModule& n) {
  if (!(m.d == n.d)) throw std::invalid_argument("hom_space: datum mismatch");
  const int p = m.d.p;
  // unknowns: entries X(u,v) with wt_n[u] == wt_m[v]
  std::vector<std::pair<int, int>> unk;
  std::vector<std::vector<int>> unk_id(n.dim(), std::vector<int>(m.dim(), -1));
  for (int u = 0; u < n.dim(); ++u)
    for (int v = 0; v < m.dim(); ++v)
      if (n.wts[u] == m.wts[v]) {
        unk_id[u][v] = int(unk.size());
        unk.emplace_back(u, v);
      }
  if (unk.empty()) return {};
  std::vector<std::vector<int>> rows;
  int L = std::max(m.levels, n.levels);
  bool use_e = m.is_g && n.is_g;
  for (int i = 0; i < m.d.rank; ++i)
    for (int k = 0; k < L; ++k)
      for (int gi = 0; gi < (use_e ? 2 : 1); ++gi) {
        Gen g = gi == 0 ? Gen::F : Gen::E;
        long long q = pow_ll(p, k);
        FpMat gm = divided_power_action(m, g, i, q);
        FpMat gn = divided_power_action(n, g, i, q);
        // constraint: gn X - X gm = 0
        for (int u = 0; u < n.dim(); ++u)
          for (int v = 0; v < m.dim(); ++v) {
            std::vector<int> row(unk.size(), 0);
            bool nz = false;
            for (int w = 0; w < n.dim(); ++w)
              if (gn.at(u, w) && unk_id[w][v] >= 0) {
                row[unk_id[w][v]] = add_mod(row[unk_id[w][v]], gn.at(u, w), p);
                nz = true;
              }
            for (int w = 0; w < m.dim(); ++w)
              if (gm.at(w, v) && unk_id[u][w] >= 0) {
                row[unk_id[u][w]] = sub_mod(row[unk_id[u][w]], gm.at(w, v), p);
                nz = true;
              }
            if (nz) rows.push_back(std::move(row));
          }
      }
  FpMat sys(p, int(rows.size()), int(unk.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) sys.at(int(r), int(c)) = rows[r][c];
  FpMat ker = rows.empty() ? FpMat::identity(p, int(unk.size())) : kernel_basis(sys);
  std::vector<FpMat> basis;
  for (int j = 0; j < ker.cols; ++j) {
    FpMat x(p, n.dim(), m.dim());
    for (size_t t = 0; t < unk.size(); ++t) x.at(unk[t].first, unk[t].second) = ker.at(int(t), j);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_isomorphic(const WtModule& m, const WtModule& n, std::mt19937_64& rng) {
  if (m.dim() != n.dim() || m.is_g != n.is_g) return false;
  if (character(m) != character(n)) return false;
  if (m.dim() == 0) return true;
  auto homs = hom_space(m, n);
  if (homs.empty()) return false;
  const int p = m.d.p;
  auto invertible = [&](const FpMat& x) { return rank(x) == m.dim(); };
  for (auto& h : homs)
    if (invertible(h)) return true;
  double combos = 1;
  for (size_t i = 0; i < homs.size(); ++i) combos *= p;
  if (combos <= 4096) {
    std::vector<int> coef(homs.size(), 0);
    while (true) {
      size_t pos = 0;
      while (pos < coef.size() && ++coef[pos] == p) coef[pos++] = 0;
      if (pos == coef.size()) break;
      FpMat x(p, n.dim(), m.dim());
      for (size_t i = 0; i < homs.size(); ++i)
        if (coef[i]) x = mat_add(x, mat_scale(homs[i], coef[i]));
      if (invertible(x)) return true;
    }
    return false;
  }
  for (int t = 0; t < 500; ++t) {
    FpMat x(p, n.dim(), m.dim());
    for (auto& h : homs) x = mat_add(x, mat_scale(h, int(rng() % p)));
    if (invertible(x)) return true;
  }
  return false;
}

FpMat canonical_map(const RootDatum& d, const Weight& lam) {
  auto homs = hom_space(module_delta(d, lam), module_nabla(d, lam));
  if (homs.size() != 1)
    throw std::logic_error("canonical_map: Hom(Delta, nabla) is not one-dimensional");
  return homs[0];
}

bool validate_module(const WtModule& m, int nmax, std::string* why) {
  const int p = m.d.p;
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (int i = 0; i < m.d.rank; ++i) {
    // weight compatibility of generator matrices
    for (int k = 0; k < m.levels; ++k) {
      long long q = pow_ll(p, k);
      for (int gi = 0; gi < (m.is_g ? 2 : 1); ++gi) {
        const FpMat& g = (gi == 1 ? m.E : m.F)[i][k];
        long long dir = gi == 1 ? 2 * q : -2 * q;
        for (int u = 0; u < m.dim(); ++u)
          for (int v = 0; v < m.dim(); ++v)
            if (g.at(u, v)) {
              Weight expect = m.wts[v];
              expect[i] += dir;
              if (m.wts[u] != expect) return fail("generator breaks weights");
            }
      }
    }
    for (int nn = 0; nn <= nmax; ++nn)
      for (int mm = 0; mm <= nmax; ++mm) {
        // additivity of divided powers
        FpMat lhsF = mat_mul(divided_power_action(m, Gen::F, i, nn),
                             divided_power_action(m, Gen::F, i, mm));
        FpMat rhsF = mat_scale(divided_power_action(m, Gen::F, i, nn + mm),
                               binom_int(nn + mm, nn, p));
        if (!(lhsF == rhsF)) return fail("F-divided-power additivity fails");
        if (!m.is_g) continue;
        FpMat lhsE = mat_mul(divided_power_action(m, Gen::E, i, nn),
                             divided_power_action(m, Gen::E, i, mm));
        FpMat rhsE = mat_scale(divided_power_action(m, Gen::E, i, nn + mm),
                               binom_int(nn + mm, nn, p));
        if (!(lhsE == rhsE)) return fail("E-divided-power additivity fails");
        // E^(n) F^(m) = sum_k F^(m-k) binom(H-n-m+2k; k) E^(n-k)
        FpMat lhs = mat_mul(divided_power_action(m, Gen::E, i, nn),
                            divided_power_action(m, Gen::F, i, mm));
        FpMat rhs(p, m.dim(), m.dim());
        for (int k = 0; k <= std::min(nn, mm); ++k) {
          FpMat diag(p, m.dim(), m.dim());
          for (int j = 0; j < m.dim(); ++j)
            diag.at(j, j) = binom_int(m.wts[j][i] - nn - mm + 2 * k, k, p);
          FpMat term = mat_mul(divided_power_action(m, Gen::F, i, mm - k),
                               mat_mul(diag, divided_power_action(m, Gen::E, i, nn - k)));
          rhs = mat_add(rhs, term);
        }
        if (!(lhs == rhs)) return fail("E-F straightening fails");
      }
  }
  return true;
}

}  // namespace frob
