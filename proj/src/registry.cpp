#include "frobsplit/registry.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "frobsplit/distval.hpp"
#include "frobsplit/flagsplit.hpp"
#include "frobsplit/gmod.hpp"
#include "frobsplit/induction.hpp"
#include "frobsplit/parse.hpp"

namespace frob {
namespace {

std::string cfg_str(const RunConfig& cfg, const std::string& extra = "") {
  std::string s = "p=" + std::to_string(cfg.p) + " rank=" + std::to_string(cfg.rank);
  if (!extra.empty()) s += " " + extra;
  return s;
}

bool fail(std::string* witness, const std::string& msg) {
  *witness = msg;
  return false;
}

DistElem rand_mono(const RootDatum& d, int emax, std::mt19937_64& rng) {
  PBWMono m(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    m.a[size_t(i)] = int(rng() % (emax + 1));
    m.b[size_t(i)] = int(rng() % (emax + 1));
    m.c[size_t(i)] = int(rng() % (emax + 1));
  }
  return dist_from_mono(d, m);
}

// --- hyperalg suite ---

bool check_phi_multiplicative(const RunConfig& cfg, std::string* witness, std::string* params) {
  const int p = cfg.p;
  RootDatum d(1, p);
  if (p <= 3) {
    *params = cfg_str(cfg, "exhaustive exponents<=" + std::to_string(p + 1));
    std::vector<DistElem> monos;
    for (int a = 0; a <= p + 1; ++a)
      for (int b = 0; b <= p + 1; ++b)
        for (int c = 0; c <= p + 1; ++c)
          monos.push_back(multiply(gen_F(d, 0, a), multiply(gen_H(d, 0, b), gen_E(d, 0, c))));
    for (auto& x : monos)
      for (auto& y : monos)
        if (!(phi(multiply(x, y)) == multiply(phi(x), phi(y))))
          return fail(witness, "x=" + render_dist(x) + " y=" + render_dist(y));
    return true;
  }
  // value-form oracle for larger p: phi applied key-wise via
  // chi_lam(phi(F^(a)[H;b]E^(c))) = binom(lam, pb) [p | lam] at key (pa, pc),
  // so neither side needs symbolic straightening of the mu0 factors
  int npairs = p <= 7 ? (cfg.sampled ? 1000 : 10000) : (cfg.sampled ? 300 : 1000);
  int emax = p <= 7 ? 3 * p : 2 * p;
  *params = cfg_str(cfg, "sampled pairs=" + std::to_string(npairs) +
                             " exponents<=" + std::to_string(emax));
  long long w = 4LL * p * emax;
  BinomTable tab(p, -2 * w, 2 * w, int(w));
  auto val_phi = [&](const DistElem& z, long long lo, long long hi) {
    ValElem v;
    v.p = p;
    v.lo = lo;
    v.hi = hi;
    for (auto& [m, coef] : z.t) {
      auto& vals = v.t[{p * m.a[0], p * m.c[0]}];
      if (vals.empty()) vals.assign(size_t(hi - lo + 1), 0);
      for (long long lam = lo; lam <= hi; ++lam)
        if (lam % p == 0)
          vals[size_t(lam - lo)] = (vals[size_t(lam - lo)] + coef * tab(lam, p * m.b[0])) % p;
    }
    return v;
  };
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < npairs; ++t) {
    DistElem x = rand_mono(d, emax, rng), y = rand_mono(d, emax, rng);
    ValElem vx = val_phi(x, -2 * w, 2 * w);
    ValElem vy = val_phi(y, -2 * w, 2 * w);
    ValElem lhs = val_phi(multiply(x, y), 0, w);
    if (!val_equal(val_mul(vx, vy, w, tab), lhs, 0, w))
      return fail(witness, "x=" + render_dist(x) + " y=" + render_dist(y));
    // tie the value model to the symbolic phi on a subsample
    if (t % 500 == 0 && !val_equal(val_from_dist(phi(x), 0, w, tab), vx, 0, w))
      return fail(witness, "value model disagrees with phi on x=" + render_dist(x));
  }
  return true;
}

bool check_phi_splits_fr(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  int emax = 2 * cfg.p;
  *params = cfg_str(cfg, "exponents<=" + std::to_string(emax));
  for (int a = 0; a <= emax; ++a)
    for (int b = 0; b <= emax; ++b)
      for (int c = 0; c <= emax; ++c) {
        DistElem x = multiply(gen_F(d, 0, a), multiply(gen_H(d, 0, b), gen_E(d, 0, c)));
        if (!(dist_fr(phi(x)) == x)) return fail(witness, render_dist(x));
      }
  return true;
}

bool check_mu0(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(cfg.rank, cfg.p);
  *params = cfg_str(cfg);
  DistElem m = mu0(d);
  if (!(multiply(m, m) == m)) return fail(witness, "mu0 mu0 != mu0");
  if (!(dist_fr(m) == dist_one(d))) return fail(witness, "Dist(Fr)(mu0) != 1");
  for (int i = 0; i < d.rank; ++i)
    for (int n = 1; n <= 2; ++n) {
      if (!(multiply(m, gen_E(d, i, n * cfg.p)) == multiply(gen_E(d, i, n * cfg.p), m)))
        return fail(witness, "mu0 does not commute with E^(" + std::to_string(n * cfg.p) + ")");
      if (!(multiply(m, gen_F(d, i, n * cfg.p)) == multiply(gen_F(d, i, n * cfg.p), m)))
        return fail(witness, "mu0 does not commute with F^(" + std::to_string(n * cfg.p) + ")");
    }
  return true;
}

bool check_chi_phi(const RunConfig& cfg, std::string* witness, std::string* params) {
  const int p = cfg.p;
  RootDatum d(1, p);
  *params = cfg_str(cfg, "|lambda|<=" + std::to_string(3 * p));
  for (long long lam = -3 * p; lam <= 3 * p; ++lam)
    for (int b = 0; b <= 2 * p; ++b) {
      DistElem h = gen_H(d, 0, b);
      int rhs = lam % p == 0 ? chi({lam / p}, h) : 0;
      if (chi({lam}, phi(h)) != rhs)
        return fail(witness, "lambda=" + std::to_string(lam) + " x=" + render_dist(h));
    }
  return true;
}

bool check_assoc(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(cfg.rank, cfg.p);
  int n = cfg.sampled ? 40 : 150;
  *params = cfg_str(cfg, "triples=" + std::to_string(n));
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < n; ++t) {
    DistElem x = rand_mono(d, 2 * cfg.p, rng), y = rand_mono(d, 2 * cfg.p, rng),
             z = rand_mono(d, 2 * cfg.p, rng);
    if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
      return fail(witness, "x=" + render_dist(x) + " y=" + render_dist(y) + " z=" + render_dist(z));
  }
  return true;
}

bool check_lemma37(const RunConfig& cfg, std::string* witness, std::string* params) {
  *params = cfg_str(cfg, "r<=3 rank in {1,2}");
  for (int l : {1, 2}) {
    RootDatum d(l, cfg.p);
    for (int i = 0; i < l; ++i)
      for (int r = 1; r <= 3; ++r) {
        Lemma37Report rep = lemma37_check(d, i, r);
        if (!rep.ok)
          return fail(witness, "rank=" + std::to_string(l) + " i=" + std::to_string(i) +
                                   " r=" + std::to_string(r) + ": " + rep.detail);
      }
  }
  return true;
}

bool check_faithful(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  int pairs = cfg.sampled ? 200 : 1000;
  *params = cfg_str(cfg, "pairs=" + std::to_string(pairs) + " on nabla(n), n<=" +
                             std::to_string(4 * cfg.p));
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < pairs; ++t) {
    long long n = (long long)(rng() % (4 * cfg.p + 1));
    WtModule m = module_nabla(d, {n});
    DistElem x = rand_mono(d, 2 * cfg.p, rng), y = rand_mono(d, 2 * cfg.p, rng);
    if (!(act(m, multiply(x, y)) == mat_mul(act(m, x), act(m, y))))
      return fail(witness, "n=" + std::to_string(n) + " x=" + render_dist(x) +
                               " y=" + render_dist(y));
  }
  return true;
}

// --- contraction suite ---

bool check_contract_table(const RunConfig& cfg, std::string* witness, std::string* params) {
  const int p = cfg.p;
  RootDatum d(1, p);
  *params = cfg_str(cfg);
  std::mt19937_64 rng(cfg.seed);
  auto L = [&](long long n) { return module_simple(d, {n}); };
  if (p == 2) {
    if (!is_isomorphic(contract_module(module_nabla(d, {2})), direct_sum(L(1), L(0)), rng))
      return fail(witness, "nabla(2)^phi != L(1)+L(0)");
    if (!is_isomorphic(contract_module(module_delta(d, {2})), direct_sum(L(1), L(0)), rng))
      return fail(witness, "Delta(2)^phi != L(1)+L(0)");
    if (!is_isomorphic(frobenius_twist(contract_module(module_nabla(d, {2}))),
                       direct_sum(L(2), L(0)), rng))
      return fail(witness, "(nabla(2)^phi)^[1] != L(2)+L(0)");
    for (long long n : {1LL, 2LL})
      if (contract_module(tensor(module_steinberg(d), frobenius_twist(module_nabla(d, {n})))).dim() != 0)
        return fail(witness, "(St x nabla(" + std::to_string(n) + ")^[1])^phi != 0");
  } else {
    if (!is_isomorphic(contract_module(module_nabla(d, {p})), L(1), rng))
      return fail(witness, "nabla(p)^phi != L(1)");
    if (!is_isomorphic(contract_module(module_delta(d, {p})), L(1), rng))
      return fail(witness, "Delta(p)^phi != L(1)");
    if (p >= 5) {
      auto cf = composition_factors(module_nabla(d, {p}));
      if (cf.find({1}) != cf.end()) return fail(witness, "L(1) is a factor of nabla(p)");
    }
    for (WtModule m : {module_nabla(d, {1}), module_nabla(d, {2}), L(2)})
      if (!is_isomorphic(contract_module(tensor(module_steinberg(d), frobenius_twist(m))), m, rng))
        return fail(witness, "(St x M^[1])^phi != M");
  }
  for (long long n = 0; n <= 2 * p; ++n) {
    WtModule m = module_nabla(d, {n});
    if (!is_isomorphic(contract_module(frobenius_twist(m)), m, rng))
      return fail(witness, "(nabla(" + std::to_string(n) + ")^[1])^phi != nabla");
  }
  return true;
}

bool check_contract_dim(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  *params = cfg_str(cfg, "n<=" + std::to_string(4 * cfg.p));
  for (long long n = 0; n <= 4 * cfg.p; ++n) {
    WtModule m = module_nabla(d, {n});
    long long pdiv = 0;
    for (auto& w : m.wts) pdiv += w[0] % cfg.p == 0 ? 1 : 0;
    if (contract_module(m).dim() != pdiv) return fail(witness, "n=" + std::to_string(n));
  }
  return true;
}

bool check_weyl_contract(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  *params = cfg_str(cfg, "n<=" + std::to_string(4 * cfg.p));
  for (long long n = 0; n <= 4 * cfg.p; ++n) {
    WtModule c = contract_module(module_nabla(d, {n}));
    if (c.dim() == 0) continue;
    FpMat w = group_word_action(c, simple_reflection_word(0));
    for (int j = 0; j < c.dim(); ++j)
      for (int i = 0; i < c.dim(); ++i)
        if (w.at(i, j) && !(c.wts[size_t(i)] == weight_scale(c.wts[size_t(j)], -1)))
          return fail(witness, "n=" + std::to_string(n) + " basis " + std::to_string(j));
  }
  return true;
}

// --- induction suite ---

bool check_induce_dim(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  *params = cfg_str(cfg, "n<=" + std::to_string(4 * cfg.p));
  for (long long n = 0; n <= 4 * cfg.p; ++n)
    if (induce(module_line(d, {n})).mod.dim() != n + 1)
      return fail(witness, "dim induce(" + std::to_string(n) + ") wrong");
  if (induce(module_line(d, {-1})).mod.dim() != 0) return fail(witness, "induce(-1) != 0");
  return true;
}

bool check_adjunction(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  const int p = cfg.p;
  *params = cfg_str(cfg, "5 pairs");
  struct Pair { WtModule q, m; };
  std::vector<Pair> pairs = {
      {module_nabla(d, {p}), restrict_to_b(module_nabla(d, {p}))},
      {module_delta(d, {1}), module_line(d, {1})},
      {module_trivial(d), module_line(d, {0})},
      {module_steinberg(d), module_line(d, {p - 1})},
      {module_nabla(d, {2}), module_b_two_dim(d)},
  };
  for (size_t k = 0; k < pairs.size(); ++k) {
    AdjunctionReport rep = adjunction_check(pairs[k].q, pairs[k].m);
    if (!rep.ok) return fail(witness, "pair " + std::to_string(k));
  }
  return true;
}

bool check_thm36_battery(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  long long lmax = cfg.p <= 3 ? 2 * cfg.p : cfg.p;
  long long nmax = cfg.p <= 3 ? cfg.p : 2;
  *params = cfg_str(cfg, "|lambda|<=" + std::to_string(lmax) + " nabla n<=" + std::to_string(nmax));
  std::string why;
  for (long long lam = -lmax; lam <= lmax; ++lam)
    if (!check_thm36(module_line(d, {lam}), &why))
      return fail(witness, "line(" + std::to_string(lam) + "): " + why);
  for (long long n = 0; n <= nmax; ++n)
    if (!check_thm36(restrict_to_b(module_nabla(d, {n})), &why))
      return fail(witness, "nabla(" + std::to_string(n) + ")|_B: " + why);
  if (!check_thm36(module_b_two_dim(d), &why)) return fail(witness, "b_two_dim: " + why);
  return true;
}

bool check_thm310_battery(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  long long lmax = cfg.p <= 3 ? 2 * cfg.p : cfg.p;
  long long nmax = cfg.p <= 3 ? cfg.p : 2;
  *params = cfg_str(cfg, "|lambda|<=" + std::to_string(lmax) + " nabla n<=" + std::to_string(nmax));
  for (long long lam = -lmax; lam <= lmax; ++lam) {
    Thm310Report rep = check_thm310(module_line(d, {lam}));
    if (!rep.ok) return fail(witness, "line(" + std::to_string(lam) + "): " + rep.why);
  }
  for (long long n = 0; n <= nmax; ++n) {
    Thm310Report rep = check_thm310(restrict_to_b(module_nabla(d, {n})));
    if (!rep.ok) return fail(witness, "nabla(" + std::to_string(n) + ")|_B: " + rep.why);
  }
  Thm310Report rep = check_thm310(module_b_two_dim(d));
  if (!rep.ok) return fail(witness, "b_two_dim: " + rep.why);
  return true;
}

bool check_psi_b(const RunConfig& cfg, std::string* witness, std::string* params) {
  RootDatum d(1, cfg.p);
  *params = cfg_str(cfg);
  std::string why;
  for (long long lam : {0LL, 1LL, (long long)cfg.p})
    if (!psi_b_check(module_line(d, {lam}), 3 * cfg.p, &why))
      return fail(witness, "line(" + std::to_string(lam) + "): " + why);
  return true;
}

bool check_rem35(const RunConfig& cfg, std::string* witness, std::string* params) {
  const int p = cfg.p;
  RootDatum d(1, p);
  *params = cfg_str(cfg);
  // (i) contract_B of a non-p-divisible line vanishes, so Psi's target is 0
  for (long long lam = 1; lam < p; ++lam)
    if (contract_module(module_line(d, {lam})).dim() != 0)
      return fail(witness, "contract of line(" + std::to_string(lam) + ") nonzero");
  if (p == 2) return true;  // every weight of induce(line(2m)) is p-divisible at p=2... not at odd p:
  // (ii) functionals of non-p-divisible weight are killed by x -> phi(x)
  InducedModule ind = induce(module_line(d, {p}));
  for (int j = 0; j < ind.mod.dim(); ++j) {
    if (ind.mod.wts[size_t(j)][0] % p == 0) continue;
    std::vector<int> f(size_t(ind.amb_dim()), 0);
    for (int r = 0; r < ind.carrier.rows; ++r) f[size_t(r)] = ind.carrier.at(r, j);
    for (long long n = 0; n <= ind.nmax[0]; ++n) {
      std::vector<int> v = apply_functional(ind, f, phi(gen_E(d, 0, int(n))));
      for (int c : v)
        if (c) return fail(witness, "Psi f != 0 for weight " +
                                        std::to_string(ind.mod.wts[size_t(j)][0]));
    }
  }
  return true;
}

// --- flag suite ---

long long flag_degree(const RunConfig& cfg) { return effective_degree(cfg); }

bool check_psia_models(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long D = flag_degree(cfg);
  *params = cfg_str(cfg, "D=" + std::to_string(D));
  FlagRing r(cfg.p, D);
  if (!psi_a_models_agree(r, witness)) return false;
  if (cfg.rank >= 2 && !psi_a_rank2_check(cfg.p, std::min(D / cfg.p, 2LL), witness)) return false;
  return true;
}

bool check_psia_frobenius(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long D = flag_degree(cfg);
  *params = cfg_str(cfg, "D=" + std::to_string(D));
  FlagRing r(cfg.p, D);
  return psi_a_frobenius_linear(r, witness);
}

bool check_psia_semiinv(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long D = std::min(flag_degree(cfg), 3LL * cfg.p);
  *params = cfg_str(cfg, "D=" + std::to_string(D));
  FlagRing r(cfg.p, D);
  return psi_a_semi_invariant(r, Gen::E, witness) && psi_a_semi_invariant(r, Gen::F, witness);
}

bool check_theta(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long D = flag_degree(cfg);
  *params = cfg_str(cfg, "D=" + std::to_string(D));
  FlagRing r(cfg.p, D);
  if (!theta_glue_check(r, witness)) return false;
  if (!theta_splits_check(r, witness)) return false;
  if (!theta_scale_independent(r, witness)) return false;
  if (!theta_g_equivariance_fails(r)) return fail(witness, "missing naive-equivariance witness");
  return true;
}

bool check_schubert(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long D = flag_degree(cfg);
  *params = cfg_str(cfg, "D=" + std::to_string(D));
  FlagRing r(cfg.p, D);
  if (!schubert_models_agree(r, witness)) return false;
  return theta_compatibility_check(r, witness);
}

bool check_f0(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long mmax = std::max(0LL, (flag_degree(cfg) - 2 * (cfg.p - 1)) / cfg.p);
  *params = cfg_str(cfg, "m<=" + std::to_string(mmax));
  return f0_splitting_check(cfg.p, mmax, witness);
}

bool check_sigma(const RunConfig& cfg, std::string* witness, std::string* params) {
  long long D = std::min(flag_degree(cfg), 3LL * cfg.p);
  *params = cfg_str(cfg, "D=" + std::to_string(D));
  FlagRing r(cfg.p, D);
  SigmaReport rep = sigma_checks(r);
  if (!rep.ok) return fail(witness, rep.why);
  return true;
}

}  // namespace

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"phi-multiplicative", "Thm 1.4", "hyperalg", check_phi_multiplicative},
      {"phi-splits-fr", "Thm 1.4", "hyperalg", check_phi_splits_fr},
      {"mu0-idempotent", "§1.4", "hyperalg", check_mu0},
      {"chi-phi-torus", "Lemma 2.1", "hyperalg", check_chi_phi},
      {"associativity", "§1.3", "hyperalg", check_assoc},
      {"lemma37-certificates", "Lemma 3.7", "hyperalg", check_lemma37},
      {"faithful-on-nabla", "§2.1", "hyperalg", check_faithful},
      {"contract-table", "§2.3", "contraction", check_contract_table},
      {"contract-dim", "Lemma 2.1", "contraction", check_contract_dim},
      {"weyl-on-contraction", "Lemma 2.2", "contraction", check_weyl_contract},
      {"induce-dim", "§3.1", "induction", check_induce_dim},
      {"ev-adjunction", "§3.1", "induction", check_adjunction},
      {"splitting-diagram", "Thm 3.6", "induction", check_thm36_battery},
      {"f0-diagram", "Thm 3.10", "induction", check_thm310_battery},
      {"psi-b-level", "Prop 3.3", "induction", check_psi_b},
      {"weight-kill", "Rem 3.5", "induction", check_rem35},
      {"psia-model-agreement", "§4.1", "flag", check_psia_models},
      {"psia-frobenius-linear", "§4.1", "flag", check_psia_frobenius},
      {"psia-semi-invariant", "§4.1", "flag", check_psia_semiinv},
      {"theta-charts", "§4.2", "flag", check_theta},
      {"schubert-compatible", "Thm 4.4", "flag", check_schubert},
      {"f0-splitting", "Thm 4.3", "flag", check_f0},
      {"sigma-steinberg", "§4.5", "flag", check_sigma},
  };
  return entries;
}

long long effective_degree(const RunConfig& cfg) {
  long long d = cfg.max_degree > 0 ? cfg.max_degree : 3LL * cfg.p;
  return std::min(d, 8LL * cfg.p);
}

void validate_config(const RunConfig& cfg) {
  if (cfg.p < 2 || cfg.p > 13) throw std::invalid_argument("p must be a prime in [2, 13]");
  PrimeModulus guard(cfg.p);
  if (cfg.rank < 1 || cfg.rank > 4) throw std::invalid_argument("rank must be in [1, 4]");
  if (cfg.max_degree < 0) throw std::invalid_argument("max-degree must be nonnegative");
}

std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg) {
  validate_config(cfg);
  std::vector<CheckResult> out;
  for (auto& e : registry()) {
    if (suite != "all" && suite != e.suite) continue;
    CheckResult r;
    r.name = e.name;
    r.paper_anchor = e.paper_anchor;
    auto t0 = std::chrono::steady_clock::now();
    r.pass = e.run(cfg, &r.witness, &r.parameters);
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace frob
