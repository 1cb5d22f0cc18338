#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "frobsplit/gmod.hpp"

using namespace frob;

namespace {

PBWMono random_mono(const RootDatum& d, int emax, std::mt19937_64& rng) {
  PBWMono m(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    m.a[size_t(i)] = int(rng() % (emax + 1));
    m.b[size_t(i)] = int(rng() % (emax + 1));
    m.c[size_t(i)] = int(rng() % (emax + 1));
  }
  return m;
}

}  // namespace

TEST_CASE("constructors: dimensions and validity") {
  std::string why;
  for (int p : {2, 3, 5}) {
    RootDatum d(1, p);
    for (long long n = 0; n <= 2 * p; ++n) {
      CHECK(module_delta(d, {n}).dim() == n + 1);
      CHECK(module_nabla(d, {n}).dim() == n + 1);
      CHECK_MESSAGE(validate_module(module_delta(d, {n}), 2 * p, &why), why);
      CHECK_MESSAGE(validate_module(module_nabla(d, {n}), 2 * p, &why), why);
      CHECK_MESSAGE(validate_module(module_simple(d, {n}), 2 * p, &why), why);
    }
    CHECK(module_steinberg(d).dim() == p);
    CHECK(module_simple(d, {1}).dim() == 2);
  }
  CHECK(module_simple(RootDatum(1, 2), {2}).dim() == 2);  // L(2) = L(1)^[1]
  CHECK(module_simple(RootDatum(1, 3), {3}).dim() == 2);
  RootDatum d2(2, 3);
  CHECK(module_delta(d2, {1, 2}).dim() == 6);
  CHECK_MESSAGE(validate_module(module_nabla(d2, {2, 1}), 6, &why), why);
  CHECK_MESSAGE(validate_module(module_b_two_dim(RootDatum(1, 3)), 6, &why), why);
  CHECK(dim_simple(d2, {1, 1}) == 4);
}

TEST_CASE("divided powers: digits, nilpotence, reconstruction") {
  for (int p : {2, 3}) {
    RootDatum d(1, p);
    WtModule m = module_delta(d, {p});
    CHECK(divided_power_action(m, Gen::E, 0, 0) == FpMat::identity(p, m.dim()));
    FpMat e1 = divided_power_action(m, Gen::E, 0, 1);
    CHECK(mat_pow(e1, p).is_zero());                        // E^p = 0
    CHECK_FALSE(divided_power_action(m, Gen::E, 0, p).is_zero());  // E^(p) != 0
    // merge rule as matrices: E^(a) E^(b) = binom(a+b,a) E^(a+b)
    for (long long a = 1; a <= p; ++a)
      for (long long b = 1; b <= p; ++b)
        CHECK(mat_mul(divided_power_action(m, Gen::E, 0, a), divided_power_action(m, Gen::E, 0, b)) ==
              mat_scale(divided_power_action(m, Gen::E, 0, a + b), binom_int(a + b, a, p)));
  }
}

TEST_CASE("tensor, twist, duals") {
  RootDatum d(1, 3);
  WtModule d1 = module_delta(d, {1});
  Character cg = character(tensor(d1, d1));
  Character expect = character(module_delta(d, {2}));
  ++expect[{0}];
  CHECK(cg == expect);
  std::mt19937_64 rng(2);
  CHECK(is_isomorphic(tensor(d1, module_trivial(d)), d1, rng));
  WtModule tw = frobenius_twist(module_simple(d, {1}));
  CHECK(character(tw) == Character{{{3}, 1}, {{-3}, 1}});
  CHECK(divided_power_action(tw, Gen::E, 0, 1).is_zero());
  CHECK(is_isomorphic(dual_module(module_delta(d, {3})), module_nabla(d, {3}), rng));
  CHECK(is_isomorphic(dual_module(module_steinberg(d)), module_steinberg(d), rng));
}

TEST_CASE("contraction: the worked table") {
  std::mt19937_64 rng(4);
  RootDatum d2(1, 2), d3(1, 3);
  auto L = [](const RootDatum& d, long long n) { return module_simple(d, {n}); };
  CHECK(is_isomorphic(contract_module(module_nabla(d2, {2})), direct_sum(L(d2, 1), L(d2, 0)), rng));
  CHECK(is_isomorphic(contract_module(module_delta(d2, {2})), direct_sum(L(d2, 1), L(d2, 0)), rng));
  CHECK(is_isomorphic(frobenius_twist(contract_module(module_nabla(d2, {2}))),
                      direct_sum(L(d2, 2), L(d2, 0)), rng));
  CHECK(is_isomorphic(contract_module(module_nabla(d3, {3})), L(d3, 1), rng));
  CHECK(is_isomorphic(contract_module(module_delta(d3, {3})), L(d3, 1), rng));
  for (int p : {5, 7}) {
    RootDatum d(1, p);
    CHECK(is_isomorphic(contract_module(module_nabla(d, {p})), L(d, 1), rng));
    auto cf = composition_factors(module_nabla(d, {p}));
    CHECK(cf.find({1}) == cf.end());  // L(1) is not a factor of nabla(p)
  }
  // (St (x) M^[1])^phi: zero at p=2, M itself at odd p
  for (WtModule m : {module_nabla(d2, {1}), module_nabla(d2, {2})})
    CHECK(contract_module(tensor(module_steinberg(d2), frobenius_twist(m))).dim() == 0);
  for (int p : {3, 5}) {
    RootDatum d(1, p);
    for (WtModule m : {module_nabla(d, {1}), module_nabla(d, {2}), L(d, 2)})
      CHECK(is_isomorphic(contract_module(tensor(module_steinberg(d), frobenius_twist(m))), m, rng));
  }
  // twist then contract is the identity, and contraction dimensions (Lemma 2.1)
  for (int p : {2, 3}) {
    RootDatum d(1, p);
    for (long long n = 0; n <= 3 * p; ++n) {
      WtModule m = module_nabla(d, {n});
      CHECK(is_isomorphic(contract_module(frobenius_twist(m)), m, rng));
      long long pdiv = 0;
      for (auto& w : m.wts) pdiv += w[0] % p == 0 ? 1 : 0;
      CHECK(contract_module(m).dim() == pdiv);
    }
  }
}

TEST_CASE("group words and the Weyl action on contracted modules") {
  RootDatum d(1, 3);
  WtModule d1 = module_delta(d, {1});
  FpMat u = group_word_action(d1, {{0, 0, 1, false}});  // x_alpha(1)
  CHECK(u.at(0, 0) == 1);
  CHECK(u.at(0, 1) == 1);
  CHECK(u.at(1, 0) == 0);
  CHECK(u.at(1, 1) == 1);
  // simple reflection squares to a scalar on each weight line
  FpMat s = group_word_action(d1, simple_reflection_word(0));
  CHECK(mat_mul(s, s) == mat_scale(FpMat::identity(3, 2), 2));  // (-1) id
  // Weyl action maps weight spaces as predicted on contracted modules
  for (int p : {2, 3, 5}) {
    RootDatum dp(1, p);
    for (long long n = 0; n <= 4 * p; ++n) {
      WtModule c = contract_module(module_nabla(dp, {n}));
      if (c.dim() == 0) continue;
      FpMat w = group_word_action(c, simple_reflection_word(0));
      for (int j = 0; j < c.dim(); ++j)
        for (int i = 0; i < c.dim(); ++i)
          if (w.at(i, j)) CHECK(c.wts[size_t(i)] == weight_scale(c.wts[size_t(j)], -1));
    }
  }
}

TEST_CASE("characters and composition factors") {
  RootDatum d3(1, 3);
  auto cf = composition_factors(module_nabla(d3, {3}));
  CHECK(cf == std::map<Weight, long long>{{{3}, 1}, {{1}, 1}});
  CHECK(composition_factors(module_simple(d3, {4})) == std::map<Weight, long long>{{{4}, 1}});
  auto cf2 = composition_factors(module_nabla(RootDatum(1, 2), {2}));
  CHECK(cf2 == std::map<Weight, long long>{{{2}, 1}, {{0}, 1}});
  CHECK(char_simple(d3, {3}) == Character{{{3}, 1}, {{-3}, 1}});
  // character of a twist: weights scaled by p
  WtModule m = module_nabla(d3, {2});
  Character ct = character(frobenius_twist(m));
  for (auto& [w, mult] : character(m)) CHECK(ct[weight_scale(w, 3)] == mult);
}

TEST_CASE("hom spaces and socle certificates") {
  RootDatum d3(1, 3);
  CHECK(hom_space(module_delta(d3, {3}), module_nabla(d3, {3})).size() == 1);
  CHECK(hom_space(module_trivial(d3), module_trivial(d3)).size() == 1);
  CHECK(hom_space(module_simple(d3, {1}), module_nabla(d3, {3})).empty());
  for (int p : {5, 7}) {
    RootDatum d(1, p);
    // (nabla(p)^phi)^[1] = L(p) is the socle of nabla(p)
    WtModule soc = frobenius_twist(contract_module(module_nabla(d, {p})));
    CHECK(hom_space(soc, module_nabla(d, {p})).size() == 1);
  }
  CHECK(rank(canonical_map(d3, {3})) == 2);  // dim L(3)
  CHECK(rank(canonical_map(d3, {2})) == 3);  // Delta(2) simple at p=3
}

TEST_CASE("faithfulness: abstract products against matrices") {
  std::mt19937_64 rng(9);
  for (int p : {2, 3, 5}) {
    RootDatum d(1, p);
    WtModule m = module_nabla(d, {2 * p});
    for (int t = 0; t < 120; ++t) {
      DistElem x = dist_from_mono(d, random_mono(d, 2 * p, rng));
      DistElem y = dist_from_mono(d, random_mono(d, 2 * p, rng));
      CHECK(act(m, multiply(x, y)) == mat_mul(act(m, x), act(m, y)));
    }
  }
  // rank 2
  RootDatum d2(2, 3);
  WtModule m2 = module_delta(d2, {2, 1});
  for (int t = 0; t < 40; ++t) {
    DistElem x = dist_from_mono(d2, random_mono(d2, 4, rng));
    DistElem y = dist_from_mono(d2, random_mono(d2, 4, rng));
    CHECK(act(m2, multiply(x, y)) == mat_mul(act(m2, x), act(m2, y)));
  }
}

TEST_CASE("submodule and restriction") {
  RootDatum d(1, 2);
  WtModule n2 = module_nabla(d, {2});
  // the socle L(2) as a submodule via the canonical map's image
  FpMat img = column_space_basis(canonical_map(d, {2}));
  WtModule sub = submodule(n2, img);
  std::mt19937_64 rng(1);
  CHECK(is_isomorphic(sub, module_simple(d, {2}), rng));
  WtModule b = restrict_to_b(n2);
  CHECK_FALSE(b.is_g);
  CHECK(b.dim() == 3);
  std::string why;
  CHECK_MESSAGE(validate_module(b, 4, &why), why);
}

TEST_CASE("validation catches corrupted modules") {
  RootDatum d(1, 3);
  WtModule m = module_delta(d, {2});
  m.E[0][0].at(1, 0) = 1;  // E must raise weights; this entry lowers
  CHECK_FALSE(validate_module(m, 4, nullptr));
}
