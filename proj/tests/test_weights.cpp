#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "frobsplit/weights.hpp"

using namespace frob;

TEST_CASE("root datum and distinguished weights") {
  RootDatum d1(1, 2), d2(2, 3);
  CHECK(rho(d1) == Weight{1});
  CHECK(rho(d2) == Weight{1, 1});
  CHECK(steinberg_weight(d1) == Weight{1});
  CHECK(steinberg_weight(d2) == Weight{2, 2});
  CHECK(two_p_minus_one_rho(d2) == Weight{4, 4});
  CHECK_THROWS(RootDatum(1, 6));
  CHECK_THROWS(RootDatum(0, 2));
}

TEST_CASE("weight vector arithmetic") {
  Weight a{2, -1}, b{1, 4};
  CHECK(weight_add(a, b) == Weight{3, 3});
  CHECK(weight_sub(a, b) == Weight{1, -5});
  CHECK(weight_scale(a, -2) == Weight{-4, 2});
  CHECK(is_dominant(Weight{0, 3}));
  CHECK_FALSE(is_dominant(Weight{1, -1}));
}

TEST_CASE("base-p decomposition of weights") {
  auto [l0, l1] = decompose_p({5}, 3);
  CHECK(l0 == Weight{2});
  CHECK(l1 == Weight{1});
  auto [z0, z1] = decompose_p({0, 0}, 5);
  CHECK(z0 == Weight{0, 0});
  CHECK(z1 == Weight{0, 0});
  auto [m0, m1] = decompose_p({-1}, 2);  // -1 = 1 + 2(-1), floor division
  CHECK(m0 == Weight{1});
  CHECK(m1 == Weight{-1});
  for (long long w = -10; w <= 10; ++w)
    for (int p : {2, 3, 5}) {
      auto [w0, w1] = decompose_p({w}, p);
      CHECK(w0[0] + p * w1[0] == w);
      CHECK(w0[0] >= 0);
      CHECK(w0[0] < p);
    }
  CHECK(is_p_divisible({6, -9}, 3));
  CHECK_FALSE(is_p_divisible({6, -8}, 3));
}

TEST_CASE("chi on torus binomials") {
  CHECK(chi_binom({4}, 0, 2, 3) == 0);  // binom(4,2) = 6
  CHECK(chi_binom({7, 2}, 1, 0, 5) == 1);
  CHECK(chi_binom({2}, 0, 2, 2) == 1);  // chi_(p lam)(binom(H; p)) = binom(lam, 1)
  for (long long lam = -6; lam <= 6; ++lam)
    for (long long n = 0; n <= 6; ++n)
      CHECK(chi_binom({lam}, 0, n, 5) == binom_int(lam, n, 5));
}

TEST_CASE("Weyl group action") {
  WeylElement id{{false, false}}, s2{{false, true}}, s1{{true, false}};
  CHECK(weyl_apply(id, {1, 4}) == Weight{1, 4});
  CHECK(weyl_apply(s2, {1, 4}) == Weight{1, -4});
  CHECK(weyl_apply(WeylElement{{true}}, {3}) == Weight{-3});
  // dot action: s . lambda = -lambda - 2 in each flipped slot
  CHECK(weyl_dot(s1, {3, 5}) == Weight{-5, 5});
  CHECK(weyl_dot(id, {3, 5}) == Weight{3, 5});
  // involution
  CHECK(weyl_apply(s2, weyl_apply(s2, {1, 4})) == Weight{1, 4});
}
