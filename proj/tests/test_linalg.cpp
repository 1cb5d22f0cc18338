#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "frobsplit/linalg.hpp"

using namespace frob;

namespace {

FpMat random_mat(int p, int r, int c, std::mt19937_64& rng) {
  FpMat m(p, r, c);
  for (auto& x : m.a) x = int(rng() % p);
  return m;
}

}  // namespace

TEST_CASE("basic matrix algebra") {
  FpMat a(5, 2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
  CHECK(mat_add(a, mat_scale(a, 4)).is_zero());  // a + (-1)a
  CHECK(mat_mul(FpMat::identity(5, 2), a) == a);
  CHECK(mat_transpose(mat_transpose(a)) == a);
  CHECK(mat_pow(a, 0) == FpMat::identity(5, 2));
  CHECK(mat_pow(a, 3) == mat_mul(a, mat_mul(a, a)));
  FpMat h = mat_hstack(a, a);
  CHECK(h.cols == 4);
  CHECK(mat_vstack(a, a).rows == 4);
  CHECK(mat_block_diag(a, a).rows == 4);
  CHECK(mat_apply(a, {1, 1}) == std::vector<int>{3, 2});
  // Kronecker product dimensions and a sample entry
  FpMat k = mat_kron(a, a);
  CHECK(k.rows == 4);
  CHECK(k.at(3, 3) == mul_mod(4, 4, 5));
}

TEST_CASE("rref, rank, kernel, solve, inverse") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 25; ++trial) {
      FpMat m = random_mat(p, 5, 7, rng);
      FpMat k = kernel_basis(m);
      CHECK(rank(m) + k.cols == m.cols);
      CHECK(mat_mul(m, k).is_zero());
      FpMat ln = left_nullspace(m);
      CHECK(mat_mul(ln, m).is_zero());
      CHECK(ln.rows == m.rows - rank(m));
      FpMat cs = column_space_basis(m);
      CHECK(cs.cols == rank(m));
      CHECK(subspace_contained(m, cs));
      CHECK(same_column_space(m, cs));
      // a consistent system solves exactly
      FpMat x = random_mat(p, 7, 2, rng);
      FpMat b = mat_mul(m, x);
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(mat_mul(m, *sol) == b);
    }
    // inverse on a random invertible matrix (identity + strictly upper)
    FpMat u = FpMat::identity(p, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) u.at(i, j) = int(rng() % p);
    auto ui = inverse(u);
    REQUIRE(ui.has_value());
    CHECK(mat_mul(u, *ui) == FpMat::identity(p, 6));
    CHECK(!inverse(FpMat(p, 3, 3)).has_value());
  }
}

TEST_CASE("inconsistent systems are rejected") {
  FpMat m(3, 2, 1);
  m.at(0, 0) = 1; m.at(1, 0) = 1;
  FpMat b(3, 2, 1);
  b.at(0, 0) = 1; b.at(1, 0) = 2;
  CHECK(!solve(m, b).has_value());
}

TEST_CASE("column space intersection") {
  std::mt19937_64 rng(11);
  for (int p : {2, 5}) {
    FpMat x = random_mat(p, 6, 3, rng), y = random_mat(p, 6, 4, rng);
    FpMat z = column_space_intersect(x, y);
    CHECK(subspace_contained(z, x));
    CHECK(subspace_contained(z, y));
    CHECK(rank(mat_hstack(x, y)) == rank(x) + rank(y) - z.cols);
  }
}

TEST_CASE("polynomial matrices") {
  std::mt19937_64 rng(3);
  FpMat a = random_mat(3, 4, 4, rng), b = random_mat(3, 4, 4, rng);
  PolyMat pa = poly_mat_from_scalar(a), pb = poly_mat_from_scalar(b);
  CHECK(poly_mat_equal(poly_mat_mul(pa, pb), poly_mat_from_scalar(mat_mul(a, b))));
  CHECK(poly_mat_equal(poly_mat_mul(poly_mat_identity(3, 4), pa), pa));
  if (!(a == b)) CHECK_FALSE(poly_mat_equal(pa, pb));
}
