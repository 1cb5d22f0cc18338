#pragma once
// Exact dense linear algebra over F_p.

#include <optional>
#include <vector>

#include "frobsplit/fparith.hpp"

namespace frob {

struct FpMat {
  int p = 2;
  int rows = 0, cols = 0;
  std::vector<int> a;  // row-major

  FpMat() = default;
  FpMat(int prime, int r, int c) : p(prime), rows(r), cols(c), a(size_t(r) * c, 0) {}

  int& at(int r, int c) { return a[size_t(r) * cols + c]; }
  int at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static FpMat identity(int prime, int n);
  static FpMat zero(int prime, int r, int c) { return FpMat(prime, r, c); }

  bool is_zero() const;
  bool operator==(const FpMat& o) const { return p == o.p && rows == o.rows && cols == o.cols && a == o.a; }
};

FpMat mat_add(const FpMat& x, const FpMat& y);
FpMat mat_sub(const FpMat& x, const FpMat& y);
FpMat mat_mul(const FpMat& x, const FpMat& y);
FpMat mat_scale(const FpMat& x, int s);
FpMat mat_transpose(const FpMat& x);
FpMat mat_kron(const FpMat& x, const FpMat& y);
FpMat mat_pow(const FpMat& x, int e);
FpMat mat_hstack(const FpMat& x, const FpMat& y);
FpMat mat_vstack(const FpMat& x, const FpMat& y);
FpMat mat_block_diag(const FpMat& x, const FpMat& y);
std::vector<int> mat_apply(const FpMat& x, const std::vector<int>& v);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(FpMat& m);
int rank(FpMat m);

// Columns form a basis of { v : m v = 0 }.
FpMat kernel_basis(const FpMat& m);
// Rows form a basis of { w : w m = 0 }.
FpMat left_nullspace(const FpMat& m);
// Columns form a basis of the column space.
FpMat column_space_basis(const FpMat& m);

// Solve m x = b (b may have several columns); nullopt if inconsistent.
std::optional<FpMat> solve(const FpMat& m, const FpMat& b);
std::optional<FpMat> inverse(const FpMat& m);

// Does col(x) lie inside col(y)?
bool subspace_contained(const FpMat& x, const FpMat& y);
bool same_column_space(const FpMat& x, const FpMat& y);
// Basis of col(x) ∩ col(y).
FpMat column_space_intersect(const FpMat& x, const FpMat& y);

// Matrices with DensePoly entries (formal-parameter group actions).
using PolyMat = std::vector<std::vector<DensePoly>>;
PolyMat poly_mat_identity(int p, int n);
PolyMat poly_mat_mul(const PolyMat& x, const PolyMat& y);
PolyMat poly_mat_from_scalar(const FpMat& x);
bool poly_mat_equal(const PolyMat& x, const PolyMat& y);

}  // namespace frob
