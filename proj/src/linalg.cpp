#include "frobsplit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace frob {

FpMat FpMat::identity(int prime, int n) {
  FpMat m(prime, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FpMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

static void check_same_p(const FpMat& x, const FpMat& y) {
  if (x.p != y.p) throw std::invalid_argument("matrix modulus mismatch");
}

FpMat mat_add(const FpMat& x, const FpMat& y) {
  check_same_p(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape mismatch");
  FpMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = add_mod(r.a[i], y.a[i], r.p);
  return r;
}

FpMat mat_sub(const FpMat& x, const FpMat& y) { return mat_add(x, mat_scale(y, x.p - 1)); }

FpMat mat_mul(const FpMat& x, const FpMat& y) {
  check_same_p(x, y);
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  FpMat r(x.p, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = norm_mod(r.at(i, j) + (long long)v * y.at(k, j), r.p);
    }
  return r;
}

FpMat mat_scale(const FpMat& x, int s) {
  FpMat r = x;
  s = norm_mod(s, x.p);
  for (auto& v : r.a) v = mul_mod(v, s, x.p);
  return r;
}

FpMat mat_transpose(const FpMat& x) {
  FpMat r(x.p, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

FpMat mat_kron(const FpMat& x, const FpMat& y) {
  check_same_p(x, y);
  FpMat r(x.p, x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      int v = x.at(i, j);
      if (v == 0) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = mul_mod(v, y.at(k, l), r.p);
    }
  return r;
}

FpMat mat_pow(const FpMat& x, int e) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_pow: square matrix required");
  FpMat r = FpMat::identity(x.p, x.rows), b = x;
  while (e) {
    if (e & 1) r = mat_mul(r, b);
    b = mat_mul(b, b);
    e >>= 1;
  }
  return r;
}

FpMat mat_hstack(const FpMat& x, const FpMat& y) {
  check_same_p(x, y);
  if (x.rows != y.rows) throw std::invalid_argument("mat_hstack: row mismatch");
  FpMat r(x.p, x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

FpMat mat_vstack(const FpMat& x, const FpMat& y) {
  return mat_transpose(mat_hstack(mat_transpose(x), mat_transpose(y)));
}

FpMat mat_block_diag(const FpMat& x, const FpMat& y) {
  check_same_p(x, y);
  FpMat r(x.p, x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
  return r;
}

std::vector<int> mat_apply(const FpMat& x, const std::vector<int>& v) {
  if (int(v.size()) != x.cols) throw std::invalid_argument("mat_apply: length mismatch");
  std::vector<int> r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i) {
    long long s = 0;
    for (int j = 0; j < x.cols; ++j) s += (long long)x.at(i, j) * v[j];
    r[i] = norm_mod(s, x.p);
  }
  return r;
}

std::vector<int> rref(FpMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    int inv = inv_mod(m.at(r, c), m.p);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = mul_mod(m.at(r, j), inv, m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      int f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = norm_mod(m.at(i, j) - (long long)f * m.at(r, j), m.p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(FpMat m) { return int(rref(m).size()); }

FpMat kernel_basis(const FpMat& m) {
  FpMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMat k(m.p, m.cols, int(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k.at(fc, int(f)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      k.at(pivots[r], int(f)) = norm_mod(-(long long)e.at(int(r), fc), m.p);
  }
  return k;
}

FpMat left_nullspace(const FpMat& m) { return mat_transpose(kernel_basis(mat_transpose(m))); }

FpMat column_space_basis(const FpMat& m) {
  FpMat e = m;
  std::vector<int> pivots = rref(e);
  FpMat r(m.p, m.rows, int(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < m.rows; ++i) r.at(i, int(j)) = m.at(i, pivots[j]);
  return r;
}

std::optional<FpMat> solve(const FpMat& m, const FpMat& b) {
  check_same_p(m, b);
  if (m.rows != b.rows) throw std::invalid_argument("solve: shape mismatch");
  FpMat aug = mat_hstack(m, b);
  std::vector<int> pivots = rref(aug);
  // inconsistent if any pivot falls in the b block
  for (int c : pivots)
    if (c >= m.cols) return std::nullopt;
  FpMat x(m.p, m.cols, b.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols; ++j) x.at(pivots[r], j) = aug.at(int(r), m.cols + j);
  return x;
}

std::optional<FpMat> inverse(const FpMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
  auto x = solve(m, FpMat::identity(m.p, m.rows));
  if (!x) return std::nullopt;
  if (!(mat_mul(m, *x) == FpMat::identity(m.p, m.rows))) return std::nullopt;
  return x;
}

bool subspace_contained(const FpMat& x, const FpMat& y) {
  if (x.cols == 0) return true;
  auto s = solve(y, x);
  return s.has_value();
}

bool same_column_space(const FpMat& x, const FpMat& y) {
  return subspace_contained(x, y) && subspace_contained(y, x);
}

FpMat column_space_intersect(const FpMat& x, const FpMat& y) {
  // v in both spans: v = x a = y b; kernel of [x | -y] gives (a, b).
  if (x.cols == 0 || y.cols == 0) return FpMat(x.p, x.rows, 0);
  FpMat k = kernel_basis(mat_hstack(x, mat_scale(y, x.p - 1)));
  FpMat a(x.p, x.cols, k.cols);
  for (int i = 0; i < x.cols; ++i)
    for (int j = 0; j < k.cols; ++j) a.at(i, j) = k.at(i, j);
  return column_space_basis(mat_mul(x, a));
}

PolyMat poly_mat_identity(int p, int n) {
  PolyMat m(n, std::vector<DensePoly>(n, DensePoly(p)));
  for (int i = 0; i < n; ++i) m[i][i] = DensePoly::constant(p, 1);
  return m;
}

PolyMat poly_mat_mul(const PolyMat& x, const PolyMat& y) {
  size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
  if (x.empty() || x[0].size() != k) throw std::invalid_argument("poly_mat_mul: shape mismatch");
  int p = x[0][0].p;
  PolyMat r(n, std::vector<DensePoly>(m, DensePoly(p)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (x[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        r[i][j] = poly_add(r[i][j], poly_mul(x[i][t], y[t][j]));
    }
  return r;
}

PolyMat poly_mat_from_scalar(const FpMat& x) {
  PolyMat r(x.rows, std::vector<DensePoly>(x.cols, DensePoly(x.p)));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i][j] = DensePoly::constant(x.p, x.at(i, j));
  return r;
}

bool poly_mat_equal(const PolyMat& x, const PolyMat& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != y[i].size()) return false;
    for (size_t j = 0; j < x[i].size(); ++j)
      if (!(x[i][j] == y[i][j])) return false;
  }
  return true;
}

}  // namespace frob
