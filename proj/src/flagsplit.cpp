#include "frobsplit/flagsplit.hpp"

#include <stdexcept>

namespace frob {
namespace {

FpMat rows_select(const FpMat& m, const std::vector<int>& idx) {
  FpMat r(m.p, int(idx.size()), m.cols);
  for (int i = 0; i < int(idx.size()); ++i)
    for (int c = 0; c < m.cols; ++c) r.at(i, c) = m.at(idx[size_t(i)], c);
  return r;
}

std::vector<int> column_of(const FpMat& m, int c) {
  std::vector<int> v(size_t(m.rows), 0);
  for (int r = 0; r < m.rows; ++r) v[size_t(r)] = m.at(r, c);
  return v;
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// entrywise p-th root of a matrix of polynomials in eta whose support must
// sit in p-divisible degrees
bool poly_mat_root(int p, const PolyMat& m, PolyMat* out) {
  out->assign(m.size(), std::vector<DensePoly>(m.empty() ? 0 : m[0].size(), DensePoly(p)));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c) {
      const DensePoly& e = m[r][c];
      DensePoly g(p);
      g.c.assign(size_t(e.degree() / p + 1), 0);
      for (int i = 0; i <= e.degree(); ++i) {
        if (i % p == 0)
          g.c[size_t(i / p)] = e.coeff(i);
        else if (e.coeff(i))
          return false;
      }
      g.normalize();
      (*out)[r][c] = g;
    }
  return true;
}

PolyMat poly_mat_substitute(const PolyMat& m, const DensePoly& s) {
  PolyMat r = m;
  for (auto& row : r)
    for (auto& e : row) e = poly_compose(e, s);
  return r;
}

PolyMat poly_mat_add(const PolyMat& x, const PolyMat& y) {
  PolyMat r = x;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = poly_add(r[i][j], y[i][j]);
  return r;
}

PolyMat poly_mat_scale_mono(const FpMat& m, int deg, int coef) {
  PolyMat r(size_t(m.rows), std::vector<DensePoly>(size_t(m.cols), DensePoly(m.p)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j))
        r[size_t(i)][size_t(j)] = DensePoly::monomial(m.p, deg, mul_mod(m.at(i, j), coef, m.p));
  return r;
}

}  // namespace

FlagRing::FlagRing(int prime, long long dmax) : d_(1, prime), dmax_(dmax) {
  if (dmax < 0) throw std::invalid_argument("FlagRing: negative degree bound");
}

const InducedModule& FlagRing::piece(long long m) const {
  if (m < 0 || m > dmax_) throw std::invalid_argument("FlagRing::piece: degree out of range");
  auto it = cache_.find(m);
  if (it == cache_.end()) it = cache_.emplace(m, induce(module_line(d_, {m}))).first;
  return it->second;
}

const FpMat& FlagRing::from_module(long long m) const { return piece(m).carrier; }

const FpMat& FlagRing::to_module(long long m) const {
  auto it = inv_.find(m);
  if (it == inv_.end()) {
    auto iv = inverse(piece(m).carrier);
    if (!iv) throw std::logic_error("FlagRing: carrier not invertible");
    it = inv_.emplace(m, *iv).first;
  }
  return it->second;
}

FpMat FlagRing::amb_gen(long long m, Gen g, long long r) const {
  return mat_mul(from_module(m), mat_mul(divided_power_action(piece(m).mod, g, 0, r), to_module(m)));
}

std::vector<int> form_mul(int p, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = norm_mod(r[i + j] + a[i] * b[j], p);
  return r;
}

std::vector<int> form_pow_p(int p, const std::vector<int>& a) {
  std::vector<int> r(size_t(p) * (a.size() - 1) + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) r[size_t(p) * i] = a[i];
  return r;
}

FpMat mul_matrix(int p, const std::vector<int>& a, long long db) {
  long long da = (long long)a.size() - 1;
  FpMat m(p, int(da + db + 1), int(db + 1));
  for (long long n = 0; n <= da + db; ++n)
    for (long long j = std::max(0LL, n - da); j <= std::min(db, n); ++j)
      m.at(int(n), int(j)) = a[size_t(n - j)];
  return m;
}

FpMat pow_p_matrix(int p, long long m) {
  FpMat r(p, int(p * m + 1), int(m + 1));
  for (long long n = 0; n <= m; ++n) r.at(int(p * n), int(n)) = 1;
  return r;
}

FpMat psi_a_abstract(const FlagRing& r, long long m) {
  const InducedModule& src = r.piece(r.p() * m);
  const InducedModule& tgt = r.piece(m);
  FpMat pm = psi_map(src, tgt);
  FpMat sel = rows_select(r.to_module(r.p() * m), p_divisible_indices(src.mod));
  return mat_mul(r.from_module(m), mat_mul(pm, sel));
}

FpMat psi_a_poly(int p, long long m) {
  FpMat r(p, int(m + 1), int(p * m + 1));
  for (long long n = 0; n <= m; ++n) r.at(int(n), int(p * n)) = 1;
  return r;
}

bool psi_a_models_agree(const FlagRing& r, std::string* why) {
  for (long long m = 0; m <= r.dmax() / r.p(); ++m)
    if (!(psi_a_abstract(r, m) == psi_a_poly(r.p(), m)))
      return fail(why, "psi_A mismatch at degree " + std::to_string(m));
  return true;
}

bool psi_a_frobenius_linear(const FlagRing& r, std::string* why) {
  const int p = r.p();
  for (long long j = 0; j <= r.dmax() / p; ++j)
    for (long long mb = 0; j + mb >= 1 && p * (j + mb) <= r.dmax(); ++mb) {
      FpMat lhs0 = psi_a_abstract(r, j + mb);
      FpMat rhs0 = psi_a_abstract(r, mb);
      for (long long s = 0; s <= j; ++s) {
        std::vector<int> a(size_t(j + 1), 0);
        a[size_t(s)] = 1;
        FpMat lhs = mat_mul(lhs0, mul_matrix(p, form_pow_p(p, a), p * mb));
        FpMat rhs = mat_mul(mul_matrix(p, a, mb), rhs0);
        if (!(lhs == rhs))
          return fail(why, "Frobenius linearity fails at degrees " + std::to_string(j) + "," +
                               std::to_string(mb));
      }
    }
  return true;
}

bool psi_a_rank2_check(int p, long long mmax, std::string* why) {
  RootDatum d(2, p);
  for (long long m1 = 0; m1 <= mmax; ++m1)
    for (long long m2 = 0; m2 <= mmax; ++m2) {
      InducedModule src = induce(module_line(d, {p * m1, p * m2}));
      InducedModule tgt = induce(module_line(d, {m1, m2}));
      auto sinv = inverse(src.carrier);
      if (!sinv) return fail(why, "carrier not invertible");
      FpMat sel = rows_select(*sinv, p_divisible_indices(src.mod));
      FpMat abs = mat_mul(tgt.carrier, mat_mul(psi_map(src, tgt), sel));
      FpMat sub(p, int(tgt.amb_dim()), int(src.amb_dim()));
      for (long long n1 = 0; n1 <= m1; ++n1)
        for (long long n2 = 0; n2 <= m2; ++n2)
          sub.at(int(tgt.amb_index({n1, n2}, 0)), int(src.amb_index({p * n1, p * n2}, 0))) = 1;
      if (!(abs == sub))
        return fail(why, "rank-2 psi_A mismatch at (" + std::to_string(m1) + "," +
                             std::to_string(m2) + ")");
    }
  return true;
}

namespace {

// x_dir(eta^p) . root_p( mat . x_dir(-eta^p) ) as a PolyMat in eta
bool formal_lhs(const WtModule& src, const WtModule& tgt, const FpMat& mat, Gen dir,
                PolyMat* out, std::string* why) {
  const int p = src.d.p;
  int kind = dir == Gen::E ? 0 : 1;
  PolyMat xs = poly_mat_substitute(group_word_action_formal(src, {{kind, 0, 1, true}}),
                                   DensePoly::monomial(p, p, norm_mod(-1, p)));
  PolyMat inner = poly_mat_mul(poly_mat_from_scalar(mat), xs);
  PolyMat rooted;
  if (!poly_mat_root(p, inner, &rooted)) return fail(why, "p-th root obstruction");
  PolyMat xt = poly_mat_substitute(group_word_action_formal(tgt, {{kind, 0, 1, true}}),
                                   DensePoly::monomial(p, p, 1));
  *out = poly_mat_mul(xt, rooted);
  return true;
}

}  // namespace

bool semi_invariance_check(const WtModule& src, const WtModule& tgt, const FpMat& mat,
                           Gen direction, std::string* why) {
  const int p = src.d.p;
  PolyMat lhs;
  if (!formal_lhs(src, tgt, mat, direction, &lhs, why)) return false;
  PolyMat rhs(size_t(mat.rows), std::vector<DensePoly>(size_t(mat.cols), DensePoly(p)));
  for (int rr = 0; rr < p; ++rr) {
    FpMat term = mat_mul(mat, divided_power_action(src, direction, 0, rr));
    rhs = poly_mat_add(rhs, poly_mat_scale_mono(term, rr, rr % 2 ? norm_mod(-1, p) : 1));
  }
  if (!poly_mat_equal(lhs, rhs)) return fail(why, "semi-invariance identity fails");
  return true;
}

bool root_linearity_check(const WtModule& src, const WtModule& tgt, const FpMat& mat,
                          Gen direction, std::string* why) {
  PolyMat lhs;
  if (!formal_lhs(src, tgt, mat, direction, &lhs, why)) return false;
  if (!poly_mat_equal(lhs, poly_mat_from_scalar(mat)))
    return fail(why, "root-subgroup linearity fails");
  return true;
}

bool psi_a_semi_invariant(const FlagRing& r, Gen direction, std::string* why) {
  for (long long m = 1; m <= r.dmax() / r.p(); ++m) {
    FpMat mat_mod = mat_mul(r.to_module(m), mat_mul(psi_a_abstract(r, m), r.from_module(r.p() * m)));
    if (!semi_invariance_check(r.piece(r.p() * m).mod, r.piece(m).mod, mat_mod, direction, why)) {
      if (why) *why += " (degree " + std::to_string(m) + ")";
      return false;
    }
  }
  return true;
}

FpMat theta_chart(const FlagRing& r, bool chart_s, long long scale, long long deg) {
  const int p = r.p();
  long long m = r.dmax() / (p * scale);
  long long M = p * m * scale;
  if (deg > M) throw std::invalid_argument("theta_chart: degree exceeds the covered range");
  FpMat psi = psi_a_abstract(r, m * scale);
  FpMat t(p, int(deg + 1), int(deg + 1));
  for (long long j = 0; j <= deg; ++j)
    for (long long jo = 0; jo <= deg; ++jo) {
      long long row = chart_s ? jo : m * scale - jo;
      long long col = chart_s ? j : M - j;
      if (row >= 0 && row <= m * scale) t.at(int(jo), int(j)) = psi.at(int(row), int(col));
    }
  return t;
}

bool theta_glue_check(const FlagRing& r, std::string* why) {
  long long deg = r.dmax() / r.p() * r.p();
  if (!(theta_chart(r, false, 1, deg) == theta_chart(r, true, 1, deg)))
    return fail(why, "chart rules disagree on the overlap");
  return true;
}

bool theta_splits_check(const FlagRing& r, std::string* why) {
  const int p = r.p();
  long long deg = r.dmax() / p * p;
  for (int s = 0; s < 2; ++s) {
    FpMat t = theta_chart(r, s, 1, deg);
    FpMat pw(p, int(deg + 1), int(deg / p + 1));
    for (long long j = 0; j <= deg / p; ++j) pw.at(int(p * j), int(j)) = 1;
    FpMat comp = mat_mul(t, pw);
    FpMat id(p, int(deg + 1), int(deg / p + 1));
    for (long long j = 0; j <= deg / p; ++j) id.at(int(j), int(j)) = 1;
    if (!(comp == id)) return fail(why, "Theta . p-th power != id on a chart");
  }
  return true;
}

bool theta_scale_independent(const FlagRing& r, std::string* why) {
  const int p = r.p();
  long long deg = r.dmax() / (2 * p) * (2 * p);
  if (deg < 1) return fail(why, "degree bound too small for the scale comparison");
  for (int s = 0; s < 2; ++s)
    if (!(theta_chart(r, s, 1, deg) == theta_chart(r, s, 2, deg)))
      return fail(why, "chart operator depends on the line bundle scale");
  return true;
}

bool theta_g_equivariance_fails(const FlagRing& r) {
  for (long long m = 1; m <= r.dmax() / r.p(); ++m) {
    FpMat psi = psi_a_abstract(r, m);
    FpMat lhs = mat_mul(psi, r.amb_gen(r.p() * m, Gen::E, 1));
    FpMat rhs = mat_mul(r.amb_gen(m, Gen::E, 1), psi);
    if (!(lhs == rhs)) return true;
  }
  return false;
}

FpMat schubert_ideal_perp(const FlagRing& r, bool w_s, bool plus, long long m) {
  const int p = r.p();
  WtModule delta = module_delta(RootDatum(1, p), {m});
  int j0 = -1;
  for (int j = 0; j < delta.dim(); ++j)
    if (delta.wts[size_t(j)][0] == -m) j0 = j;
  std::vector<int> v(size_t(delta.dim()), 0);
  v[size_t(j0)] = 1;
  if (w_s) v = mat_apply(group_word_action(delta, simple_reflection_word(0)), v);
  // span of Dist(U+/-)(w v_-), paired against coefficients:
  // <f, w_j> = (-1)^(m-j) f_(m-j)
  FpMat cond(p, int(m + 1), int(m + 1));
  for (long long rr = 0; rr <= m; ++rr) {
    std::vector<int> s = mat_apply(divided_power_action(delta, plus ? Gen::E : Gen::F, 0, rr), v);
    for (long long n = 0; n <= m; ++n)
      cond.at(int(rr), int(n)) = n % 2 ? norm_mod(-s[size_t(m - n)], p) : s[size_t(m - n)];
  }
  return kernel_basis(cond);
}

FpMat schubert_ideal_poly(int p, bool w_s, bool plus, long long m) {
  // X(e) and X+(s) are the points [1:0] and [0:1]; X(s) and X+(e) are all of P^1
  bool point = (w_s == plus);
  if (!point) return FpMat(p, int(m + 1), 0);
  FpMat b(p, int(m + 1), int(m));
  for (long long n = 0; n < m; ++n) b.at(int(plus ? n : n + 1), int(n)) = 1;
  return b;
}

bool schubert_models_agree(const FlagRing& r, std::string* why) {
  for (long long m = 0; m <= r.dmax(); ++m)
    for (int ws = 0; ws < 2; ++ws)
      for (int pl = 0; pl < 2; ++pl)
        if (!same_column_space(schubert_ideal_perp(r, ws, pl, m), schubert_ideal_poly(r.p(), ws, pl, m)))
          return fail(why, "Schubert ideal mismatch at degree " + std::to_string(m));
  return true;
}

bool theta_compatibility_check(const FlagRing& r, std::string* why) {
  for (long long m = 1; m <= r.dmax() / r.p(); ++m) {
    FpMat psi = psi_a_abstract(r, m);
    std::vector<std::pair<FpMat, FpMat>> cases;
    for (int ws = 0; ws < 2; ++ws)
      for (int pl = 0; pl < 2; ++pl)
        cases.emplace_back(schubert_ideal_perp(r, ws, pl, r.p() * m),
                           schubert_ideal_perp(r, ws, pl, m));
    // scheme union and scheme intersection of the two split points
    FpMat a_pm = schubert_ideal_perp(r, false, false, r.p() * m);
    FpMat b_pm = schubert_ideal_perp(r, true, true, r.p() * m);
    FpMat a_m = schubert_ideal_perp(r, false, false, m);
    FpMat b_m = schubert_ideal_perp(r, true, true, m);
    cases.emplace_back(column_space_intersect(a_pm, b_pm), column_space_intersect(a_m, b_m));
    cases.emplace_back(column_space_basis(mat_hstack(a_pm, b_pm)),
                       column_space_basis(mat_hstack(a_m, b_m)));
    for (size_t k = 0; k < cases.size(); ++k)
      if (!subspace_contained(mat_mul(psi, cases[k].first), cases[k].second))
        return fail(why, "compatibility fails at degree " + std::to_string(m) + ", case " +
                             std::to_string(k));
  }
  return true;
}

bool f0_splitting_check(int p, long long mmax, std::string* why) {
  RootDatum d(1, p);
  for (long long m = 0; m <= mmax; ++m) {
    WtModule src_base = tensor(module_line(d, {2 * (p - 1)}), frobenius_twist(module_line(d, {m})));
    InducedModule src = induce(src_base);
    InducedModule tgt = induce(module_line(d, {m}));
    auto sinv = inverse(src.carrier);
    if (!sinv) return fail(why, "carrier not invertible");
    std::vector<int> f0(size_t(2 * (p - 1) + 1), 0);
    f0[size_t(p - 1)] = 1;  // (xy)^(p-1)
    FpMat g = mat_mul(mul_matrix(p, f0, p * m), pow_p_matrix(p, m));
    FpMat x = rows_select(mat_mul(*sinv, g), p_divisible_indices(src.mod));
    FpMat res = mat_mul(tgt.carrier, mat_mul(psi_rho_map(src, tgt), x));
    if (!(res == FpMat::identity(p, int(m + 1))))
      return fail(why, "Psi_(2(p-1)rho) is not a left inverse at degree " + std::to_string(m));
  }
  return true;
}

FpMat sigma_matrix(const FlagRing& r, long long m) {
  const int p = r.p();
  long long big = p - 1 + p * m;
  const InducedModule& st = r.piece(p - 1);
  const InducedModule& tw = r.piece(p * m);
  const InducedModule& full = r.piece(big);
  // beta: St (x) nabla(m)^[1] -> nabla(p-1+pm), v (x) f -> v f^p, via cup
  FpMat beta(p, int(big + 1), int(p * (m + 1)));
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b <= m; ++b) {
      std::vector<int> fa(size_t(p), 0), gb(size_t(p * m + 1), 0);
      fa[size_t(a)] = 1;
      gb[size_t(p * b)] = 1;
      std::vector<int> col = cup(st, fa, tw, gb, full);
      for (long long n = 0; n <= big; ++n) beta.at(int(n), int(a * (m + 1) + b)) = col[size_t(n)];
    }
  auto binv = inverse(beta);
  if (!binv) throw std::logic_error("sigma_matrix: beta not invertible");
  // mu0 projection (p-divisible weights after the (p-1)rho shift), then the
  // lowest-weight coordinate of the St factor
  FpMat s(p, int(m + 1), int(big + 1));
  for (long long b = 0; b <= m; ++b)
    for (long long n = 0; n <= big; ++n)
      if ((2 * (n + 1)) % p == 0) s.at(int(b), int(n)) = binv->at(int((p - 1) * (m + 1) + b), int(n));
  return s;
}

FpMat sigma_matrix_poly(int p, long long m) {
  FpMat s(p, int(m + 1), int(p - 1 + p * m + 1));
  for (long long b = 0; b <= m; ++b) s.at(int(b), int(p - 1 + p * b)) = 1;
  return s;
}

SigmaReport sigma_checks(const FlagRing& r) {
  const int p = r.p();
  SigmaReport rep;
  rep.models = rep.left_inverse = rep.plus_compatible = rep.minus_compatible = true;
  rep.b_plus_linear = rep.b_semi_invariant = rep.weight_vanishing = true;
  std::vector<int> ylow(size_t(p), 0);
  ylow[size_t(p - 1)] = 1;  // y^(p-1), the lowest-weight Steinberg section
  for (long long m = 0; p - 1 + p * m <= r.dmax(); ++m) {
    long long big = p - 1 + p * m;
    FpMat s = sigma_matrix(r, m);
    if (!(s == sigma_matrix_poly(p, m))) {
      rep.models = false;
      rep.why = "sigma model mismatch at degree " + std::to_string(m);
    }
    FpMat push = mul_matrix(p, ylow, p * m);  // f -> y^(p-1) f : A_pm -> A_big
    if (!(mat_mul(s, mat_mul(push, pow_p_matrix(p, m))) == FpMat::identity(p, int(m + 1)))) {
      rep.left_inverse = false;
      rep.why = "sigma(y^(p-1) f^p) != f at degree " + std::to_string(m);
    }
    FpMat tau = mat_mul(s, push);
    for (int ws = 0; ws < 2; ++ws) {
      if (!subspace_contained(mat_mul(s, schubert_ideal_perp(r, ws, true, big)),
                              schubert_ideal_perp(r, ws, true, m))) {
        rep.plus_compatible = false;
        rep.why = "sigma not compatible with X+ at degree " + std::to_string(m);
      }
      if (!subspace_contained(mat_mul(tau, schubert_ideal_perp(r, ws, false, p * m)),
                              schubert_ideal_perp(r, ws, false, m))) {
        rep.minus_compatible = false;
        rep.why = "sigma . y^(p-1) not compatible with X at degree " + std::to_string(m);
      }
    }
    FpMat a_pm = schubert_ideal_perp(r, false, false, p * m);
    FpMat b_pm = schubert_ideal_perp(r, true, true, p * m);
    FpMat a_m = schubert_ideal_perp(r, false, false, m);
    FpMat b_m = schubert_ideal_perp(r, true, true, m);
    if (!subspace_contained(mat_mul(tau, column_space_intersect(a_pm, b_pm)),
                            column_space_intersect(a_m, b_m)) ||
        !subspace_contained(mat_mul(tau, column_space_basis(mat_hstack(a_pm, b_pm))),
                            column_space_basis(mat_hstack(a_m, b_m)))) {
      rep.minus_compatible = false;
      rep.why = "sigma . y^(p-1) not compatible with union/intersection at degree " +
                std::to_string(m);
    }
    FpMat s_mod = mat_mul(r.to_module(m), mat_mul(s, r.from_module(big)));
    std::string w;
    if (!root_linearity_check(r.piece(big).mod, r.piece(m).mod, s_mod, Gen::E, &w)) {
      rep.b_plus_linear = false;
      rep.why = w + " (sigma, degree " + std::to_string(m) + ")";
    }
    if (!semi_invariance_check(r.piece(big).mod, r.piece(m).mod, s_mod, Gen::F, &w)) {
      rep.b_semi_invariant = false;
      rep.why = w + " (sigma, degree " + std::to_string(m) + ")";
    }
  }
  // the lowest-weight coordinate of F^(pk) v vanishes for v off the lowest line
  const WtModule& st = r.piece(p - 1).mod;
  int j0 = -1;
  for (int j = 0; j < st.dim(); ++j)
    if (st.wts[size_t(j)][0] == -(p - 1)) j0 = j;
  for (long long k = 1; k <= 3; ++k) {
    FpMat fk = divided_power_action(st, Gen::F, 0, p * k);
    for (int j = 0; j < st.dim(); ++j)
      if (j != j0 && fk.at(j0, j)) {
        rep.weight_vanishing = false;
        rep.why = "lowest-weight coordinate of F^(pk) does not vanish";
      }
  }
  rep.ok = rep.models && rep.left_inverse && rep.plus_compatible && rep.minus_compatible &&
           rep.b_plus_linear && rep.b_semi_invariant && rep.weight_vanishing;
  return rep;
}

}  // namespace frob
