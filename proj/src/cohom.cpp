#include "localred/cohom.hpp"

#include <algorithm>

#include "localred/errors.hpp"

namespace localred {

namespace {

// Representative of x mod pi^(its precision), claimed at full precision.
Elt lift_full(const Elt& x) {
  if (x.is_exact_zero()) return x;
  const RingPtr& R = x.ring();
  return R->make(x.coeffs(), R->cap());
}

Elt red(const Elt& x, int level) {
  if (x.is_exact_zero()) return x;
  if (x.precision() < level)
    throw PrecisionExhausted("entry known to " + std::to_string(x.precision()) + " digits, need " +
                             std::to_string(level));
  return lift_full(x.truncate(level));
}

int vlev(const Elt& x, int level) { return std::min(x.val_lb(), level); }

Mat identity(const RingPtr& K, int n) {
  Mat I(n, Vec(n, K->zero()));
  for (int i = 0; i < n; ++i) I[i][i] = K->one();
  return I;
}

int min_precision(const Mat& A) {
  int p = 1 << 30;
  for (const auto& row : A)
    for (const auto& x : row)
      if (!x.is_exact_zero()) p = std::min(p, x.precision());
  return p;
}

RingPtr base_ring(const Extension& ext) { return ext.ring->prefix(ext.base_depth); }

std::vector<Elt> omega_basis(const Extension& ext) {
  RingPtr K = base_ring(ext);
  const int d = ext.degree();
  std::vector<Elt> out;
  for (int j = 0; j < d; ++j) {
    std::vector<Elt> c(d, K->zero());
    c[j] = K->one();
    out.push_back(ext.ring->from_coordinates(ext.base_depth, c));
  }
  return out;
}

Mat stacked_invariant_matrix(const SemiLinearModule& M) {
  RingPtr K = base_ring(M.ext);
  Mat A;
  for (std::size_t g = 0; g < M.generators.size(); ++g) {
    Mat S = galois_matrix(M, static_cast<int>(g));
    for (int i = 0; i < M.dim(); ++i) {
      S[i][i] -= K->one();
      A.push_back(S[i]);
    }
  }
  if (A.empty()) A.push_back(Vec(M.dim(), K->zero()));
  return A;
}

// Kernel of A over O_K / pi^level.
FiniteModule kernel_at_level(const RingPtr& K, const Mat& A, int level) {
  SmithForm sf = smith_form(A, level);
  const int c = static_cast<int>(sf.V.size());
  std::vector<Vec> gens;
  for (int i = 0; i < c; ++i) {
    const int k = i < sf.rank ? level - sf.diag[i] : 0;
    if (k >= level) continue;
    Vec col(c);
    for (int r = 0; r < c; ++r) col[r] = red(sf.V[r][i].mul_pi(k), level);
    gens.push_back(col);
  }
  return span(K, c, gens, level);
}

}  // namespace

Vec mat_vec(const Mat& A, const Vec& x) {
  Vec out;
  out.reserve(A.size());
  for (const auto& row : A) {
    Elt acc = x.at(0).ring()->zero();
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
    out.push_back(acc);
  }
  return out;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  const std::size_t r = A.size(), m = B.size(), c = B.empty() ? 0 : B[0].size();
  Mat out(r, Vec(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Elt acc = B[0][0].ring()->zero();
      for (std::size_t k = 0; k < m; ++k) acc += A[i][k] * B[k][j];
      out[i][j] = acc;
    }
  return out;
}

SmithForm smith_form(const Mat& A, int level) {
  if (A.empty() || A[0].empty()) throw InvalidDescriptor("empty matrix");
  RingPtr K = A[0][0].ring();
  const int r = static_cast<int>(A.size()), c = static_cast<int>(A[0].size());
  SmithForm sf;
  sf.level = level;
  Mat B(r, Vec(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) B[i][j] = red(A[i][j], level);
  sf.U = identity(K, r);
  sf.V = identity(K, c);
  sf.Vinv = identity(K, c);
  auto sub_row = [&](Mat& X, int dst, int src, const Elt& f) {
    for (auto j = 0u; j < X[dst].size(); ++j) X[dst][j] = red(X[dst][j] - f * X[src][j], level);
  };
  auto add_row = [&](Mat& X, int dst, int src, const Elt& f) {
    for (auto j = 0u; j < X[dst].size(); ++j) X[dst][j] = red(X[dst][j] + f * X[src][j], level);
  };
  auto sub_col = [&](Mat& X, int dst, int src, const Elt& f) {
    for (auto& row : X) row[dst] = red(row[dst] - f * row[src], level);
  };
  for (int k = 0; k < std::min(r, c); ++k) {
    int bi = -1, bj = -1, best = level;
    for (int i = k; i < r && best > 0; ++i)
      for (int j = k; j < c; ++j) {
        int v = vlev(B[i][j], level);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;
    std::swap(B[k], B[bi]);
    std::swap(sf.U[k], sf.U[bi]);
    for (auto& row : B) std::swap(row[k], row[bj]);
    for (auto& row : sf.V) std::swap(row[k], row[bj]);
    std::swap(sf.Vinv[k], sf.Vinv[bj]);
    const int a = best;
    Elt w = lift_full(B[k][k].div_pi(a)).inv_unit();
    for (int i = k + 1; i < r; ++i) {
      if (vlev(B[i][k], level) >= level) continue;
      Elt f = lift_full(lift_full(B[i][k].div_pi(a)) * w);
      sub_row(B, i, k, f);
      sub_row(sf.U, i, k, f);
    }
    for (int j = k + 1; j < c; ++j) {
      if (vlev(B[k][j], level) >= level) continue;
      Elt f = lift_full(lift_full(B[k][j].div_pi(a)) * w);
      sub_col(B, j, k, f);
      sub_col(sf.V, j, k, f);
      add_row(sf.Vinv, k, j, f);
    }
    sf.diag.push_back(a);
    ++sf.rank;
  }
  return sf;
}

int FiniteModule::exponent() const {
  int e = 0;
  for (int c : divisors) e = std::max(e, c);
  return e;
}

int FiniteModule::length() const {
  int s = 0;
  for (int c : divisors) s += c;
  return s;
}

FiniteModule span(const RingPtr& K, int dim, const std::vector<Vec>& gens, int level) {
  FiniteModule m;
  m.dim = dim;
  m.level = level;
  for (const auto& g : gens) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = red(g[i], level);
    m.generators.push_back(v);
  }
  if (m.generators.empty()) return m;
  Mat G(dim, Vec(m.generators.size()));
  for (std::size_t j = 0; j < m.generators.size(); ++j)
    for (int i = 0; i < dim; ++i) G[i][j] = m.generators[j][i];
  SmithForm sf = smith_form(G, level);
  for (int i = 0; i < sf.rank; ++i) m.divisors.push_back(level - sf.diag[i]);
  (void)K;
  return m;
}

bool FiniteModule::contains(const Vec& x) const {
  Vec xr(dim);
  for (int i = 0; i < dim; ++i) xr[i] = red(x[i], level);
  if (generators.empty()) {
    for (const auto& e : xr)
      if (vlev(e, level) < level) return false;
    return true;
  }
  Mat G(dim, Vec(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (int i = 0; i < dim; ++i) G[i][j] = generators[j][i];
  SmithForm sf = smith_form(G, level);
  Vec y = mat_vec(sf.U, xr);
  for (int i = 0; i < dim; ++i) {
    const int need = i < sf.rank ? sf.diag[i] : level;
    if (vlev(y[i], level) < need) return false;
  }
  return true;
}

bool FiniteModule::contains(const FiniteModule& o) const {
  for (const auto& g : o.generators)
    if (!contains(g)) return false;
  return true;
}

SemiLinearModule natural_module(const Extension& ext, const std::vector<Automorphism>& gens) {
  SemiLinearModule M;
  M.ext = ext;
  M.rank = 1;
  M.generators = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) M.action.push_back(Mat{{ext.ring->one()}});
  return M;
}

SemiLinearModule regular_module(const Extension& ext, const GaloisGroup& g) {
  SemiLinearModule M;
  M.ext = ext;
  M.rank = g.order();
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    M.generators.push_back(g.elements[s]);
    Mat A(n, Vec(n, ext.ring->zero()));
    for (int t = 0; t < n; ++t) A[g.table[s][t]][t] = ext.ring->one();
    M.action.push_back(A);
  }
  return M;
}

Vec to_coordinates(const SemiLinearModule& M, const std::vector<Elt>& x) {
  Vec out;
  for (const auto& xk : x) {
    auto c = M.ext.ring->coordinates_over(M.ext.base_depth, xk);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Elt> from_coordinates(const SemiLinearModule& M, const Vec& c) {
  const int d = M.ext.degree();
  std::vector<Elt> out;
  for (int k = 0; k < M.rank; ++k)
    out.push_back(M.ext.ring->from_coordinates(M.ext.base_depth, Vec(c.begin() + k * d, c.begin() + (k + 1) * d)));
  return out;
}

Mat galois_matrix(const SemiLinearModule& M, int g) {
  const auto& ext = M.ext;
  const int d = ext.degree(), n = M.rank, D = M.dim();
  RingPtr K = base_ring(ext);
  auto omega = omega_basis(ext);
  const auto& s = M.generators.at(g);
  const Mat& A = M.action.at(g);
  Mat S(D, Vec(D, K->zero()));
  for (int j = 0; j < d; ++j) {
    Elt sw = apply(ext, s, omega[j]);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        auto c = ext.ring->coordinates_over(ext.base_depth, sw * A[i][k]);
        for (int jj = 0; jj < d; ++jj) S[i * d + jj][k * d + j] = c[jj];
      }
  }
  return S;
}

void check_cocycle(const SemiLinearModule& M, const GaloisGroup& grp) {
  const auto& ext = M.ext;
  const int n = M.rank;
  std::vector<Mat> mats(grp.order());
  std::vector<bool> have(grp.order(), false);
  Mat I(n, Vec(n, ext.ring->zero()));
  for (int i = 0; i < n; ++i) I[i][i] = ext.ring->one();
  mats[0] = I;
  have[0] = true;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int h = queue[qi];
    for (std::size_t gi = 0; gi < M.generators.size(); ++gi) {
      const auto& g = M.generators[gi];
      const int idx = grp.index_of(ext, compose(ext, g, grp.elements[h]));
      if (idx < 0) throw InconsistentGroup("generator outside the group");
      Mat gh(n, Vec(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gh[i][j] = apply(ext, g, mats[h][i][j]);
      Mat prod = mat_mul(M.action[gi], gh);
      if (!have[idx]) {
        mats[idx] = prod;
        have[idx] = true;
        queue.push_back(idx);
        continue;
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (prod[i][j] != mats[idx][i][j]) throw InconsistentGroup("action matrices violate the cocycle relation");
    }
  }
}

FiniteModule invariants_at_level(const SemiLinearModule& M, int N) {
  RingPtr K = base_ring(M.ext);
  return kernel_at_level(K, stacked_invariant_matrix(M), N + 1);
}

FreeSubmodule invariants(const SemiLinearModule& M) {
  RingPtr K = base_ring(M.ext);
  Mat A = stacked_invariant_matrix(M);
  const int P = std::min(min_precision(A), K->cap());
  SmithForm sf = smith_form(A, P);
  const int D = M.dim();
  if (D - sf.rank > M.rank) throw PrecisionExhausted("invariants not separated at the available precision");
  if (D - sf.rank < M.rank) throw AssertionFailed("rank of invariants below the rank of the module");
  const int amax = sf.rank ? sf.diag.back() : 0;
  FreeSubmodule out;
  out.precision = P - amax;
  if (out.precision < 1) throw PrecisionExhausted("no digits of the invariants are determined");
  for (int i = sf.rank; i < D; ++i) {
    Vec col(D);
    for (int r = 0; r < D; ++r) col[r] = sf.V[r][i].truncate(out.precision);
    out.basis.push_back(col);
  }
  return out;
}

int H1Result::exponent() const {
  int e = 0;
  for (int c : divisors) e = std::max(e, c);
  return e;
}

int H1Result::length() const {
  int s = 0;
  for (int c : divisors) s += c;
  return s;
}

H1Result h1_cyclic(const SemiLinearModule& M, int gen, int order) {
  RingPtr K = base_ring(M.ext);
  const int D = M.dim();
  Mat S = galois_matrix(M, gen);
  Mat Nm = identity(K, D), Sk = identity(K, D);
  for (int i = 1; i < order; ++i) {
    Sk = mat_mul(Sk, S);
    for (int r = 0; r < D; ++r)
      for (int c = 0; c < D; ++c) Nm[r][c] += Sk[r][c];
  }
  Sk = mat_mul(Sk, S);
  const Mat I = identity(K, D);
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c)
      if (Sk[r][c] != I[r][c]) throw NotAGroup("generator does not have the stated order");
  Mat T = S;
  for (int i = 0; i < D; ++i) T[i][i] -= K->one();
  const int P = std::min(min_precision(Nm), K->cap());
  SmithForm sn = smith_form(Nm, P);
  const int w = D - sn.rank;
  H1Result out;
  if (w == 0) return out;
  const int amax = sn.rank ? sn.diag.back() : 0;
  const int P2 = P - amax;
  if (P2 < 1) throw PrecisionExhausted("kernel of the norm not determined");
  Mat C;
  Mat VT = mat_mul(sn.Vinv, T);
  for (int i = sn.rank; i < D; ++i) C.push_back(VT[i]);
  SmithForm sc = smith_form(C, P2);
  if (sc.rank < w) throw PrecisionExhausted("H^1 exponent reaches the precision headroom");
  for (int a : sc.diag)
    if (a > 0) out.divisors.push_back(a);
  return out;
}

int h1_cyclic_exponent(const SemiLinearModule& M, int gen, int order) {
  return h1_cyclic(M, gen, order).exponent();
}

namespace {

FiniteModule lattice_of_invariants(const SemiLinearModule& M) {
  RingPtr K = base_ring(M.ext);
  FreeSubmodule inv = invariants(M);
  auto omega = omega_basis(M.ext);
  std::vector<Vec> gens;
  for (const auto& b : inv.basis) {
    auto x = from_coordinates(M, b);
    for (const auto& w : omega) {
      std::vector<Elt> y;
      for (const auto& xk : x) y.push_back(xk * w);
      gens.push_back(to_coordinates(M, y));
    }
  }
  const int level = inv.precision;
  FiniteModule S = span(K, M.dim(), gens, level);
  if (static_cast<int>(S.divisors.size()) < M.dim())
    throw PrecisionExhausted("O_L M^G has full rank only beyond the available precision");
  return S;
}

bool scaled_basis_in(const SemiLinearModule& M, const FiniteModule& S, const Elt& b) {
  for (int k = 0; k < M.rank; ++k) {
    std::vector<Elt> x(M.rank, M.ext.ring->zero());
    x[k] = b;
    if (!S.contains(to_coordinates(M, x))) return false;
  }
  return true;
}

}  // namespace

int annihilation_exponent(const SemiLinearModule& M) {
  FiniteModule S = lattice_of_invariants(M);
  const int jmax = M.ext.e * S.level;
  Elt pw = M.ext.ring->one();
  for (int j = 0; j <= jmax; ++j) {
    if (scaled_basis_in(M, S, pw)) return j;
    pw *= M.ext.pi();
  }
  throw PrecisionExhausted("annihilator beyond the available precision");
}

bool annihilated_by(const SemiLinearModule& M, const Elt& b) {
  return scaled_basis_in(M, lattice_of_invariants(M), b);
}

bool check_different_annihilation(const SemiLinearModule& M) {
  return annihilation_exponent(M) <= M.ext.different_valuation();
}

TruncationCheck check_invariants_truncation(const SemiLinearModule& M, int N, int m) {
  if (m < N) throw InvalidDescriptor("truncation comparison needs m >= N");
  RingPtr K = base_ring(M.ext);
  FiniteModule top = invariants_at_level(M, m);
  FreeSubmodule inv = invariants(M);
  if (inv.precision < N + 1) throw PrecisionExhausted("invariants known to fewer than N+1 digits");
  FiniteModule im_mN = span(K, M.dim(), top.generators, N + 1);
  FiniteModule im_N = span(K, M.dim(), inv.basis, N + 1);
  TruncationCheck out;
  out.invariants_in_image = im_mN.contains(im_N);
  out.image_in_invariants = im_N.contains(im_mN);
  return out;
}

}  // namespace localred
