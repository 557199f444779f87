#include "nilheis/normal_forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilheis {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; i++)
    for (int k = 0; k < cols_; k++) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; j++) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

namespace {

void check_alternating(const IntMatrix& W) {
  require(W.rows() == W.cols(), "NotAlternating", "matrix is not square");
  for (int i = 0; i < W.rows(); i++) {
    require(W.at(i, i) == 0, "NotAlternating",
            "nonzero diagonal entry at (" + std::to_string(i) + "," + std::to_string(i) + ")");
    for (int j = i + 1; j < W.cols(); j++)
      require(W.at(i, j) == -W.at(j, i), "NotAlternating",
              "W[" + std::to_string(i) + "][" + std::to_string(j) + "] != -W[" +
                  std::to_string(j) + "][" + std::to_string(i) + "]");
  }
}

// Congruence primitives: W <- X^T W X, B <- B X, each with det(X) = 1.

// X = I + t E_{j,i}: column i += t * column j, then row i += t * row j.
void cg_addmul(IntMatrix& W, IntMatrix& B, int i, int j, const Int& t) {
  int n = W.rows();
  for (int r = 0; r < n; r++) W.at(r, i) += t * W.at(r, j);
  for (int c = 0; c < n; c++) W.at(i, c) += t * W.at(j, c);
  for (int r = 0; r < n; r++) B.at(r, i) += t * B.at(r, j);
}

// New basis u_i = e_j, u_j = -e_i (a determinant-1 "rotation" swap).
void cg_swap_signed(IntMatrix& W, IntMatrix& B, int i, int j) {
  int n = W.rows();
  for (int r = 0; r < n; r++) {
    Int tmp = W.at(r, i);
    W.at(r, i) = W.at(r, j);
    W.at(r, j) = -tmp;
  }
  for (int c = 0; c < n; c++) {
    Int tmp = W.at(i, c);
    W.at(i, c) = W.at(j, c);
    W.at(j, c) = -tmp;
  }
  for (int r = 0; r < n; r++) {
    Int tmp = B.at(r, i);
    B.at(r, i) = B.at(r, j);
    B.at(r, j) = -tmp;
  }
}

// Negate columns/rows i and j (i != j), det(X) = (-1)^2 = 1.
void cg_negate_pair(IntMatrix& W, IntMatrix& B, int i, int j) {
  int n = W.rows();
  for (int r = 0; r < n; r++) { W.at(r, i) = -W.at(r, i); W.at(r, j) = -W.at(r, j); }
  for (int c = 0; c < n; c++) { W.at(i, c) = -W.at(i, c); W.at(j, c) = -W.at(j, c); }
  for (int r = 0; r < n; r++) { B.at(r, i) = -B.at(r, i); B.at(r, j) = -B.at(r, j); }
}

// Smallest |entry| in the strict upper triangle of the active region, or
// (-1,-1) if the region is zero.
std::pair<int, int> min_pivot(const IntMatrix& W, int k) {
  int n = W.rows();
  int bi = -1, bj = -1;
  Int best = 0;
  for (int i = k; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      Int a = abs(W.at(i, j));
      if (a != 0 && (bi < 0 || a < best)) { best = a; bi = i; bj = j; }
    }
  return {bi, bj};
}

}  // namespace

AlternatingSmithResult alternating_smith(const IntMatrix& W0) {
  check_alternating(W0);
  int n = W0.rows();
  IntMatrix W = W0;
  IntMatrix B = IntMatrix::identity(n);

  int k = 0;
  while (k + 1 < n) {
    auto [pi, pj] = min_pivot(W, k);
    if (pi < 0) break;
    // Move the pivot to (k, k+1). pi < pj and both >= k.
    if (pi != k) cg_swap_signed(W, B, k, pi);
    // After the first swap the pivot sits at (k, pj) unless pj landed on k+1.
    if (pi == k + 1 && pj > k + 1) {
      // swapping k <-> k+1 moved the pivot row; it now lives at (k, pj)
    }
    if (pj != k + 1) cg_swap_signed(W, B, k + 1, pj);

    // Clear rows k and k+1 beyond column k+1 by Euclidean steps; restart the
    // pivot search whenever a nonzero remainder (strictly smaller than the
    // pivot) appears.
    bool restart = false;
    for (int j2 = k + 2; j2 < n; j2++) {
      Int d = W.at(k, k + 1);
      Int q = W.at(k, j2) / d;
      if (q != 0) cg_addmul(W, B, j2, k + 1, -q);
      if (W.at(k, j2) != 0) { restart = true; break; }
      d = W.at(k, k + 1);
      q = W.at(k + 1, j2) / d;  // W(k+1, k) = -d, so adding q * col k subtracts q*d
      if (q != 0) cg_addmul(W, B, j2, k, q);
      if (W.at(k + 1, j2) != 0) { restart = true; break; }
    }
    if (restart) continue;

    // Divisibility chain: the pivot must divide the trailing submatrix.
    Int d = abs(W.at(k, k + 1));
    bool injected = false;
    for (int a = k + 2; a < n && !injected; a++)
      for (int b = a + 1; b < n && !injected; b++)
        if (W.at(a, b) % d != 0) {
          cg_addmul(W, B, k, a, 1);  // pulls the offending entry into row k
          injected = true;
        }
    if (injected) continue;

    k += 2;
  }

  int s = k / 2;
  // Normalize signs: bubble negatives towards the last block, then park the
  // leftover sign on a zero column when one exists. With full even rank and
  // Pf(W) < 0 the last superdiagonal entry stays negative (det(B) = 1 pins
  // the Pfaffian).
  for (int i = 0; i + 1 < s; i++)
    if (W.at(2 * i, 2 * i + 1) < 0) cg_negate_pair(W, B, 2 * i, 2 * (i + 1));
  if (s > 0 && W.at(2 * s - 2, 2 * s - 1) < 0 && 2 * s < n)
    cg_negate_pair(W, B, 2 * s - 2, 2 * s);

  AlternatingSmithResult res;
  res.B = B;
  res.s = s;
  for (int i = 0; i < s; i++) res.diag_values.push_back(abs(W.at(2 * i, 2 * i + 1)));
  return res;
}

namespace {

Int pfaffian_rec(const IntMatrix& W, std::vector<int>& idx) {
  size_t m = idx.size();
  if (m == 0) return 1;
  Int acc = 0;
  int i0 = idx[0];
  for (size_t j = 1; j < m; j++) {
    const Int& a = W.at(i0, idx[j]);
    if (a == 0) continue;
    std::vector<int> rest;
    rest.reserve(m - 2);
    for (size_t t = 1; t < m; t++)
      if (t != j) rest.push_back(idx[t]);
    Int sub = pfaffian_rec(W, rest);
    if (j % 2 == 1) acc += a * sub;
    else acc -= a * sub;
  }
  return acc;
}

}  // namespace

Int pfaffian(const IntMatrix& W) {
  check_alternating(W);
  require(W.rows() % 2 == 0, "OddDimension",
          "pfaffian needs even dimension, got " + std::to_string(W.rows()));
  std::vector<int> idx(W.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return pfaffian_rec(W, idx);
}

SmithResult smith_normal_form(const IntMatrix& M) {
  int r = M.rows(), c = M.cols();
  SmithResult res{IntMatrix::identity(r), M, IntMatrix::identity(c)};
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;

  auto row_addmul = [&](int i, int j, const Int& t) {  // R_i += t R_j
    for (int x = 0; x < c; x++) D.at(i, x) += t * D.at(j, x);
    for (int x = 0; x < r; x++) U.at(i, x) += t * U.at(j, x);
  };
  auto col_addmul = [&](int i, int j, const Int& t) {  // C_i += t C_j
    for (int x = 0; x < r; x++) D.at(x, i) += t * D.at(x, j);
    for (int x = 0; x < c; x++) V.at(x, i) += t * V.at(x, j);
  };
  auto row_swap = [&](int i, int j) {
    for (int x = 0; x < c; x++) std::swap(D.at(i, x), D.at(j, x));
    for (int x = 0; x < r; x++) std::swap(U.at(i, x), U.at(j, x));
  };
  auto col_swap = [&](int i, int j) {
    for (int x = 0; x < r; x++) std::swap(D.at(x, i), D.at(x, j));
    for (int x = 0; x < c; x++) std::swap(V.at(x, i), V.at(x, j));
  };
  auto row_negate = [&](int i) {
    for (int x = 0; x < c; x++) D.at(i, x) = -D.at(i, x);
    for (int x = 0; x < r; x++) U.at(i, x) = -U.at(i, x);
  };

  int m = std::min(r, c);
  for (int k = 0; k < m; k++) {
    for (;;) {
      // minimal nonzero |entry| in the active region
      int bi = -1, bj = -1;
      Int best = 0;
      for (int i = k; i < r; i++)
        for (int j = k; j < c; j++) {
          Int a = abs(D.at(i, j));
          if (a != 0 && (bi < 0 || a < best)) { best = a; bi = i; bj = j; }
        }
      if (bi < 0) { k = m; break; }
      if (bi != k) row_swap(k, bi);
      if (bj != k) col_swap(k, bj);

      bool restart = false;
      for (int i = k + 1; i < r; i++) {
        Int q = D.at(i, k) / D.at(k, k);
        if (q != 0) row_addmul(i, k, -q);
        if (D.at(i, k) != 0) { restart = true; break; }
      }
      if (restart) continue;
      for (int j = k + 1; j < c; j++) {
        Int q = D.at(k, j) / D.at(k, k);
        if (q != 0) col_addmul(j, k, -q);
        if (D.at(k, j) != 0) { restart = true; break; }
      }
      if (restart) continue;

      Int d = abs(D.at(k, k));
      bool injected = false;
      for (int i = k + 1; i < r && !injected; i++)
        for (int j = k + 1; j < c && !injected; j++)
          if (D.at(i, j) % d != 0) {
            row_addmul(k, i, 1);
            injected = true;
          }
      if (injected) continue;
      break;
    }
    if (k >= m) break;
  }
  for (int k = 0; k < m; k++)
    if (D.at(k, k) < 0) row_negate(k);
  return res;
}

Int determinant(const IntMatrix& M) {
  require(M.rows() == M.cols(), "BadInput", "determinant of non-square matrix");
  int n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (A.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; j++) std::swap(A.at(k, j), A.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++)
        A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
    prev = A.at(k, k);
  }
  Int d = A.at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

namespace {

void minors_rec(const IntMatrix& M, int k, int start, std::vector<int>& rows,
                const std::function<void(const std::vector<int>&)>& emit) {
  if ((int)rows.size() == k) { emit(rows); return; }
  for (int i = start; i <= M.rows() - (k - (int)rows.size()); i++) {
    rows.push_back(i);
    minors_rec(M, k, i + 1, rows, emit);
    rows.pop_back();
  }
}

}  // namespace

Int minor_gcd(const IntMatrix& M, int k) {
  require(k >= 1 && k <= std::min(M.rows(), M.cols()), "BadInput", "minor size out of range");
  Int g = 0;
  std::vector<int> rows, cols;
  minors_rec(M, k, 0, rows, [&](const std::vector<int>& rs) {
    std::vector<int> cs;
    minors_rec(M.transposed(), k, 0, cs, [&](const std::vector<int>& csel) {
      IntMatrix sub(k, k);
      for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++) sub.at(i, j) = M.at(rs[i], csel[j]);
      g = gcd(g, determinant(sub));
    });
  });
  return abs(g);
}

IntMatrix inverse_unimodular(const IntMatrix& M) {
  require(M.rows() == M.cols(), "NotUnimodular", "non-square matrix");
  int n = M.rows();
  Int det = determinant(M);
  require(det == 1 || det == -1, "NotUnimodular", "determinant is not a unit");
  IntMatrix inv(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      IntMatrix sub(n - 1, n - 1);
      for (int a = 0, ai = 0; a < n; a++) {
        if (a == j) continue;
        for (int b = 0, bj = 0; b < n; b++) {
          if (b == i) continue;
          sub.at(ai, bj++) = M.at(a, b);
        }
        ai++;
      }
      Int cof = determinant(sub);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = det * cof;  // det in {1,-1}, so this is cof / det
    }
  return inv;
}

std::vector<std::vector<long long>> kernel_mod(const IntMatrix& A,
                                               const std::vector<long long>& row_moduli,
                                               const std::vector<long long>& col_moduli) {
  int r = A.rows(), c = A.cols();
  require((int)row_moduli.size() == r && (int)col_moduli.size() == c, "BadInput",
          "kernel_mod: moduli sizes mismatch");
  std::vector<std::vector<long long>> out;
  auto emit = [&](const std::vector<Int>& v) {
    std::vector<long long> w(c);
    bool nz = false;
    for (int i = 0; i < c; i++) {
      Int m = col_moduli[i];
      Int red = ((v[i] % m) + m) % m;
      w[i] = red.convert_to<long long>();
      if (w[i] != 0) nz = true;
    }
    if (nz) out.push_back(w);
  };

  if (r == 0) {
    for (int i = 0; i < c; i++) {
      std::vector<Int> e(c, 0);
      e[i] = 1;
      emit(e);
    }
    return out;
  }

  Int L = 1;
  for (long long m : row_moduli) L = lcm(L, Int(m));
  IntMatrix S(r, c);
  for (int i = 0; i < r; i++) {
    Int scale = L / row_moduli[i];
    for (int j = 0; j < c; j++) S.at(i, j) = A.at(i, j) * scale;
  }
  SmithResult snf = smith_normal_form(S);
  // x = V z solves S x = 0 mod L iff d_i z_i = 0 mod L.
  int m = std::min(r, c);
  for (int i = 0; i < c; i++) {
    Int mult = 1;
    if (i < m) mult = L / gcd(snf.D.at(i, i), L);
    std::vector<Int> v(c);
    for (int j = 0; j < c; j++) v[j] = snf.V.at(j, i) * mult;
    emit(v);
  }
  return out;
}

}  // namespace nilheis
