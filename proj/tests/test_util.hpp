#pragma once

#include <functional>
#include <random>
#include <string>

#include "nilheis/group.hpp"
#include "nilheis/normal_forms.hpp"

namespace nilheis::testutil {

// Build a Cayley table from an element count and a multiplication rule on
// indices. Handy for the classical small groups below.
inline std::vector<std::vector<int>> table_from_rule(int n,
                                                     const std::function<int(int, int)>& f) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) t[i][j] = f(i, j);
  return t;
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
  return table_from_rule(n, [n](int a, int b) { return (a + b) % n; });
}

inline GroupPtr cyclic(int n) {
  return CayleyGroup::validate(cyclic_table(n), "Z/" + std::to_string(n));
}

// Dihedral group of order 2n; element a + n*b is r^a s^b, with s r s = r^-1.
inline std::vector<std::vector<int>> dihedral_table(int n) {
  return table_from_rule(2 * n, [n](int i, int j) {
    int a = i % n, b = i / n, c = j % n, d = j / n;
    int r = b ? (a - c % n + n) % n : (a + c) % n;
    return r + n * ((b + d) % 2);
  });
}

inline GroupPtr dihedral(int n) {
  return CayleyGroup::validate(dihedral_table(n), "D" + std::to_string(2 * n));
}

// Quaternion group; index 2u + s encodes (-1)^s * unit, units 0:1 1:i 2:j 3:k.
inline GroupPtr quaternion8() {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto t = table_from_rule(8, [](int i, int j) {
    int ui = i / 2, si = i % 2, uj = j / 2, sj = j % 2;
    return 2 * unit[ui][uj] + (si ^ sj ^ sgn[ui][uj]);
  });
  return CayleyGroup::validate(t, "Q8");
}

// Heisenberg group mod n: triples (x,y,z), z picking up x*y'. For n an odd
// prime this is the extraspecial group of order n^3 and exponent n.
inline GroupPtr heisenberg_mod(int n) {
  auto t = table_from_rule(n * n * n, [n](int i, int j) {
    int x = i / (n * n), y = (i / n) % n, z = i % n;
    int x2 = j / (n * n), y2 = (j / n) % n, z2 = j % n;
    return ((x + x2) % n) * n * n + ((y + y2) % n) * n + (z + z2 + x * y2) % n;
  });
  return CayleyGroup::validate(t, "Heis(Z/" + std::to_string(n) + ")", 64);
}

// Extraspecial group of order p^3 and exponent p^2 for odd p: pairs (i,j) in
// Z/p^2 x Z/p with (i,j)(i',j') = (i + i'(1+p)^j, j + j').
inline GroupPtr extraspecial_exp_p2(int p) {
  int p2 = p * p;
  auto t = table_from_rule(p2 * p, [p, p2](int a, int b) {
    int i = a / p, j = a % p, i2 = b / p, j2 = b % p;
    long long scale = 1;
    for (int k = 0; k < j; k++) scale = scale * (1 + p) % p2;
    return int((i + i2 * scale) % p2) * p + (j + j2) % p;
  });
  return CayleyGroup::validate(t, "p^(1+2) exp p^2, p=" + std::to_string(p), 64);
}

inline IntMatrix random_alternating(std::mt19937& rng, int n, int max_abs) {
  std::uniform_int_distribution<int> dist(-max_abs, max_abs);
  IntMatrix w(n, n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      int v = dist(rng);
      w.at(i, j) = v;
      w.at(j, i) = -v;
    }
  return w;
}

// Checks the transformed matrix is block-diagonal with hyperbolic blocks whose
// superdiagonal entries match diag_values up to the sign pinned by Pf(W).
// Returns an empty string on success, a diagnostic otherwise.
inline std::string alt_smith_form_error(const IntMatrix& W, const AlternatingSmithResult& r) {
  if (determinant(r.B) != 1) return "det(B) != 1";
  IntMatrix T = r.B.transposed() * W * r.B;
  int n = W.rows(), s = r.s;
  if ((int)r.diag_values.size() != s) return "diag size mismatch";
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      Int expect = 0;
      if (i / 2 == j / 2 && i / 2 < s) {
        if (j == i + 1) expect = r.diag_values[i / 2];
        if (j + 1 == i) expect = -r.diag_values[j / 2];
      }
      if (abs(T.at(i, j)) != abs(expect)) return "entry mismatch at " + std::to_string(i) + "," + std::to_string(j);
      if (T.at(i, j) != expect) {
        // only the last block may carry a negative sign, and only when W has
        // full even rank with Pf(W) < 0
        bool last_block = (i / 2 == s - 1) && (j / 2 == s - 1);
        if (!last_block || 2 * s != n) return "unexpected sign at " + std::to_string(i) + "," + std::to_string(j);
      }
    }
  for (int i = 0; i + 1 < s; i++)
    if (r.diag_values[i + 1] % r.diag_values[i] != 0) return "divisibility chain broken";
  for (int i = 0; i < s; i++)
    if (r.diag_values[i] <= 0) return "nonpositive diag value";
  return "";
}

}  // namespace nilheis::testutil
