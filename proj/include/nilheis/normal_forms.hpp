#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nilheis/errors.hpp"

namespace nilheis {

using Int = boost::multiprecision::cpp_int;

// Dense exact-integer matrix. Intermediate values in the normal-form
// computations overflow 64 bits already around n = 8, hence cpp_int.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;

private:
  int rows_, cols_;
  std::vector<Int> e_;
};

struct AlternatingSmithResult {
  IntMatrix B;                  // det(B) = 1
  std::vector<Int> diag_values; // d_1 | d_2 | ... | d_s, positive
  int s = 0;                    // rank(W) / 2
};

struct SmithResult {
  IntMatrix U, D, V;  // U M V = D, U and V unimodular
};

// B^T W B is block-diagonal with hyperbolic 2x2 blocks carrying +-d_i on the
// superdiagonal. diag_values are the positive associates; the sign of the
// last block equals sgn(Pf(W)) when W has full even rank, since congruence
// by SL_n fixes the Pfaffian.
AlternatingSmithResult alternating_smith(const IntMatrix& W);

// Recursive expansion along the first row. Throws on odd dimension.
Int pfaffian(const IntMatrix& W);

SmithResult smith_normal_form(const IntMatrix& M);

// gcd of all k x k minors, 0 if all vanish.
Int minor_gcd(const IntMatrix& M, int k);

// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& M);

// Exact inverse of a matrix with determinant +-1, via the adjugate.
// Throws NotUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& M);

// Generators of the solution set {x in prod Z/col_moduli : A x = 0 where row
// i is read mod row_moduli[i]}. Vectors are reduced mod col_moduli; the zero
// vector is never emitted.
std::vector<std::vector<long long>> kernel_mod(const IntMatrix& A,
                                               const std::vector<long long>& row_moduli,
                                               const std::vector<long long>& col_moduli);

}  // namespace nilheis
