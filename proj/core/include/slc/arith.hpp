#pragma once

// Exact integer linear algebra: 2x2 matrices over Z, rectangular integer
// matrices, Smith normal form and finitely generated abelian groups.
//
// Every integer here is a GMP mpz_class; nothing overflows.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace slc {

using Integer = mpz_class;
using Rational = mpq_class;

/// 2x2 integer matrix [[a, b], [c, d]] (row-major).
struct Mat2 {
  Integer a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }

  /// The cusp factor [[0, -1], [1, e]].
  static Mat2 cusp_factor(const Integer& e) { return {0, -1, 1, e}; }

  Integer det() const { return a * d - b * c; }
  Integer trace() const { return a + d; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m);
};

/// Left-to-right product factors[0] * factors[1] * ... exactly as listed.
/// Throws InvalidArgument on an empty list.
Mat2 mat2_chain(std::span<const Mat2> factors);

/// Dense rectangular integer matrix. Never empty.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  /// Throws InvalidMatrix when rows are ragged or the matrix is empty.
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);
  explicit IntMatrix(const Mat2& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_symmetric() const;
  std::vector<std::vector<Integer>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant. Throws InvalidMatrix if not square.
Integer determinant(const IntMatrix& m);

/// Determinants of the leading k x k principal submatrices, k = 1..n.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

struct SmithForm {
  /// Nonzero diagonal entries of the Smith normal form, d1 | d2 | ... .
  std::vector<Integer> divisors;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Z^free_rank + Z/d1 + ... + Z/ds with 2 <= d1 | d2 | ... | ds.
class AbGroup {
 public:
  AbGroup() = default;
  /// Throws InvalidArgument if the divisor chain is broken or a divisor < 2.
  AbGroup(std::size_t free_rank, std::vector<Integer> divisors);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& divisors() const noexcept { return divisors_; }
  Integer torsion_order() const;
  bool torsion_trivial() const noexcept { return divisors_.empty(); }

  /// e.g. "Z + Z/2 + Z/8", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> divisors_;
};

/// coker(m) for square m: divisors > 1 of the Smith form as torsion,
/// free rank = size - rank.
AbGroup cokernel_torsion(const IntMatrix& m);

/// n! / (k! (n-k)!) for n >= 0, 0 when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace slc
