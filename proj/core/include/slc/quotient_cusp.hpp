#pragma once

// Z/2 quotients of cusps: the B-matrix, the order of the universal abelian
// lci cover group, the cover's local equations and its resolution cycle.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "slc/arith.hpp"
#include "slc/cusp.hpp"

namespace slc {

class QuotientCuspSpec {
 public:
  /// Throws InvalidQuotientCuspData unless k >= 2, every e_i >= 2 and some
  /// e_j > 2.
  explicit QuotientCuspSpec(std::vector<int> e);

  std::span<const int> e() const noexcept { return e_; }

 private:
  std::vector<int> e_;
};

/// B = [[0,1],[-1,0]] * M(f_k) ... M(f_1) where f = e with the first and
/// last entries lowered by one (for k = 2 both entries are lowered).
Mat2 b_matrix(const QuotientCuspSpec& s);

/// 16 * b, b the (1,2) entry of the B-matrix.
Integer cover_group_order(const QuotientCuspSpec& s);

/// (alpha, beta, gamma, delta)
using ExponentTuple = std::array<long, 4>;

struct CoverData {
  Mat2 b;
  Integer group_order;
  std::vector<ExponentTuple> exponent_tuples;
  static constexpr const char* kFirstTemplate = "x^2+y^2=u^{alpha}v^{beta}";
  static constexpr const char* kSecondTemplate = "u^2+v^2=x^{gamma}y^{delta}";
};

/// Every tuple with alpha + beta = 2a, gamma + delta = 2d, all components
/// >= 0 and congruent to c mod 2, in lexicographic order.
CoverData cover_equations(const QuotientCuspSpec& s);

/// The two cover equations with a tuple substituted.
std::array<std::string, 2> cover_equation_strings(const ExponentTuple& t);

/// Resolution cycle of the universal abelian cover:
/// (3, 2^(2a-3), 3, 2^(2d-3), 3, 2^(2a-3), 3, 2^(2d-3)) when a, d >= 2 and
/// (4, 2^(2x-3), 4, 2^(2x-3)) when the other of a, d equals 1.
/// Throws DegenerateCover when a = d = 1 (or either is < 1).
CuspCycle cover_resolution_cycle(const QuotientCuspSpec& s);

struct EquationRecord {
  std::vector<std::string> equations;
  std::string parameter = "t";
  /// The deformation parameter is fixed by the covering group.
  bool parameter_invariant = true;
  Integer group_order;
};

/// x^2+y^2-u^alpha v^beta = t, u^2+v^2-x^gamma y^delta = t. Throws
/// TupleNotValid when the tuple is not one of cover_equations(s).
EquationRecord smoothing_family(const QuotientCuspSpec& s, const ExponentTuple& tuple);

}  // namespace slc
