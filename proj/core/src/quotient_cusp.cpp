#include "slc/quotient_cusp.hpp"

#include <algorithm>

#include "slc/error.hpp"
#include "slc/plumbing.hpp"

namespace slc {

namespace {

// Enumeration bound for the exponent tuples; (a+1)(d+1) tuples at most.
constexpr long kMaxExponent = 1'000'000;

long small(const Integer& v, const char* what) {
  if (!v.fits_slong_p() || abs(v) > kMaxExponent) {
    throw Error(ErrorCode::InvalidQuotientCuspData,
                std::string(what) + " too large to enumerate: " + v.get_str());
  }
  return v.get_si();
}

bool same_parity(long x, const Integer& c) {
  return (x % 2 != 0) == (mpz_odd_p(c.get_mpz_t()) != 0);
}

}  // namespace

QuotientCuspSpec::QuotientCuspSpec(std::vector<int> e) : e_(std::move(e)) {
  // Reuse the graph validator so both entry points reject the same data.
  (void)quotient_cusp_graph(e_);
}

Mat2 b_matrix(const QuotientCuspSpec& s) {
  std::vector<int> f(s.e().begin(), s.e().end());
  f.front() -= 1;
  f.back() -= 1;
  Mat2 acc = Mat2::identity();
  for (int x : f) acc = Mat2::cusp_factor(x) * acc;
  return Mat2{0, 1, -1, 0} * acc;
}

Integer cover_group_order(const QuotientCuspSpec& s) { return 16 * b_matrix(s).b; }

CoverData cover_equations(const QuotientCuspSpec& s) {
  CoverData out;
  out.b = b_matrix(s);
  out.group_order = 16 * out.b.b;
  const long two_a = 2 * small(out.b.a, "a");
  const long two_d = 2 * small(out.b.d, "d");
  for (long alpha = 0; alpha <= two_a; ++alpha) {
    if (!same_parity(alpha, out.b.c)) continue;
    for (long gamma = 0; gamma <= two_d; ++gamma) {
      if (!same_parity(gamma, out.b.c)) continue;
      out.exponent_tuples.push_back({alpha, two_a - alpha, gamma, two_d - gamma});
    }
  }
  return out;
}

std::array<std::string, 2> cover_equation_strings(const ExponentTuple& t) {
  return {"x^2+y^2=u^" + std::to_string(t[0]) + "v^" + std::to_string(t[1]),
          "u^2+v^2=x^" + std::to_string(t[2]) + "y^" + std::to_string(t[3])};
}

CuspCycle cover_resolution_cycle(const QuotientCuspSpec& s) {
  const Mat2 b = b_matrix(s);
  if (b.a < 1 || b.d < 1 || (b.a == 1 && b.d == 1)) {
    throw Error(ErrorCode::DegenerateCover,
                "cover cycle undefined for a = " + b.a.get_str() + ", d = " + b.d.get_str());
  }
  const long a = small(b.a, "a");
  const long d = small(b.d, "d");
  std::vector<Block> blocks;
  if (a >= 2 && d >= 2) {
    blocks = {{3, 2 * a - 3}, {3, 2 * d - 3}, {3, 2 * a - 3}, {3, 2 * d - 3}};
  } else {
    const long x = std::max(a, d);
    blocks = {{4, 2 * x - 3}, {4, 2 * x - 3}};
  }
  return expand_blocks(blocks);
}

EquationRecord smoothing_family(const QuotientCuspSpec& s, const ExponentTuple& tuple) {
  CoverData data = cover_equations(s);
  if (std::find(data.exponent_tuples.begin(), data.exponent_tuples.end(), tuple) ==
      data.exponent_tuples.end()) {
    throw Error(ErrorCode::TupleNotValid,
                "exponent tuple violates alpha+beta=2a, gamma+delta=2d or the parity of c");
  }
  EquationRecord rec;
  rec.equations = {
      "x^2+y^2-u^" + std::to_string(tuple[0]) + "v^" + std::to_string(tuple[1]) + "=t",
      "u^2+v^2-x^" + std::to_string(tuple[2]) + "y^" + std::to_string(tuple[3]) + "=t"};
  rec.group_order = data.group_order;
  return rec;
}

}  // namespace slc
