#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slc/cusp.hpp"
#include "slc/error.hpp"
#include "slc/quotient_cusp.hpp"

namespace {

using slc::ExponentTuple;
using slc::Mat2;
using slc::QuotientCuspSpec;

QuotientCuspSpec Q(std::vector<int> e) { return QuotientCuspSpec(std::move(e)); }

// [[0,1],[-1,0]] * M(f_k) ... M(f_1) by plain recursion.
Mat2 b_oracle(std::vector<int> e) {
  e.front() -= 1;
  e.back() -= 1;
  const auto m = oracle::monodromy(e);
  return {m[2], m[3], -m[0], -m[1]};
}

template <class F>
slc::ErrorCode code_of(F f) {
  try {
    f();
  } catch (const slc::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no slc::Error thrown";
  return slc::ErrorCode::InvalidArgument;
}

TEST(BMatrix, Examples) {
  EXPECT_EQ(slc::b_matrix(Q({3, 3})), (Mat2{2, 3, 1, 2}));
  EXPECT_EQ(slc::b_matrix(Q({2, 3})), (Mat2{2, 1, 1, 1}));
  EXPECT_EQ(slc::b_matrix(Q({6, 3, 3, 2})), b_oracle({6, 3, 3, 2}));
  EXPECT_EQ(slc::b_matrix(Q({6, 3, 3, 2})), (Mat2{5, 23, 8, 37}));
}

TEST(CoverGroupOrder, Examples) {
  EXPECT_EQ(slc::cover_group_order(Q({3, 3})), 48);
  EXPECT_EQ(slc::cover_group_order(Q({2, 3})), 16);
}

TEST(CoverEquations, Examples) {
  const auto d33 = slc::cover_equations(Q({3, 3}));
  EXPECT_EQ(d33.exponent_tuples,
            (std::vector<ExponentTuple>{{1, 3, 1, 3}, {1, 3, 3, 1}, {3, 1, 1, 3}, {3, 1, 3, 1}}));
  EXPECT_EQ(d33.group_order, 48);
  const auto d23 = slc::cover_equations(Q({2, 3}));
  EXPECT_EQ(d23.exponent_tuples, (std::vector<ExponentTuple>{{1, 3, 1, 1}, {3, 1, 1, 1}}));
  const auto eqs = slc::cover_equation_strings({1, 3, 1, 1});
  EXPECT_EQ(eqs[0], "x^2+y^2=u^1v^3");
  EXPECT_EQ(eqs[1], "u^2+v^2=x^1y^1");
}

TEST(CoverResolutionCycle, Examples) {
  EXPECT_EQ(slc::cover_resolution_cycle(Q({3, 3})), slc::CuspCycle({3, 2, 3, 2, 3, 2, 3, 2}));
  EXPECT_EQ(slc::canonicalize(slc::cover_resolution_cycle(Q({2, 3}))),
            slc::canonicalize(slc::CuspCycle({4, 2, 4, 2})));
}

TEST(Smoothing, Examples) {
  const auto r = slc::smoothing_family(Q({3, 3}), {1, 3, 1, 3});
  ASSERT_EQ(r.equations.size(), 2u);
  EXPECT_EQ(r.equations[0], "x^2+y^2-u^1v^3=t");
  EXPECT_EQ(r.equations[1], "u^2+v^2-x^1y^3=t");
  EXPECT_TRUE(r.parameter_invariant);
  EXPECT_EQ(code_of([] { slc::smoothing_family(Q({3, 3}), {0, 4, 1, 3}); }), slc::ErrorCode::TupleNotValid);
  EXPECT_NO_THROW(slc::smoothing_family(Q({2, 3}), {1, 3, 1, 1}));
}

TEST(QuotientCuspSpec, Validation) {
  EXPECT_EQ(code_of([] { Q({3}); }), slc::ErrorCode::InvalidQuotientCuspData);
  EXPECT_EQ(code_of([] { Q({2, 2, 2}); }), slc::ErrorCode::InvalidQuotientCuspData);
}

// Exhaustive over k <= 4, e_i <= 5.
TEST(QuotientCusp, EnumerationProperties) {
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> e(static_cast<std::size_t>(k), 2);
    for (;;) {
      if (std::any_of(e.begin(), e.end(), [](int x) { return x > 2; })) {
        const auto s = Q(e);
        const Mat2 b = slc::b_matrix(s);
        ASSERT_EQ(b, b_oracle(e));
        ASSERT_EQ(b.det(), 1);
        const auto data = slc::cover_equations(s);
        for (const auto& t : data.exponent_tuples) {
          ASSERT_EQ(t[0] + t[1], 2 * b.a);
          ASSERT_EQ(t[2] + t[3], 2 * b.d);
          for (long x : t) ASSERT_EQ((x - b.c) % 2, 0);
        }
        const auto cover = slc::cover_resolution_cycle(s);
        ASSERT_TRUE(slc::is_complete_intersection(cover));
        const int a2 = static_cast<int>(2 * b.a.get_si()), d2 = static_cast<int>(2 * b.d.get_si());
        ASSERT_EQ(slc::dual(cover), slc::canonicalize(slc::CuspCycle({a2, d2, a2, d2})));
      }
      std::size_t i = 0;
      while (i < e.size() && e[i] == 5) e[i++] = 2;
      if (i == e.size()) break;
      ++e[i];
    }
  }
}

}  // namespace
