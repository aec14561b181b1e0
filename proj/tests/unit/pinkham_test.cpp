#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slc/cusp.hpp"
#include "slc/error.hpp"
#include "slc/pinkham.hpp"

namespace {

using slc::TriplePQR;

TEST(TriplePQR, Validation) {
  EXPECT_THROW(TriplePQR(2, 2, 2), slc::Error);
  EXPECT_THROW(TriplePQR(2, 3, 6), slc::Error);  // sum exactly 1
  EXPECT_THROW(TriplePQR(1, 5, 5), slc::Error);
  EXPECT_NO_THROW(TriplePQR(2, 3, 7));
}

TEST(DualCycle, Examples) {
  EXPECT_EQ(slc::dual_cycle({4, 4, 4}), slc::CuspCycle({3, 3, 3}));
  EXPECT_EQ(slc::dual_cycle({3, 4, 5}), slc::canonicalize(slc::CuspCycle({2, 3, 4})));
  try {
    slc::dual_cycle({2, 3, 7});
    FAIL();
  } catch (const slc::Error& e) {
    EXPECT_EQ(e.code(), slc::ErrorCode::InvalidTriple);
  }
}

TEST(GroupOrder, Examples) {
  EXPECT_EQ(slc::group_order({4, 4, 4}), 16);
  EXPECT_EQ(slc::group_order({3, 3, 4}), 3);
  EXPECT_EQ(slc::group_order({5, 5, 5}), 50);
  EXPECT_EQ(slc::group_order({2, 3, 7}), 1);  // defined even where dual_cycle is not
}

TEST(Smoothing, Examples) {
  EXPECT_EQ(slc::smoothing_record({4, 4, 4}).equations.at(0), "x^4+y^4+z^4+xyz=t");
  EXPECT_EQ(slc::smoothing_record({3, 4, 5}).equations.at(0), "x^3+y^4+z^5+xyz=t");
  EXPECT_TRUE(slc::smoothing_record({3, 4, 5}).parameter_invariant);
}

TEST(GroupOrder, MatchesMonodromyAndClosedForm) {
  int checked = 0;
  for (long p = 3; p <= 8; ++p)
    for (long q = p; q <= 8; ++q)
      for (long r = q; r <= 8; ++r) {
        if (q * r + p * r + p * q >= p * q * r) continue;
        const TriplePQR t(p, q, r);
        const auto order = slc::group_order(t);
        ASSERT_EQ(order, p * q * r - p * q - q * r - r * p);
        const auto ref = oracle::monodromy({static_cast<int>(p - 1), static_cast<int>(q - 1),
                                            static_cast<int>(r - 1)});
        ASSERT_EQ(order, mpz_class(abs(2 - (ref[0] + ref[3]))));
        ++checked;
      }
  EXPECT_GT(checked, 50);
}

}  // namespace
