#include <gtest/gtest.h>

#include "slc/elliptic.hpp"
#include "slc/error.hpp"

namespace {

using slc::SimpleElliptic;

TEST(SimpleElliptic, EmbeddedDimension) {
  EXPECT_EQ(slc::embedded_dimension(SimpleElliptic(1)), 3);
  EXPECT_EQ(slc::embedded_dimension(SimpleElliptic(3)), 3);
  EXPECT_EQ(slc::embedded_dimension(SimpleElliptic(8)), 8);
}

TEST(SimpleElliptic, Predicates) {
  EXPECT_TRUE(slc::is_lci(SimpleElliptic(4)));
  EXPECT_FALSE(slc::is_lci(SimpleElliptic(5)));
  EXPECT_TRUE(slc::is_lci(SimpleElliptic(1)));
  EXPECT_TRUE(slc::is_smoothable(SimpleElliptic(9)));
  EXPECT_FALSE(slc::is_smoothable(SimpleElliptic(10)));
  EXPECT_TRUE(slc::has_lci_smoothing_lifting(SimpleElliptic(8)));
  EXPECT_FALSE(slc::has_lci_smoothing_lifting(SimpleElliptic(6)));
  EXPECT_TRUE(slc::has_lci_smoothing_lifting(SimpleElliptic(2)));
}

TEST(SimpleElliptic, Implications) {
  for (long d = 1; d <= 100; ++d) {
    const SimpleElliptic s(d);
    if (slc::has_lci_smoothing_lifting(s)) EXPECT_TRUE(slc::is_smoothable(s)) << d;
    if (slc::is_lci(s)) EXPECT_TRUE(slc::has_lci_smoothing_lifting(s)) << d;
    EXPECT_EQ(slc::has_lci_smoothing_lifting(s), d <= 4 || d == 8 || d == 9) << d;
  }
  EXPECT_THROW(SimpleElliptic(0), slc::Error);
}

}  // namespace
