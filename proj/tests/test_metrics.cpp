#include "mrf/metrics.hpp"

#include "support/reference.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mrf {
namespace {

TEST(Metrics, IdenticalImages) {
  std::mt19937_64 rng(1);
  const SpinImage a = testing::random_image(rng, 13, 7);
  EXPECT_EQ(agreement_percent(a, a), 100.0);
  EXPECT_EQ(disagreement_count(a, a), 0);
}

TEST(Metrics, OnePixelOfHundred) {
  SpinImage a(10, 10, 1);
  SpinImage b = a;
  b.flip(37);
  EXPECT_DOUBLE_EQ(agreement_percent(a, b), 99.0);
  EXPECT_EQ(disagreement_count(a, b), 1);
}

TEST(Metrics, FullNegation) {
  std::mt19937_64 rng(2);
  const SpinImage a = testing::random_image(rng, 9, 4);
  EXPECT_EQ(agreement_percent(a, a.negated()), 0.0);
  EXPECT_EQ(disagreement_count(a, a.negated()), a.size());
}

TEST(Metrics, ShapeMismatch) {
  EXPECT_THROW(agreement_percent(SpinImage(4, 2), SpinImage(2, 4)), std::invalid_argument);
  EXPECT_THROW(disagreement_count(SpinImage(4, 2), SpinImage(4, 3)), std::invalid_argument);
}

TEST(Metrics, SymmetricAndTriangleInequality) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const SpinImage a = testing::random_sized_image(rng, 8, 8);
    const SpinImage b = testing::random_image(rng, a.width(), a.height());
    const SpinImage c = testing::random_image(rng, a.width(), a.height());
    EXPECT_EQ(agreement_percent(a, b), agreement_percent(b, a));
    EXPECT_LE(disagreement_count(a, c), disagreement_count(a, b) + disagreement_count(b, c));
    EXPECT_DOUBLE_EQ(agreement_percent(a, b),
                     100.0 * (1.0 - double(disagreement_count(a, b)) / double(a.size())));
  }
}

}  // namespace
}  // namespace mrf
