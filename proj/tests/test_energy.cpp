#include "mrf/energy.hpp"

#include "support/reference.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace mrf {
namespace {

using testing::brute_force_energy;
using testing::RefParams;

std::vector<Index> to_vector(const NeighborList& list) { return {list.begin(), list.end()}; }

TEST(Energy, TwoByTwoAllUp) {
  const SpinImage x(2, 2, 1);
  const EnergyParams<double> p{1, 1, 1};
  // Oracle: 4 pixels, 4 edges enumerated pairwise.
  ASSERT_DOUBLE_EQ(brute_force_energy(x, x, {1, 1, 1}), -4.0);
  EXPECT_DOUBLE_EQ(energy(x, x, p), -4.0);
}

TEST(Energy, SinglePixelHasNoPairs) {
  const SpinImage x(1, 1, 1);
  EXPECT_DOUBLE_EQ(energy(x, x, EnergyParams<double>{0, 1, 2}), -2.0);
}

TEST(Energy, ZeroParamsGiveZero) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SpinImage x = testing::random_sized_image(rng, 9, 9);
    const SpinImage y = testing::random_image(rng, x.width(), x.height());
    EXPECT_EQ(energy(x, y, EnergyParams<double>{}), 0.0);
  }
}

TEST(Energy, ShapeMismatchNamesBothShapes) {
  try {
    (void)energy(SpinImage(2, 3), SpinImage(3, 2), EnergyParams<double>{0, 1, 1});
    FAIL() << "expected a throw";
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("2x3"), std::string::npos);
    EXPECT_NE(msg.find("3x2"), std::string::npos);
  }
}

TEST(Energy, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(0.0, 2.0), bias(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const SpinImage x = testing::random_sized_image(rng, 7, 7);
    const SpinImage y = testing::random_image(rng, x.width(), x.height());
    const RefParams rp{bias(rng), coef(rng), coef(rng)};
    const double ref = brute_force_energy(x, y, rp);
    EXPECT_NEAR(energy(x, y, EnergyParams<double>{rp.h, rp.beta, rp.eta}), ref,
                1e-12 * (1 + std::abs(ref)));
  }
}

TEST(Energy, AllUpClosedForm) {
  for (Index w = 1; w <= 6; ++w) {
    for (Index h = 1; h <= 6; ++h) {
      const SpinImage x(w, h, 1);
      const EnergyParams<double> p{0.3, 0.7, 1.1};
      const double wh = static_cast<double>(w * h);
      const double pairs = static_cast<double>(w * (h - 1) + h * (w - 1));
      EXPECT_NEAR(energy(x, x, p), 0.3 * wh - 0.7 * pairs - 1.1 * wh, 1e-12);
    }
  }
}

TEST(Energy, PairCountMatchesEnumeration) {
  for (Index w = 1; w <= 8; ++w) {
    for (Index h = 1; h <= 8; ++h) {
      EXPECT_EQ(pair_count(w, h), testing::brute_force_pair_count(w, h));
      // With beta = 1 on an all-up image the coupling term counts every pair once.
      const SpinImage x(w, h, 1);
      EXPECT_DOUBLE_EQ(-energy(x, x, EnergyParams<double>{0, 1, 0}),
                       static_cast<double>(w * (h - 1) + h * (w - 1)));
    }
  }
}

TEST(Energy, InvariantUnderJointGlobalFlipWithoutBias) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const SpinImage x = testing::random_sized_image(rng, 10, 10);
    const SpinImage y = testing::random_image(rng, x.width(), x.height());
    const EnergyParams<double> coupling_only{0, 0.8, 0};
    EXPECT_DOUBLE_EQ(energy(x, y, coupling_only),
                     energy(x.negated(), y.negated(), coupling_only));
    const EnergyParams<double> no_bias{0, 0.8, 0.3};
    EXPECT_DOUBLE_EQ(energy(x, y, no_bias), energy(x.negated(), y.negated(), no_bias));
  }
}

TEST(Energy, FloatScalar) {
  const SpinImage x(2, 2, 1);
  EXPECT_FLOAT_EQ(energy(x, x, EnergyParams<float>{1, 1, 1}), -4.0f);
}

TEST(EnergyParams, Validation) {
  EXPECT_NO_THROW((EnergyParams<double>{-3, 0, 0}.validate()));
  EXPECT_THROW((EnergyParams<double>{0, -1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((EnergyParams<double>{0, 0, -1e-9}.validate()), std::invalid_argument);
  EXPECT_THROW((EnergyParams<double>{NAN, 0, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((EnergyParams<double>{0, INFINITY, 0}.validate()), std::invalid_argument);
}

TEST(FlipDelta, SinglePixelDoublesDataTerm) {
  const SpinImage x(1, 1, 1);
  EXPECT_DOUBLE_EQ(flip_delta(x, x, 0, EnergyParams<double>{0, 0, 1}), 2.0);
}

TEST(FlipDelta, ZeroParamsZeroDelta) {
  std::mt19937_64 rng(9);
  const SpinImage x = testing::random_image(rng, 5, 4);
  const SpinImage y = testing::random_image(rng, 5, 4);
  for (Index i = 0; i < x.size(); ++i) EXPECT_EQ(flip_delta(x, y, i, EnergyParams<double>{}), 0.0);
}

TEST(FlipDelta, TwoByTwoCorner) {
  const SpinImage x(2, 2, 1);
  SpinImage flipped = x;
  flipped.flip(0);
  const RefParams rp{1, 1, 1};
  const double oracle = brute_force_energy(flipped, x, rp) - brute_force_energy(x, x, rp);
  ASSERT_DOUBLE_EQ(oracle, 4.0);
  EXPECT_DOUBLE_EQ(flip_delta(x, x, 0, EnergyParams<double>{1, 1, 1}), 4.0);
}

TEST(FlipDelta, ErrorsOnBadInput) {
  const SpinImage x(3, 3);
  EXPECT_THROW((void)flip_delta(x, x, 9, EnergyParams<double>{}), std::out_of_range);
  EXPECT_THROW((void)flip_delta(x, x, -1, EnergyParams<double>{}), std::out_of_range);
  EXPECT_THROW((void)flip_delta(x, SpinImage(3, 2), 0, EnergyParams<double>{}),
               std::invalid_argument);
}

TEST(FlipDelta, MatchesFullRecomputation) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coef(0.0, 3.0), bias(-2.0, 2.0);
  for (int trial = 0; trial < 2000; ++trial) {
    SpinImage x = testing::random_sized_image(rng, 12, 12);
    const SpinImage y = testing::random_image(rng, x.width(), x.height());
    const EnergyParams<double> p{bias(rng), coef(rng), coef(rng)};
    const Index i = std::uniform_int_distribution<Index>(0, x.size() - 1)(rng);
    const double before = energy(x, y, p);
    const double delta = flip_delta(x, y, i, p);
    x.flip(i);
    const double after = energy(x, y, p);
    EXPECT_NEAR(delta, after - before, 1e-12 * (1 + std::abs(before)));
  }
}

TEST(FlipDelta, DoubleFlipCancels) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    SpinImage x = testing::random_sized_image(rng, 6, 6);
    const SpinImage original = x;
    const SpinImage y = testing::random_image(rng, x.width(), x.height());
    const EnergyParams<double> p{0.2, 0.9, 0.4};
    const Index i = std::uniform_int_distribution<Index>(0, x.size() - 1)(rng);
    const double d1 = flip_delta(x, y, i, p);
    x.flip(i);
    const double d2 = flip_delta(x, y, i, p);
    x.flip(i);
    EXPECT_EQ(x, original);
    EXPECT_DOUBLE_EQ(d1 + d2, 0.0);
  }
}

TEST(Neighbors, InteriorEdgeCorner) {
  EXPECT_EQ(to_vector(neighbors(4, 3, 3)), (std::vector<Index>{1, 7, 3, 5}));
  EXPECT_EQ(to_vector(neighbors(0, 3, 3)), (std::vector<Index>{3, 1}));
  EXPECT_EQ(to_vector(neighbors(0, 1, 1)), std::vector<Index>{});
  EXPECT_EQ(neighbors(1, 3, 3).size(), 3u);
  EXPECT_EQ(to_vector(neighbors(8, 3, 3)), (std::vector<Index>{5, 7}));
}

TEST(Neighbors, OutOfRange) {
  EXPECT_THROW(neighbors(9, 3, 3), std::out_of_range);
  EXPECT_THROW(neighbors(-1, 3, 3), std::out_of_range);
}

TEST(Neighbors, SumMatchesList) {
  std::mt19937_64 rng(4);
  const SpinImage x = testing::random_image(rng, 7, 5);
  for (Index i = 0; i < x.size(); ++i) {
    int sum = 0;
    for (const Index j : neighbors(i, x.width(), x.height())) sum += x[j];
    EXPECT_EQ(neighbor_spin_sum(x, i), sum);
  }
}

}  // namespace
}  // namespace mrf
