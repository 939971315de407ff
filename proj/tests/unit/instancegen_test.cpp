#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "houghlp/errors.hpp"
#include "houghlp/instancegen.hpp"
#include "houghlp/solver2d.hpp"

namespace {

using namespace houghlp;

const double kSigma = std::sqrt(10.0);

TEST(SplitMix, ReferenceVector) {
  // First output of SplitMix64 from state 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFull);
}

TEST(Gen2d, FrozenValues) {
  // Reference values from an independent Python implementation of the
  // documented stream.
  const auto cs = gen2d({3, kSigma, 42, Dim::Two});
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_DOUBLE_EQ(cs[0].a, -5.555336344479747);
  EXPECT_DOUBLE_EQ(cs[0].b, -2.5458128966689815);
  EXPECT_DOUBLE_EQ(cs[1].a, 8.308412814970227);
  EXPECT_DOUBLE_EQ(cs[1].b, 4.529608130404194);
  EXPECT_DOUBLE_EQ(cs[2].a, 4.892398065279583);
  EXPECT_DOUBLE_EQ(cs[2].b, -4.172320190689135);
}

TEST(Gen3d, FrozenValues) {
  const auto cs = gen3d({1, kSigma, 7, Dim::Three}, 3);
  EXPECT_DOUBLE_EQ(cs[0].a, 4.6321546939477685);
  EXPECT_DOUBLE_EQ(cs[0].b, 7.469206362301181);
  EXPECT_DOUBLE_EQ(cs[0].c, 0.7961224368825711);
}

TEST(Gen, Deterministic) {
  EXPECT_EQ(gen2d({3, kSigma, 42, Dim::Two}), gen2d({3, kSigma, 42, Dim::Two}));
  EXPECT_EQ(gen3d({5, kSigma, 7, Dim::Three}), gen3d({5, kSigma, 7, Dim::Three}));
  EXPECT_NE(gen2d({3, kSigma, 42, Dim::Two}), gen2d({3, kSigma, 43, Dim::Two}));
  EXPECT_NE(gen2d({3, kSigma, 42, Dim::Two}, 0), gen2d({3, kSigma, 42, Dim::Two}, 1));
}

TEST(Gen, PrefixStable) {
  // Constraint i depends only on (seed, instance, i).
  const auto small = gen2d({10, kSigma, 5, Dim::Two}, 2);
  const auto large = gen2d({100, kSigma, 5, Dim::Two}, 2);
  EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
}

TEST(Gen, SmallInstances) {
  const auto one = gen2d({1, kSigma, 1, Dim::Two});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(std::isfinite(one[0].a) && std::isfinite(one[0].b));
  const auto two = gen3d({2, kSigma, 1, Dim::Three});
  ASSERT_EQ(two.size(), 2u);
  for (const auto& c : two) EXPECT_TRUE(std::isfinite(c.a + c.b + c.c));
}

TEST(Gen, Statistics) {
  const std::size_t n = 10000;
  const auto cs2 = gen2d({n, kSigma, 2024, Dim::Two});
  const auto cs3 = gen3d({n, kSigma, 2024, Dim::Three});
  auto check = [&](auto get, const auto& cs) {
    double mean = 0;
    for (const auto& c : cs) mean += get(c);
    mean /= static_cast<double>(n);
    double var = 0;
    for (const auto& c : cs) var += (get(c) - mean) * (get(c) - mean);
    var /= static_cast<double>(n - 1);
    // 3-sigma bounds: sigma/sqrt(n) = 0.032, sigma^2 sqrt(2/n) = 0.14.
    EXPECT_NEAR(mean, 0.0, 0.1);
    EXPECT_NEAR(var, 10.0, 0.5);
  };
  check([](const Constraint2& c) { return c.a; }, cs2);
  check([](const Constraint2& c) { return c.b; }, cs2);
  check([](const Constraint3& c) { return c.a; }, cs3);
  check([](const Constraint3& c) { return c.b; }, cs3);
  check([](const Constraint3& c) { return c.c; }, cs3);
}

TEST(Gen, InvalidSpec) {
  EXPECT_THROW(gen2d({0, kSigma, 1, Dim::Two}), DomainError);
  EXPECT_THROW(gen2d({3, 0.0, 1, Dim::Two}), DomainError);
  EXPECT_THROW(gen2d({3, -1.0, 1, Dim::Two}), DomainError);
  EXPECT_THROW(gen2d({3, kSigma, 1, Dim::Three}), DomainError);
  EXPECT_THROW(gen3d({3, kSigma, 1, Dim::Two}), DomainError);
}

TEST(Gen, LargeInstancesAreBounded) {
  // P(unbounded) = 2^(1-n); none should appear at n = 64.
  for (std::uint64_t k = 0; k < 10000; ++k) {
    ASSERT_TRUE(solve(gen2d({64, kSigma, 31, Dim::Two}, k)).optimal());
  }
}

}  // namespace
