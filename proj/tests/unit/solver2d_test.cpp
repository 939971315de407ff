#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "houghlp/errors.hpp"
#include "houghlp/instancegen.hpp"
#include "houghlp/oracle.hpp"
#include "houghlp/solver2d.hpp"
#include "rational_oracle.hpp"

namespace {

using namespace houghlp;
using houghlp::testing::rational_intercept;
using houghlp::testing::rel_close;

using Cs = std::vector<Constraint2>;

void expect_optimal(const Solution2& sol, double x, double t) {
  ASSERT_EQ(sol.status, Status::Optimal);
  EXPECT_DOUBLE_EQ(sol.x, x);
  EXPECT_DOUBLE_EQ(sol.t, t);
}

TEST(ExpandAbsolute, SplitsEachResidual) {
  const std::vector<Residual2> rows{{1, 0}, {2, -1}, {0, 5}};
  const Cs expected{{1, 0}, {-1, 0}, {2, -1}, {-2, 1}, {0, 5}, {0, -5}};
  EXPECT_EQ(expand_absolute(rows), expected);
  EXPECT_THROW(expand_absolute(std::vector<Residual2>{}), EmptyProblem);
}

TEST(DualPoints, MapsConstraintToPoint) {
  const Cs cs{{1, 0}, {0.5, 0}, {2, -1}};
  const std::vector<Point2> expected{{1, 0}, {0.5, 0}, {2, 1}};
  EXPECT_EQ(to_dual_points(cs), expected);
}

TEST(Partition, ZeroAbscissaGoesLeft) {
  {
    const std::vector<Point2> dp{{1, 0}, {-1, 0}};
    const Partition p = partition(dp);
    EXPECT_EQ(p.left, (std::vector<Point2>{{-1, 0}}));
    EXPECT_EQ(p.right, (std::vector<Point2>{{1, 0}}));
  }
  {
    const std::vector<Point2> dp{{0, -0.5}, {1, 0}};
    const Partition p = partition(dp);
    EXPECT_EQ(p.left, (std::vector<Point2>{{0, -0.5}}));
    EXPECT_EQ(p.right, (std::vector<Point2>{{1, 0}}));
  }
  {
    const std::vector<Point2> dp{{2, 1}, {3, 0}};
    const Partition p = partition(dp);
    EXPECT_TRUE(p.left.empty());
    EXPECT_EQ(p.right.size(), 2u);
  }
}

TEST(Advance, PicksExtremeSlope) {
  const std::vector<Point2> right{{1, 0}, {2, 1}};
  EXPECT_EQ(right[advance({-1, 0}, right, Side::Right)], (Point2{1, 0}));

  const std::vector<Point2> left{{-1, 0}, {0, -0.5}};
  EXPECT_EQ(left[advance({1, 0}, left, Side::Left)], (Point2{0, -0.5}));

  const std::vector<Point2> single{{1, 0}};
  EXPECT_EQ(advance({-1, 0}, single, Side::Right), 0u);

  EXPECT_THROW(advance({-1, 0}, std::vector<Point2>{}, Side::Right), ContractViolation);
}

TEST(Advance, CollinearTiePrefersFarther) {
  const std::vector<Point2> right{{1, 1}, {3, 3}, {2, 2}};
  EXPECT_EQ(right[advance({0, 0}, right, Side::Right)], (Point2{3, 3}));
  const std::vector<Point2> left{{-1, -1}, {-3, -3}, {-2, -2}};
  EXPECT_EQ(left[advance({1, 1}, left, Side::Left)], (Point2{-3, -3}));
}

TEST(Advance, NoCandidateBelowChosenLine) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0, 3);
  for (int rep = 0; rep < 500; ++rep) {
    const Point2 fixed{-std::fabs(g(rng)), g(rng)};
    std::vector<Point2> right(1 + rng() % 30);
    for (Point2& p : right) p = {std::fabs(g(rng)) + 1e-3, g(rng)};
    const Point2 chosen = right[advance(fixed, right, Side::Right)];
    for (const Point2& r : right) EXPECT_NE(orientation_exact(fixed, chosen, r), Sign::Negative);

    const Point2 rfixed{std::fabs(g(rng)) + 1e-3, g(rng)};
    std::vector<Point2> left(1 + rng() % 30);
    for (Point2& p : left) p = {-std::fabs(g(rng)), g(rng)};
    const Point2 lchosen = left[advance(rfixed, left, Side::Left)];
    for (const Point2& l : left) EXPECT_NE(orientation_exact(lchosen, rfixed, l), Sign::Negative);
  }
}

TEST(Solve, SpecExamples) {
  expect_optimal(solve(Cs{{1, 0}, {-1, 0}}), 0, 0);
  expect_optimal(solve(Cs{{2, -1}, {-1, 0}, {0.5, 0}}), 0, 0);
  expect_optimal(solve(Cs{{1, 0}, {-1, 1}}), 0.5, 0.5);
  EXPECT_EQ(solve(Cs{{1, 0}, {2, 3}}).status, Status::Unbounded);
  EXPECT_EQ(solve(Cs{{-1, 0}, {-2, 3}}).status, Status::Unbounded);
}

TEST(Solve, WorkedExampleMatchesBruteForce) {
  const Cs cs{{2, -1}, {-1, 0}, {0.5, 0}};
  const Solution2 oracle = brute2d(cs);
  ASSERT_EQ(oracle.status, Status::Optimal);
  EXPECT_DOUBLE_EQ(oracle.t, 0.0);
  EXPECT_DOUBLE_EQ(solve(cs).t, oracle.t);
}

TEST(Solve, AllZeroSlopes) {
  expect_optimal(solve(Cs{{0, 5}, {0, 3}}), 0, 5);
}

TEST(Solve, ZeroSlopeWithOnlyNegativeSlopes) {
  // g(x) = max(2, -x + 1, -2x + 6): flat at 2 once x >= 2.
  const Cs cs{{0, 2}, {-1, 1}, {-2, 6}};
  const Solution2 sol = solve(cs);
  ASSERT_EQ(sol.status, Status::Optimal);
  EXPECT_DOUBLE_EQ(sol.t, 2.0);
  EXPECT_TRUE(check_certificate(cs, sol, 1e-12));
  EXPECT_DOUBLE_EQ(brute2d(cs).t, 2.0);
}

TEST(Solve, ZeroSlopeWithOnlyPositiveSlopes) {
  const Cs cs{{0, -1}, {1, 3}, {3, 0}};
  const Solution2 sol = solve(cs);
  ASSERT_EQ(sol.status, Status::Optimal);
  EXPECT_DOUBLE_EQ(sol.t, -1.0);
  EXPECT_TRUE(check_certificate(cs, sol, 1e-12));
}

TEST(Solve, DuplicatesAndCollinearDualPoints) {
  // Dual points on integer grids, many duplicates and collinear runs.
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 2000; ++rep) {
    Cs cs(2 + rng() % 12);
    for (Constraint2& c : cs) {
      c = {static_cast<double>(static_cast<int>(rng() % 7) - 3),
           static_cast<double>(static_cast<int>(rng() % 7) - 3)};
    }
    const Solution2 want = brute2d(cs);
    const Solution2 got = solve(cs);
    ASSERT_EQ(got.status, want.status);
    if (!got.optimal()) continue;
    EXPECT_TRUE(rel_close(got.t, want.t, 1e-12)) << got.t << " vs " << want.t;
    EXPECT_TRUE(check_certificate(cs, got, feasibility_tolerance(cs, got)));
    EXPECT_LE(got.iterations, cs.size());
  }
}

TEST(Solve, Errors) {
  EXPECT_THROW(solve(Cs{}), EmptyProblem);
  EXPECT_THROW(solve(Cs{{1, NAN}, {-1, 0}}), NonFiniteInput);
  EXPECT_THROW(solve(Cs{{INFINITY, 0}, {-1, 0}}), NonFiniteInput);
}

TEST(Solve, MatchesBruteForceOnGaussianInstances) {
  for (std::size_t n : {2u, 3u, 4u, 7u, 20u, 100u}) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const Cs cs = gen2d({n, std::sqrt(10.0), 99, Dim::Two}, k);
      const Solution2 want = brute2d(cs);
      const Solution2 got = solve(cs);
      ASSERT_EQ(got.status, want.status) << "n=" << n << " k=" << k;
      if (got.optimal()) {
        EXPECT_TRUE(rel_close(got.t, want.t, 1e-9));
        EXPECT_TRUE(check_certificate(cs, got, feasibility_tolerance(cs, got)));
      }
    }
  }
}

TEST(Solve, PermutationInvariance) {
  std::mt19937_64 rng(21);
  for (std::uint64_t k = 0; k < 200; ++k) {
    Cs cs = gen2d({30, std::sqrt(10.0), 4, Dim::Two}, k);
    const Solution2 base = solve(cs);
    for (int s = 0; s < 5; ++s) {
      std::shuffle(cs.begin(), cs.end(), rng);
      const Solution2 other = solve(cs);
      ASSERT_EQ(other.status, base.status);
      if (base.optimal()) EXPECT_TRUE(rel_close(other.t, base.t, 1e-12));
    }
  }
}

TEST(Solve, InterceptsStrictlyDecreaseAndFinalLineSupports) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Cs cs = gen2d({50, std::sqrt(10.0), 6, Dim::Two}, k);
    PivotTrace trace;
    const Solution2 sol = solve(cs, &trace);
    if (!sol.optimal()) continue;
    ASSERT_EQ(trace.steps.size(), sol.iterations);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
      const mpq_class before = rational_intercept(trace.steps[i - 1].left, trace.steps[i - 1].right);
      const mpq_class after = rational_intercept(trace.steps[i].left, trace.steps[i].right);
      EXPECT_LT(after, before) << "instance " << k << " step " << i;
    }
    const PivotStep& last = trace.steps.back();
    std::vector<Point2> dp = to_dual_points(cs);
    if (trace.mirrored) {
      for (Point2& p : dp) p.x = -p.x;
    }
    for (const Point2& p : dp) {
      EXPECT_NE(orientation_exact(last.left, last.right, p), Sign::Negative);
    }
  }
}

TEST(Solve, TwoConstraintsNeedOnePivot) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Solution2 sol = solve(gen2d({2, std::sqrt(10.0), 3, Dim::Two}, k));
    EXPECT_LE(sol.iterations, 2u);
  }
}

TEST(SolveBoxed, SpecExamples) {
  expect_optimal(solve_boxed(Cs{{1, 0}, {-1, 0}}, -1, 1), 0, 0);
  expect_optimal(solve_boxed(Cs{{1, 0}, {-1, 0}}, 2, 3), 2, 2);
  expect_optimal(solve_boxed(Cs{{1, 0}}, 0, 1), 0, 0);
  expect_optimal(solve_boxed(Cs{{-1, 0}}, 0, 1), 1, -1);
  EXPECT_THROW(solve_boxed(Cs{{1, 0}}, 1, 0), DomainError);
  EXPECT_THROW(solve_boxed(Cs{}, 0, 1), EmptyProblem);
}

TEST(SolveBoxed, MatchesDenseScan) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Cs cs = gen2d({8, std::sqrt(10.0), 77, Dim::Two}, k);
    const Solution2 sol = solve_boxed(cs, 0, 1);
    double scan = INFINITY;
    for (int i = 0; i <= 4000; ++i) scan = std::min(scan, objective(cs, i / 4000.0));
    EXPECT_LE(sol.t, scan + 1e-12);
    double lipschitz = 0;
    for (const Constraint2& c : cs) lipschitz = std::max(lipschitz, std::fabs(c.a));
    EXPECT_GE(sol.t, scan - lipschitz / 4000.0 - 1e-12);
    EXPECT_GE(sol.x, 0.0);
    EXPECT_LE(sol.x, 1.0);
  }
}

TEST(Certificate, SpecExamples) {
  const Cs cs{{1, 0}, {-1, 0}};
  EXPECT_TRUE(check_certificate(cs, {Status::Optimal, 0, 0, 0}, 1e-9));
  EXPECT_FALSE(check_certificate(cs, {Status::Optimal, 0.5, 0.5, 0}, 1e-9));
  EXPECT_FALSE(check_certificate(cs, {Status::Optimal, 0, -0.1, 0}, 1e-9));
  EXPECT_FALSE(check_certificate(cs, {Status::Unbounded}, 1e-9));
}

TEST(Tolerance, ScalesWithOffsets) {
  const Cs cs{{1, -2000}, {-1, 5}};
  EXPECT_DOUBLE_EQ(feasibility_tolerance(cs, {Status::Optimal, 0, 3, 0}), 2e-6);
  EXPECT_DOUBLE_EQ(feasibility_tolerance(Cs{{1, 0.1}}, {Status::Optimal, 0, 0.5, 0}), 1e-9);
}

}  // namespace
