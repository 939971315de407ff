#pragma once

// Pivoting solver for min_x max_i (a_i x + b_i) in the Hough dual plane.
//
// Each constraint a x + b <= t becomes the dual point (a, -b). The optimum is
// the lower-hull edge of the dual points that crosses the vertical axis; its
// supporting line y = m x + c gives the primal optimum x = m, t = -c. The
// solver alternates between the points left of the axis (L, x <= 0) and right
// of it (R, x > 0), each time taking the extreme turn from the current point,
// until the pair stops changing. All comparisons are exact orientation tests;
// the only division is the final slope.

#include <cstddef>
#include <span>
#include <vector>

#include "houghlp/geometry.hpp"
#include "houghlp/problem.hpp"

namespace houghlp {

enum class Side { Left, Right };

struct Partition {
  std::vector<Point2> left;   // x <= 0
  std::vector<Point2> right;  // x > 0
};

// One accepted pivot: the current (L, R) pair and the y-intercept of the line
// through it.
struct PivotStep {
  Point2 left;
  Point2 right;
  double intercept = 0.0;
};

struct PivotTrace {
  std::vector<PivotStep> steps;
  // Set when the instance was solved in the mirrored frame x -> -x.
  bool mirrored = false;
};

// Each |a x + c| becomes (a, c) and (-a, -c).
std::vector<Constraint2> expand_absolute(std::span<const Residual2> rows);
std::vector<Constraint3> expand_absolute(std::span<const Residual3> rows);

std::vector<Point2> to_dual_points(std::span<const Constraint2> cs);

Partition partition(std::span<const Point2> dp);

// Index of the candidate making the extreme turn from `fixed`. With
// side == Right (fixed on the left, candidates to its right) the candidate of
// minimal slope; with side == Left the candidate l of maximal slope of
// line(l, fixed). Either way no candidate lies strictly below the chosen line.
// Collinear ties go to the candidate farther from fixed in x.
std::size_t advance(const Point2& fixed, std::span<const Point2> candidates, Side side);

// Throws EmptyProblem / NonFiniteInput.
Solution2 solve(std::span<const Constraint2> cs, PivotTrace* trace = nullptr);

// Minimizes over x in [lo, hi]. Always Optimal.
Solution2 solve_boxed(std::span<const Constraint2> cs, double lo, double hi);

// max_i (a_i x + b_i)
double objective(std::span<const Constraint2> cs, double x);

// Feasibility within eps plus active constraints of both slope signs.
bool check_certificate(std::span<const Constraint2> cs, const Solution2& sol, double eps);

// 1e-9 * max(1, |t|, max|b_i|): the slack allowed on a_i x + b_i <= t.
double feasibility_tolerance(std::span<const Constraint2> cs, const Solution2& sol);

namespace detail {

enum class SlopeClass { Mixed, AllPositive, AllNegative, AllZero, NonPositive };

// Classifies the slope signs; throws EmptyProblem / NonFiniteInput.
SlopeClass classify_slopes(std::span<const Constraint2> cs);

// Primal solution (x, t) from the supporting line through left and right.
Solution2 solution_from_edge(const Point2& left, const Point2& right);

}  // namespace detail

}  // namespace houghlp
