#pragma once

// Reference 2D solver: lower convex hull of the dual points by monotone chain,
// then the hull edge crossing x = 0. O(n log n).

#include <span>
#include <vector>

#include "houghlp/geometry.hpp"
#include "houghlp/problem.hpp"

namespace houghlp {

// Lower hull, left to right, strictly convex (collinear vertices dropped).
struct HullChain {
  std::vector<Point2> vertices;
};

HullChain lower_hull(std::span<const Point2> dp);

// Throws EmptyProblem / NonFiniteInput.
Solution2 solve_baseline(std::span<const Constraint2> cs);

}  // namespace houghlp
