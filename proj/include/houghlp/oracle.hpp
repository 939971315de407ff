#pragma once

// Brute-force reference solvers. Quadratic (2D) and quartic (3D) time; meant
// for verification, not production sizes.

#include <cstddef>
#include <span>

#include "houghlp/problem.hpp"

namespace houghlp {

// Evaluates max_i (a_i x + b_i) at every pairwise intersection abscissa.
// Among exact ties the smallest x is returned.
Solution2 brute2d(std::span<const Constraint2> cs);

// Minimizes max_i (a_i x + b_i y + c_i) over [0,1]^2 by enumerating triple
// intersections inside the box, pairwise crossings on each edge and the four
// corners. Among exact ties the lexicographically smallest (x, y) is returned.
Solution3 brute3d_box(std::span<const Constraint3> cs);

// Minimum over one box edge by enumerating pairwise crossings and the edge
// endpoints. The returned x is the free coordinate along the edge.
Solution2 brute3d_edge(std::span<const Constraint3> cs, BoxEdge edge);

// Minimum of the objective over a uniform (steps+1)^2 grid of the box.
double grid_min(std::span<const Constraint3> cs, std::size_t steps);

// max_i (a_i x + b_i y + c_i)
double objective3(std::span<const Constraint3> cs, double x, double y);

}  // namespace houghlp
