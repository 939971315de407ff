#pragma once

// Constraint discarding for the unit-box 3D problem
//
//   minimize t  s.t.  a_i x + b_i y + c_i <= t,  x, y in [0, 1].
//
// Constraints are mapped to dual points (a, b, -c). p_min, a dual point of
// minimal z (the largest offset c), anchors two discard rules:
//
//   behind      p_x < q_x, p_y < q_y, p_z > q_z
//   too steep   p > q in every coordinate and both rise ratios
//               (p_z - q_z) / (p_x - q_x) and (p_z - q_z) / (p_y - q_y) exceed 1
//
// "Behind" is dominance on the positive quadrant and always safe. The
// too-steep rule is not: with x = y = 1 the discarded row can still exceed
// p_min's row (alpha + beta > gamma), and removing it can lower the box
// optimum. PruneRule::BoxDominance replaces it with the safe condition
// alpha + beta < gamma, under which the row is below p_min's row on the whole
// box.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "houghlp/geometry.hpp"
#include "houghlp/problem.hpp"

namespace houghlp {

enum class PruneRule {
  Theorem,       // behind + too steep (ratio form)
  BoxDominance,  // behind + strictly dominated on the unit box
};

const char* to_string(PruneRule rule);

struct PruneReport {
  std::vector<Constraint3> kept;
  std::vector<std::size_t> kept_indices;  // into the input, increasing
  std::size_t discarded_behind = 0;
  std::size_t discarded_steep = 0;
  std::size_t pmin_index = 0;  // into the input; always in kept_indices
  std::size_t evaluations = 0;  // behind/steep tests performed
};

struct EdgeSolution {
  BoxEdge edge;
  Solution2 solution;  // x is the free coordinate along the edge
};

std::vector<Point3> to_dual_points(std::span<const Constraint3> cs);

// Minimal z, ties by smallest (x, y). Throws EmptyProblem.
std::size_t find_pmin(std::span<const Point3> dp);

bool is_behind(const Point3& p, const Point3& q);
bool is_too_steep(const Point3& p, const Point3& q);
// p > q coordinatewise and (p_x - q_x) + (p_y - q_y) < (p_z - q_z), exactly.
bool is_box_dominated(const Point3& p, const Point3& q);

PruneReport prune(std::span<const Constraint3> cs, PruneRule rule = PruneRule::Theorem);

// Fixes one box coordinate and solves the induced 1D problem on [0, 1].
std::array<EdgeSolution, 4> boundary_via_2d(std::span<const Constraint3> cs);

// The 2D instance obtained by fixing one coordinate on `edge`.
std::vector<Constraint2> restrict_to_edge(std::span<const Constraint3> cs, BoxEdge edge);

struct Solve3dOptions {
  PruneRule rule = PruneRule::BoxDominance;
  // Cross-check the answer against the four boundary solves.
  bool validate = false;
};

// Prunes, then solves the reduced problem exactly by candidate enumeration.
Solution3 solve3d(std::span<const Constraint3> cs, const Solve3dOptions& options = {});

}  // namespace houghlp
