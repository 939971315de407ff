#include "houghlp/prune3d.hpp"

#include <algorithm>
#include <cmath>

#include "expansion.hpp"
#include "houghlp/errors.hpp"
#include "houghlp/oracle.hpp"
#include "houghlp/solver2d.hpp"

namespace houghlp {

const char* to_string(PruneRule rule) {
  switch (rule) {
    case PruneRule::Theorem: return "theorem";
    case PruneRule::BoxDominance: return "dominance";
  }
  return "?";
}

std::vector<Point3> to_dual_points(std::span<const Constraint3> cs) {
  std::vector<Point3> dp;
  dp.reserve(cs.size());
  for (const Constraint3& c : cs) {
    if (!std::isfinite(c.a) || !std::isfinite(c.b) || !std::isfinite(c.c)) {
      throw NonFiniteInput("constraint coefficient is not finite");
    }
    dp.push_back(dual_of_plane({c.a, c.b, c.c}));
  }
  return dp;
}

std::size_t find_pmin(std::span<const Point3> dp) {
  if (dp.empty()) throw EmptyProblem();
  std::size_t best = 0;
  for (std::size_t i = 1; i < dp.size(); ++i) {
    const Point3& p = dp[i];
    const Point3& q = dp[best];
    if (p.z < q.z || (p.z == q.z && (p.x < q.x || (p.x == q.x && p.y < q.y)))) best = i;
  }
  return best;
}

bool is_behind(const Point3& p, const Point3& q) {
  return p.x < q.x && p.y < q.y && p.z > q.z;
}

bool is_too_steep(const Point3& p, const Point3& q) {
  if (!(p.x > q.x && p.y > q.y && p.z > q.z)) return false;
  return exact_difference_compare(p.z, q.z, p.x, q.x) == Sign::Positive &&
         exact_difference_compare(p.z, q.z, p.y, q.y) == Sign::Positive;
}

bool is_box_dominated(const Point3& p, const Point3& q) {
  if (!(p.x > q.x && p.y > q.y && p.z > q.z)) return false;
  const double terms[] = {p.z, -q.z, -p.x, q.x, -p.y, q.y};
  return detail::exact_sum_sign(terms) == Sign::Positive;
}

PruneReport prune(std::span<const Constraint3> cs, PruneRule rule) {
  if (cs.empty()) throw EmptyProblem();
  const std::vector<Point3> dp = to_dual_points(cs);
  PruneReport report;
  report.pmin_index = find_pmin(dp);
  const Point3& pmin = dp[report.pmin_index];

  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (i != report.pmin_index) {
      ++report.evaluations;
      if (is_behind(dp[i], pmin)) {
        ++report.discarded_behind;
        continue;
      }
      const bool steep = rule == PruneRule::Theorem ? is_too_steep(dp[i], pmin)
                                                    : is_box_dominated(dp[i], pmin);
      if (steep) {
        ++report.discarded_steep;
        continue;
      }
    }
    report.kept.push_back(cs[i]);
    report.kept_indices.push_back(i);
  }
  return report;
}

std::vector<Constraint2> restrict_to_edge(std::span<const Constraint3> cs, BoxEdge edge) {
  std::vector<Constraint2> out;
  out.reserve(cs.size());
  for (const Constraint3& c : cs) {
    switch (edge) {
      case BoxEdge::X0: out.push_back({c.b, c.c}); break;
      case BoxEdge::X1: out.push_back({c.b, c.a + c.c}); break;
      case BoxEdge::Y0: out.push_back({c.a, c.c}); break;
      case BoxEdge::Y1: out.push_back({c.a, c.b + c.c}); break;
    }
  }
  return out;
}

std::array<EdgeSolution, 4> boundary_via_2d(std::span<const Constraint3> cs) {
  if (cs.empty()) throw EmptyProblem();
  std::array<EdgeSolution, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const BoxEdge edge = kBoxEdges[i];
    out[i] = {edge, solve_boxed(restrict_to_edge(cs, edge), 0.0, 1.0)};
  }
  return out;
}

Solution3 solve3d(std::span<const Constraint3> cs, const Solve3dOptions& options) {
  const PruneReport report = prune(cs, options.rule);
  const Solution3 sol = brute3d_box(report.kept);
  if (!options.validate) return sol;

  double best_boundary = INFINITY;
  for (const EdgeSolution& e : boundary_via_2d(cs)) {
    best_boundary = std::min(best_boundary, e.solution.t);
  }
  const double tol = 1e-9 * std::max({1.0, std::fabs(sol.t), std::fabs(best_boundary)});
  if (best_boundary < sol.t - tol) {
    throw ContractViolation("solve3d: a boundary solution beats the reported optimum");
  }
  const bool on_boundary = sol.x == 0.0 || sol.x == 1.0 || sol.y == 0.0 || sol.y == 1.0;
  if (on_boundary && std::fabs(best_boundary - sol.t) > tol) {
    throw ContractViolation("solve3d: boundary optimum disagrees with the boundary solves");
  }
  return sol;
}

}  // namespace houghlp
