#include "houghlp/baseline_hull.hpp"

#include <algorithm>

#include "houghlp/errors.hpp"
#include "houghlp/solver2d.hpp"

namespace houghlp {
namespace {

Solution2 crossing_edge(std::span<const Constraint2> cs) {
  const HullChain hull = lower_hull(to_dual_points(cs));
  const std::vector<Point2>& v = hull.vertices;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i].x <= 0 && v[i + 1].x > 0) return detail::solution_from_edge(v[i], v[i + 1]);
  }
  throw ContractViolation("solve_baseline: no hull edge crosses the axis");
}

}  // namespace

HullChain lower_hull(std::span<const Point2> dp) {
  std::vector<Point2> pts(dp.begin(), dp.end());
  std::sort(pts.begin(), pts.end(), [](const Point2& p, const Point2& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  // Only the lowest point of each abscissa can be on the lower hull.
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& p, const Point2& q) { return p.x == q.x; }),
            pts.end());

  HullChain hull;
  std::vector<Point2>& h = hull.vertices;
  h.reserve(pts.size());
  for (const Point2& p : pts) {
    while (h.size() >= 2 && orientation_exact(h[h.size() - 2], h.back(), p) != Sign::Positive) {
      h.pop_back();
    }
    h.push_back(p);
  }
  return hull;
}

Solution2 solve_baseline(std::span<const Constraint2> cs) {
  switch (detail::classify_slopes(cs)) {
    case detail::SlopeClass::AllPositive:
    case detail::SlopeClass::AllNegative:
      return Solution2{Status::Unbounded};
    case detail::SlopeClass::AllZero: {
      double t = cs[0].b;
      for (const Constraint2& c : cs) t = std::max(t, c.b);
      return Solution2{Status::Optimal, 0.0, t, 0};
    }
    case detail::SlopeClass::NonPositive: {
      std::vector<Constraint2> mirrored(cs.begin(), cs.end());
      for (Constraint2& c : mirrored) c.a = -c.a;
      Solution2 sol = crossing_edge(mirrored);
      sol.x = -sol.x;
      return sol;
    }
    case detail::SlopeClass::Mixed:
      break;
  }
  return crossing_edge(cs);
}

}  // namespace houghlp
