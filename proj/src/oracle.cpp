#include "houghlp/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "houghlp/errors.hpp"

namespace houghlp {
namespace {

void require_finite(std::span<const Constraint2> cs) {
  if (cs.empty()) throw EmptyProblem();
  for (const Constraint2& c : cs) {
    if (!std::isfinite(c.a) || !std::isfinite(c.b)) throw NonFiniteInput("non-finite coefficient");
  }
}

void require_finite(std::span<const Constraint3> cs) {
  if (cs.empty()) throw EmptyProblem();
  for (const Constraint3& c : cs) {
    if (!std::isfinite(c.a) || !std::isfinite(c.b) || !std::isfinite(c.c)) {
      throw NonFiniteInput("non-finite coefficient");
    }
  }
}

// Slope and offset of a row along an edge, parametrized by u in [0, 1].
struct EdgeRow {
  double slope;
  double offset;
};

EdgeRow edge_row(const Constraint3& c, BoxEdge edge) {
  switch (edge) {
    case BoxEdge::X0: return {c.b, c.c};
    case BoxEdge::X1: return {c.b, c.a + c.c};
    case BoxEdge::Y0: return {c.a, c.c};
    case BoxEdge::Y1: return {c.a, c.b + c.c};
  }
  return {0, 0};
}

// Box point at parameter u on the edge.
void edge_point(BoxEdge edge, double u, double& x, double& y) {
  switch (edge) {
    case BoxEdge::X0: x = 0; y = u; return;
    case BoxEdge::X1: x = 1; y = u; return;
    case BoxEdge::Y0: x = u; y = 0; return;
    case BoxEdge::Y1: x = u; y = 1; return;
  }
}

double g2(std::span<const Constraint2> cs, double x) {
  double g = -INFINITY;
  for (const Constraint2& c : cs) g = std::max(g, c.a * x + c.b);
  return g;
}

}  // namespace

double objective3(std::span<const Constraint3> cs, double x, double y) {
  double g = -INFINITY;
  for (const Constraint3& c : cs) g = std::max(g, c.a * x + c.b * y + c.c);
  return g;
}

Solution2 brute2d(std::span<const Constraint2> cs) {
  require_finite(cs);
  bool pos = false, neg = false;
  for (const Constraint2& c : cs) {
    pos = pos || c.a > 0;
    neg = neg || c.a < 0;
  }
  const bool any_zero = std::any_of(cs.begin(), cs.end(), [](auto& c) { return c.a == 0; });
  if (!any_zero && (pos != neg)) return Solution2{Status::Unbounded};
  if (!pos && !neg) return Solution2{Status::Optimal, 0.0, g2(cs, 0.0), 0};

  Solution2 best{Status::Optimal, 0.0, INFINITY, 0};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].a == cs[j].a) continue;
      const double x = (cs[j].b - cs[i].b) / (cs[i].a - cs[j].a);
      const double g = g2(cs, x);
      if (g < best.t || (g == best.t && x < best.x)) {
        best.t = g;
        best.x = x;
      }
    }
  }
  return best;
}

Solution2 brute3d_edge(std::span<const Constraint3> cs, BoxEdge edge) {
  require_finite(cs);
  Solution2 best{Status::Optimal, 0.0, INFINITY, 0};
  auto consider = [&](double u) {
    if (!(u >= 0.0 && u <= 1.0)) return;
    double x = 0, y = 0;
    edge_point(edge, u, x, y);
    const double g = objective3(cs, x, y);
    if (g < best.t || (g == best.t && u < best.x)) {
      best.t = g;
      best.x = u;
    }
  };
  consider(0.0);
  consider(1.0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const EdgeRow ri = edge_row(cs[i], edge);
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const EdgeRow rj = edge_row(cs[j], edge);
      if (ri.slope == rj.slope) continue;
      consider((rj.offset - ri.offset) / (ri.slope - rj.slope));
    }
  }
  return best;
}

Solution3 brute3d_box(std::span<const Constraint3> cs) {
  require_finite(cs);
  Solution3 best{Status::Optimal, 0.0, 0.0, INFINITY};
  auto consider = [&](double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) return;
    const double g = objective3(cs, x, y);
    if (g < best.t || (g == best.t && (x < best.x || (x == best.x && y < best.y)))) {
      best.t = g;
      best.x = x;
      best.y = y;
    }
  };

  consider(0, 0);
  consider(0, 1);
  consider(1, 0);
  consider(1, 1);

  for (BoxEdge edge : kBoxEdges) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const EdgeRow ri = edge_row(cs[i], edge);
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const EdgeRow rj = edge_row(cs[j], edge);
        if (ri.slope == rj.slope) continue;
        double x = 0, y = 0;
        edge_point(edge, (rj.offset - ri.offset) / (ri.slope - rj.slope), x, y);
        consider(x, y);
      }
    }
  }

  // Interior vertices: three rows at equal value.
  const std::size_t n = cs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a11 = cs[i].a - cs[j].a, a12 = cs[i].b - cs[j].b, r1 = cs[j].c - cs[i].c;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double a21 = cs[i].a - cs[k].a, a22 = cs[i].b - cs[k].b, r2 = cs[k].c - cs[i].c;
        const double det = a11 * a22 - a12 * a21;
        if (det == 0.0) continue;
        consider((r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det);
      }
    }
  }
  return best;
}

double grid_min(std::span<const Constraint3> cs, std::size_t steps) {
  require_finite(cs);
  if (steps == 0) throw DomainError("grid_min: steps must be positive");
  double best = INFINITY;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(steps);
    for (std::size_t j = 0; j <= steps; ++j) {
      const double y = static_cast<double>(j) / static_cast<double>(steps);
      best = std::min(best, objective3(cs, x, y));
    }
  }
  return best;
}

}  // namespace houghlp
