#include "houghlp/solver2d.hpp"

#include <algorithm>
#include <cmath>

#include "houghlp/errors.hpp"

namespace houghlp {

namespace detail {

SlopeClass classify_slopes(std::span<const Constraint2> cs) {
  if (cs.empty()) throw EmptyProblem();
  bool pos = false, neg = false, zero = false;
  for (const Constraint2& c : cs) {
    if (!std::isfinite(c.a) || !std::isfinite(c.b)) {
      throw NonFiniteInput("constraint coefficient is not finite");
    }
    if (c.a > 0) {
      pos = true;
    } else if (c.a < 0) {
      neg = true;
    } else {
      zero = true;
    }
  }
  if (pos && !neg && !zero) return SlopeClass::AllPositive;
  if (neg && !pos && !zero) return SlopeClass::AllNegative;
  if (zero && !pos && !neg) return SlopeClass::AllZero;
  if (!pos) return SlopeClass::NonPositive;
  return SlopeClass::Mixed;
}

Solution2 solution_from_edge(const Point2& left, const Point2& right) {
  const double m = (right.y - left.y) / (right.x - left.x);
  // Evaluate at the endpoint nearer the axis: exact when it sits on it.
  const Point2& p = std::fabs(left.x) <= std::fabs(right.x) ? left : right;
  Solution2 sol;
  sol.status = Status::Optimal;
  sol.x = m;
  sol.t = m * p.x - p.y;
  return sol;
}

}  // namespace detail

namespace {

double intercept_of(const Point2& l, const Point2& r) {
  const double m = (r.y - l.y) / (r.x - l.x);
  return l.y - m * l.x;
}

Point2 lowest_point(std::span<const Point2> pts) {
  return *std::min_element(pts.begin(), pts.end(), [](const Point2& p, const Point2& q) {
    return p.y < q.y || (p.y == q.y && p.x < q.x);
  });
}

// Pivot loop on a mixed instance where R is nonempty.
Solution2 pivot(std::span<const Constraint2> cs, PivotTrace* trace) {
  const std::vector<Point2> dp = to_dual_points(cs);
  const Partition parts = partition(dp);
  const std::vector<Point2>& L = parts.left;
  const std::vector<Point2>& R = parts.right;

  auto record = [&](std::size_t l, std::size_t r) {
    if (trace) trace->steps.push_back({L[l], R[r], intercept_of(L[l], R[r])});
  };

  const Point2 p0 = lowest_point(L);
  std::size_t l = static_cast<std::size_t>(std::find(L.begin(), L.end(), p0) - L.begin());
  std::size_t r = advance(L[l], R, Side::Right);
  std::size_t iterations = 1;
  record(l, r);

  // |DP| + 2 bounds the number of accepted pivots with room to spare; running
  // past it means the intercepts failed to decrease.
  const std::size_t limit = 2 * dp.size() + 4;
  for (;;) {
    const std::size_t next_l = advance(R[r], L, Side::Left);
    if (next_l == l) break;
    l = next_l;
    ++iterations;
    record(l, r);

    const std::size_t next_r = advance(L[l], R, Side::Right);
    if (next_r == r) break;
    r = next_r;
    ++iterations;
    record(l, r);

    if (iterations > limit) throw ContractViolation("pivot loop failed to terminate");
  }

  Solution2 sol = detail::solution_from_edge(L[l], R[r]);
  sol.iterations = iterations;
  return sol;
}

}  // namespace

std::vector<Constraint2> expand_absolute(std::span<const Residual2> rows) {
  if (rows.empty()) throw EmptyProblem();
  std::vector<Constraint2> out;
  out.reserve(2 * rows.size());
  for (const Residual2& r : rows) {
    out.push_back({r.a, r.c});
    out.push_back({-r.a, -r.c});
  }
  return out;
}

std::vector<Constraint3> expand_absolute(std::span<const Residual3> rows) {
  if (rows.empty()) throw EmptyProblem();
  std::vector<Constraint3> out;
  out.reserve(2 * rows.size());
  for (const Residual3& r : rows) {
    out.push_back({r.a, r.b, r.c});
    out.push_back({-r.a, -r.b, -r.c});
  }
  return out;
}

std::vector<Point2> to_dual_points(std::span<const Constraint2> cs) {
  std::vector<Point2> dp;
  dp.reserve(cs.size());
  for (const Constraint2& c : cs) dp.push_back(dual_of_line({c.a, c.b}));
  return dp;
}

Partition partition(std::span<const Point2> dp) {
  Partition parts;
  for (const Point2& p : dp) {
    (p.x > 0 ? parts.right : parts.left).push_back(p);
  }
  return parts;
}

std::size_t advance(const Point2& fixed, std::span<const Point2> candidates, Side side) {
  if (candidates.empty()) throw ContractViolation("advance: no candidates");
  // Scanning R from an L point: a candidate r beats best when it lies strictly
  // below line(fixed, best), i.e. turns clockwise. Scanning L from an R point
  // the same "strictly below" test is a counter-clockwise turn about fixed.
  const Sign better = side == Side::Right ? Sign::Negative : Sign::Positive;
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Sign s = orientation_exact(fixed, candidates[best], candidates[i]);
    if (s == better) {
      best = i;
    } else if (s == Sign::Zero &&
               std::fabs(candidates[i].x - fixed.x) > std::fabs(candidates[best].x - fixed.x)) {
      best = i;
    }
  }
  return best;
}

Solution2 solve(std::span<const Constraint2> cs, PivotTrace* trace) {
  if (trace) *trace = PivotTrace{};
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
      // R is empty; solve the mirror image x -> -x, where the zero-slope
      // points form L and the rest R.
      std::vector<Constraint2> mirrored(cs.begin(), cs.end());
      for (Constraint2& c : mirrored) c.a = -c.a;
      Solution2 sol = pivot(mirrored, trace);
      sol.x = -sol.x;
      if (trace) trace->mirrored = true;
      return sol;
    }
    case detail::SlopeClass::Mixed:
      break;
  }
  return pivot(cs, trace);
}

double objective(std::span<const Constraint2> cs, double x) {
  if (cs.empty()) throw EmptyProblem();
  double g = cs[0](x);
  for (const Constraint2& c : cs) g = std::max(g, c(x));
  return g;
}

Solution2 solve_boxed(std::span<const Constraint2> cs, double lo, double hi) {
  if (cs.empty()) throw EmptyProblem();
  if (!(lo <= hi)) throw DomainError("solve_boxed: lo > hi");
  const Solution2 free = solve(cs);

  double x;
  if (free.optimal()) {
    if (free.x >= lo && free.x <= hi) return free;
    x = free.x < lo ? lo : hi;
  } else {
    // Unbounded: every slope has the same strict sign, so the objective is
    // monotone and the box end in the descent direction wins.
    x = cs[0].a > 0 ? lo : hi;
  }
  return Solution2{Status::Optimal, x, objective(cs, x), free.iterations};
}

bool check_certificate(std::span<const Constraint2> cs, const Solution2& sol, double eps) {
  if (!sol.optimal()) return false;
  bool active_nonpos = false, active_nonneg = false;
  for (const Constraint2& c : cs) {
    const double v = c(sol.x);
    if (v > sol.t + eps) return false;
    if (v >= sol.t - eps) {
      if (c.a <= 0) active_nonpos = true;
      if (c.a >= 0) active_nonneg = true;
    }
  }
  return active_nonpos && active_nonneg;
}

double feasibility_tolerance(std::span<const Constraint2> cs, const Solution2& sol) {
  double scale = std::max(1.0, std::fabs(sol.t));
  for (const Constraint2& c : cs) scale = std::max(scale, std::fabs(c.b));
  return 1e-9 * scale;
}

}  // namespace houghlp
