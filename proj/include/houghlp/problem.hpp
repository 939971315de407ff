#pragma once

// Problem and solution types shared by the 2D solvers, the 3D pruner and the
// brute-force oracles.

#include <cstddef>

namespace houghlp {

// a*x + b <= t
struct Constraint2 {
  double a = 0.0;
  double b = 0.0;

  double operator()(double x) const { return a * x + b; }
  friend bool operator==(const Constraint2&, const Constraint2&) = default;
};

// a*x + b*y + c <= t
struct Constraint3 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x, double y) const { return a * x + b * y + c; }
  friend bool operator==(const Constraint3&, const Constraint3&) = default;
};

// |a*x + c|, expanded into a pair of Constraint2 rows.
struct Residual2 {
  double a = 0.0;
  double c = 0.0;
};

// |a*x + b*y + c|
struct Residual3 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

enum class Status { Optimal, Unbounded };

struct Solution2 {
  Status status = Status::Optimal;
  double x = 0.0;
  double t = 0.0;
  // Number of pivot selections that changed the current pair.
  std::size_t iterations = 0;

  bool optimal() const { return status == Status::Optimal; }
};

// Problem 3 is always bounded: (x, y) lives in the unit box.
struct Solution3 {
  Status status = Status::Optimal;
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

// Edges of the unit box [0,1]^2.
enum class BoxEdge { X0, X1, Y0, Y1 };

inline constexpr BoxEdge kBoxEdges[] = {BoxEdge::X0, BoxEdge::X1, BoxEdge::Y0,
                                        BoxEdge::Y1};

const char* to_string(BoxEdge edge);

}  // namespace houghlp
