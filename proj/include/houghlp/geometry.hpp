#pragma once

// Hough duality between lines/planes and points, and exact sign predicates.
//
// Duality: the plane z = a*x + b*y + c maps to the point (a, b, -c) and the
// point (a, b, c) maps to the plane z = a*x + b*y - c. A point lies above a
// plane iff the dual plane lies below the dual point. The 2D maps are the same
// with z renamed to y.
//
// Predicates are exact: for finite double inputs the returned Sign equals the
// sign that unlimited-precision rational arithmetic would give. No epsilon.

#include <cmath>

namespace houghlp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  friend bool operator==(const Point3&, const Point3&) = default;
};

// y = slope * x + intercept
struct Line2 {
  double slope = 0.0;
  double intercept = 0.0;

  double operator()(double x) const { return slope * x + intercept; }
  friend bool operator==(const Line2&, const Line2&) = default;
};

// z = a*x + b*y + c
struct Plane3 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x, double y) const { return a * x + b * y + c; }
  friend bool operator==(const Plane3&, const Plane3&) = default;
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

constexpr Sign sign_of(double v) {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

const char* to_string(Sign s);

constexpr Point3 dual_of_plane(const Plane3& p) { return {p.a, p.b, -p.c}; }
constexpr Plane3 dual_of_point(const Point3& p) { return {p.x, p.y, -p.z}; }
constexpr Point2 dual_of_line(const Line2& l) { return {l.slope, -l.intercept}; }
constexpr Line2 dual_of_point(const Point2& p) { return {p.x, -p.y}; }

inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Exact sign of u1*v2 - v1*u2. Throws DomainError on non-finite input.
Sign exact_product_compare(double u1, double v1, double u2, double v2);

// Exact sign of (a - b) - (c - d). Throws DomainError on non-finite input.
Sign exact_difference_compare(double a, double b, double c, double d);

// Sign of the turn p0 -> p1 -> p2: Positive is counter-clockwise, Negative
// clockwise, Zero collinear. The offsets p1 - p0 and p2 - p0 are formed in
// double precision; the determinant sign of those offsets is exact. Throws
// DomainError on non-finite input or when an offset overflows.
Sign orientation_exact(const Point2& p0, const Point2& p1, const Point2& p2);

}  // namespace houghlp
