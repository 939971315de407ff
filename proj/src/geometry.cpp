#include "houghlp/geometry.hpp"

#include <array>

#include "expansion.hpp"
#include "houghlp/errors.hpp"
#include "houghlp/problem.hpp"

namespace houghlp {
namespace {

// Forward error bound for a*b - c*d evaluated in double precision, relative to
// |a*b| + |c*d|: (3 + 16 eps) eps with eps = 2^-53.
constexpr double kProductFilterBound = (3.0 + 16.0 * 0x1p-53) * 0x1p-53;
// Below this magnitude the products may be subnormal and the bound is void.
constexpr double kFilterFloor = 0x1p-960;

int sign_int(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Compares |u1*v2| with |v1*u2| exactly, all four operands nonzero.
Sign compare_product_magnitudes(double u1, double v1, double u2, double v2) {
  int eu1, ev1, eu2, ev2;
  const double mu1 = std::frexp(std::fabs(u1), &eu1);
  const double mv1 = std::frexp(std::fabs(v1), &ev1);
  const double mu2 = std::frexp(std::fabs(u2), &eu2);
  const double mv2 = std::frexp(std::fabs(v2), &ev2);
  // Mantissas are in [0.5, 1), so each mantissa product is in [0.25, 1).
  const int shift = (eu1 + ev2) - (ev1 + eu2);
  if (shift >= 2) return Sign::Positive;
  if (shift <= -2) return Sign::Negative;

  const detail::TwoTerm lhs = detail::two_product(mu1, mv2);
  const detail::TwoTerm rhs = detail::two_product(mv1, mu2);
  const std::array<double, 4> terms = {std::ldexp(lhs.hi, shift), std::ldexp(lhs.lo, shift),
                                       -rhs.hi, -rhs.lo};
  return detail::exact_sum_sign(terms);
}

}  // namespace

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

const char* to_string(BoxEdge edge) {
  switch (edge) {
    case BoxEdge::X0: return "x=0";
    case BoxEdge::X1: return "x=1";
    case BoxEdge::Y0: return "y=0";
    case BoxEdge::Y1: return "y=1";
  }
  return "?";
}

Sign exact_product_compare(double u1, double v1, double u2, double v2) {
  if (!std::isfinite(u1) || !std::isfinite(v1) || !std::isfinite(u2) || !std::isfinite(v2)) {
    throw DomainError("exact_product_compare: non-finite operand");
  }

  const double lhs = u1 * v2;
  const double rhs = v1 * u2;
  const double det = lhs - rhs;
  const double magnitude = std::fabs(lhs) + std::fabs(rhs);
  if (std::isfinite(magnitude) && magnitude > kFilterFloor &&
      std::fabs(det) > kProductFilterBound * magnitude) {
    return sign_of(det);
  }

  const int s_lhs = sign_int(u1) * sign_int(v2);
  const int s_rhs = sign_int(v1) * sign_int(u2);
  if (s_lhs == 0) return static_cast<Sign>(-s_rhs);
  if (s_rhs == 0) return static_cast<Sign>(s_lhs);
  if (s_lhs != s_rhs) return static_cast<Sign>(s_lhs);

  const Sign by_magnitude = compare_product_magnitudes(u1, v1, u2, v2);
  return s_lhs > 0 ? by_magnitude : -by_magnitude;
}

Sign exact_difference_compare(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw DomainError("exact_difference_compare: non-finite operand");
  }
  const std::array<double, 4> terms = {a, -b, -c, d};
  return detail::exact_sum_sign(terms);
}

Sign orientation_exact(const Point2& p0, const Point2& p1, const Point2& p2) {
  if (!is_finite(p0) || !is_finite(p1) || !is_finite(p2)) {
    throw DomainError("orientation_exact: non-finite coordinate");
  }
  const double d1x = p1.x - p0.x;
  const double d1y = p1.y - p0.y;
  const double d2x = p2.x - p0.x;
  const double d2y = p2.y - p0.y;
  if (!std::isfinite(d1x) || !std::isfinite(d1y) || !std::isfinite(d2x) || !std::isfinite(d2y)) {
    throw DomainError("orientation_exact: coordinate difference overflows");
  }
  return exact_product_compare(d1x, d1y, d2x, d2y);
}

}  // namespace houghlp
