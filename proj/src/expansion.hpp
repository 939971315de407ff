#pragma once

// Error-free transformations and non-overlapping expansions (Shewchuk 1997).
// Internal to the library.

#include <cmath>
#include <span>

#include "houghlp/geometry.hpp"

namespace houghlp::detail {

struct TwoTerm {
  double hi;
  double lo;
};

// hi + lo == a + b exactly, barring overflow.
inline TwoTerm two_sum(double a, double b) {
  const double x = a + b;
  const double b_virtual = x - a;
  const double a_virtual = x - b_virtual;
  return {x, (a - a_virtual) + (b - b_virtual)};
}

// hi + lo == a * b exactly when the product neither overflows nor underflows.
inline TwoTerm two_product(double a, double b) {
  const double x = a * b;
  return {x, std::fma(a, b, -x)};
}

// Exact sign of the sum of the given terms. Handles magnitudes up to DBL_MAX.
Sign exact_sum_sign(std::span<const double> terms);

}  // namespace houghlp::detail
