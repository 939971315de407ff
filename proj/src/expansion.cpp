#include "expansion.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace houghlp::detail {
namespace {

// Terms below 2^1020 in magnitude cannot overflow when at most a handful are
// accumulated.
constexpr double kSafeMagnitude = 0x1p1020;
constexpr double kSplitMagnitude = 0x1p-900;
constexpr std::size_t kInlineTerms = 8;

// Adds `b` into the non-overlapping expansion `e` (increasing magnitude),
// dropping zero components. Returns the new length.
std::size_t grow_expansion(double* e, std::size_t len, double b) {
  std::size_t out = 0;
  double q = b;
  for (std::size_t i = 0; i < len; ++i) {
    const TwoTerm s = two_sum(q, e[i]);
    q = s.hi;
    if (s.lo != 0.0) e[out++] = s.lo;
  }
  if (q != 0.0) e[out++] = q;
  return out;
}

Sign sum_sign_unscaled(std::span<const double> terms) {
  // An expansion of k terms has at most k components.
  std::array<double, kInlineTerms> inline_buf{};
  std::vector<double> heap_buf;
  double* e = inline_buf.data();
  if (terms.size() > kInlineTerms) {
    heap_buf.resize(terms.size());
    e = heap_buf.data();
  }
  std::size_t len = 0;
  for (double t : terms) len = grow_expansion(e, len, t);
  // The largest component carries the sign of the whole expansion.
  return len == 0 ? Sign::Zero : sign_of(e[len - 1]);
}

}  // namespace

Sign exact_sum_sign(std::span<const double> terms) {
  bool needs_split = false;
  for (double t : terms) {
    if (std::fabs(t) >= kSafeMagnitude) needs_split = true;
  }
  if (!needs_split) return sum_sign_unscaled(terms);

  // Huge terms: scale the large ones down by 2^-64 (exact, since they stay
  // normal). If they cancel exactly the small ones decide, and those cannot
  // overflow. A nonzero sum of large terms is at least 2^-952 in magnitude,
  // which dominates any sum of a few terms below 2^-900.
  std::vector<double> large;
  std::vector<double> small;
  for (double t : terms) {
    if (std::fabs(t) >= kSplitMagnitude) {
      large.push_back(std::ldexp(t, -64));
    } else {
      small.push_back(t);
    }
  }
  const Sign s = sum_sign_unscaled(large);
  return s != Sign::Zero ? s : sum_sign_unscaled(small);
}

}  // namespace houghlp::detail
