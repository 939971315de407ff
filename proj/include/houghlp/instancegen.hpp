#pragma once

// Seeded Gaussian instance generation.
//
// Normals come from a counter-based stream so that instance k of a corpus can
// be produced independently of instances 0..k-1:
//
//   key    = splitmix64(seed ^ splitmix64(instance + 1))
//   word_k = splitmix64(key + k * 0x9E3779B97F4A7C15)
//   u_k    = ((word_k >> 11) + 0.5) * 2^-53          (in (0, 1))
//   normal 2j   = sqrt(-2 ln u_2j) * cos(2 pi u_2j+1)
//   normal 2j+1 = sqrt(-2 ln u_2j) * sin(2 pi u_2j+1)
//
// A 2D constraint i takes normals 2i, 2i+1 as (a, b); a 3D constraint takes
// 3i, 3i+1, 3i+2 as (a, b, c). Each is scaled by sigma.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "houghlp/problem.hpp"

namespace houghlp {

enum class Dim { Two, Three };

struct GenSpec {
  std::size_t n = 0;
  double sigma = std::sqrt(10.0);
  std::uint64_t seed = 0;
  Dim dim = Dim::Two;
};

std::uint64_t splitmix64(std::uint64_t x);

class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t instance);

  // Normal number k of the stream (random access).
  double normal(std::uint64_t k) const;
  double uniform(std::uint64_t k) const;

 private:
  std::uint64_t key_;
};

// Throw DomainError on n == 0, sigma <= 0 or the wrong dim.
std::vector<Constraint2> gen2d(const GenSpec& spec, std::uint64_t instance = 0);
std::vector<Constraint3> gen3d(const GenSpec& spec, std::uint64_t instance = 0);

}  // namespace houghlp
