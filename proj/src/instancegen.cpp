#include "houghlp/instancegen.hpp"

#include <numbers>

#include "houghlp/errors.hpp"

namespace houghlp {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

void check(const GenSpec& spec, Dim expected) {
  if (spec.dim != expected) throw DomainError("gen: dimension mismatch");
  if (spec.n == 0) throw DomainError("gen: n must be at least 1");
  if (!(spec.sigma > 0) || !std::isfinite(spec.sigma)) {
    throw DomainError("gen: sigma must be positive and finite");
  }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t instance)
    : key_(splitmix64(seed ^ splitmix64(instance + 1))) {}

double NormalStream::uniform(std::uint64_t k) const {
  const std::uint64_t w = splitmix64(key_ + k * kGolden);
  return (static_cast<double>(w >> 11) + 0.5) * 0x1p-53;
}

double NormalStream::normal(std::uint64_t k) const {
  const std::uint64_t pair = k / 2;
  const double u1 = uniform(2 * pair);
  const double u2 = uniform(2 * pair + 1);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return radius * (k % 2 == 0 ? std::cos(angle) : std::sin(angle));
}

std::vector<Constraint2> gen2d(const GenSpec& spec, std::uint64_t instance) {
  check(spec, Dim::Two);
  const NormalStream stream(spec.seed, instance);
  std::vector<Constraint2> cs(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    cs[i] = {spec.sigma * stream.normal(2 * i), spec.sigma * stream.normal(2 * i + 1)};
  }
  return cs;
}

std::vector<Constraint3> gen3d(const GenSpec& spec, std::uint64_t instance) {
  check(spec, Dim::Three);
  const NormalStream stream(spec.seed, instance);
  std::vector<Constraint3> cs(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    cs[i] = {spec.sigma * stream.normal(3 * i), spec.sigma * stream.normal(3 * i + 1),
             spec.sigma * stream.normal(3 * i + 2)};
  }
  return cs;
}

}  // namespace houghlp
