#pragma once

// Timing harness for the 2D solvers on seeded Gaussian batches.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace houghlp {

enum class SolverId { Hough2d, BaselineHull, Brute2d };

const char* to_string(SolverId id);
// Throws DomainError for an unknown id.
SolverId parse_solver_id(std::string_view name);

struct ScalingConfig {
  std::vector<std::size_t> sizes;
  std::size_t batch = 10000;
  std::uint64_t seed = 1;
  // The batch for size n is min(batch, max(1, constraint_budget / n)).
  std::size_t constraint_budget = 10'000'000;
  std::size_t workers = 1;
  // Fraction of instances re-solved by the baseline and compared.
  double validate_fraction = 0.01;
  bool keep_objectives = false;
};

struct BenchResult {
  SolverId solver = SolverId::Hough2d;
  std::size_t n = 0;
  std::size_t batch = 0;
  double total_ms = 0.0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double mean_iterations = 0.0;  // Hough2d only
  std::size_t max_iterations = 0;
  std::size_t unbounded = 0;
  std::size_t validated = 0;
  std::vector<double> objectives;  // per instance, NaN when unbounded
};

std::size_t effective_batch(const ScalingConfig& config, std::size_t n);

// Times solve-only (generation excluded) for every size. Throws DomainError for
// brute2d at n > 2000 and ContractViolation if a validated sample disagrees
// with the baseline.
std::vector<BenchResult> run_scaling(SolverId solver, const ScalingConfig& config);

struct IterationStats {
  std::size_t n = 0;
  std::size_t batch = 0;
  double mean = 0.0;
  std::size_t max = 0;
  // max over the batch of iterations / n
  double max_ratio = 0.0;
};

std::vector<IterationStats> iteration_stats(const std::vector<std::size_t>& sizes,
                                            std::size_t batch, std::uint64_t seed);

// Least-squares slope of log(mean_ms) against log(n).
double loglog_slope(const std::vector<BenchResult>& results);

void write_bench_table(std::ostream& os, const std::vector<BenchResult>& results);
void write_bench_csv(std::ostream& os, const std::vector<BenchResult>& results);
void write_bench_json(std::ostream& os, const std::vector<BenchResult>& results,
                      std::optional<double> slope);
void write_iteration_table(std::ostream& os, const std::vector<IterationStats>& stats);

}  // namespace houghlp
