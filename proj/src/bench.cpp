#include "houghlp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "houghlp/baseline_hull.hpp"
#include "houghlp/errors.hpp"
#include "houghlp/instancegen.hpp"
#include "houghlp/io.hpp"
#include "houghlp/oracle.hpp"
#include "houghlp/solver2d.hpp"

namespace houghlp {
namespace {

constexpr std::size_t kBruteLimit = 2000;

Solution2 run_solver(SolverId id, std::span<const Constraint2> cs) {
  switch (id) {
    case SolverId::Hough2d: return solve(cs);
    case SolverId::BaselineHull: return solve_baseline(cs);
    case SolverId::Brute2d: return brute2d(cs);
  }
  throw DomainError("unknown solver");
}

bool agree(const Solution2& a, const Solution2& b, double rel) {
  if (a.status != b.status) return false;
  if (!a.optimal()) return true;
  return std::fabs(a.t - b.t) <= rel * std::max({1.0, std::fabs(a.t), std::fabs(b.t)});
}

struct Shard {
  std::size_t begin = 0;
  std::size_t end = 0;
};

}  // namespace

const char* to_string(SolverId id) {
  switch (id) {
    case SolverId::Hough2d: return "hough2d";
    case SolverId::BaselineHull: return "baseline_hull";
    case SolverId::Brute2d: return "brute2d";
  }
  return "?";
}

SolverId parse_solver_id(std::string_view name) {
  if (name == "hough2d") return SolverId::Hough2d;
  if (name == "baseline_hull") return SolverId::BaselineHull;
  if (name == "brute2d") return SolverId::Brute2d;
  throw DomainError("unknown solver id: " + std::string(name));
}

std::size_t effective_batch(const ScalingConfig& config, std::size_t n) {
  if (n == 0) throw DomainError("bench: n must be at least 1");
  return std::max<std::size_t>(1, std::min(config.batch, config.constraint_budget / n));
}

std::vector<BenchResult> run_scaling(SolverId solver, const ScalingConfig& config) {
  if (config.batch == 0) throw DomainError("bench: batch must be at least 1");
  std::vector<BenchResult> results;
  for (std::size_t n : config.sizes) {
    if (solver == SolverId::Brute2d && n > kBruteLimit) {
      throw DomainError("bench: brute2d is limited to n <= " + std::to_string(kBruteLimit));
    }
    const std::size_t batch = effective_batch(config, n);
    const GenSpec spec{n, std::sqrt(10.0), config.seed, Dim::Two};
    std::vector<std::vector<Constraint2>> instances(batch);
    for (std::size_t k = 0; k < batch; ++k) instances[k] = gen2d(spec, k);

    // Warm-up, untimed.
    run_solver(solver, instances[0]);

    std::vector<double> elapsed_ms(batch);
    std::vector<Solution2> solutions(batch);
    auto work = [&](Shard shard) {
      for (std::size_t k = shard.begin; k < shard.end; ++k) {
        const auto start = std::chrono::steady_clock::now();
        solutions[k] = run_solver(solver, instances[k]);
        const auto stop = std::chrono::steady_clock::now();
        elapsed_ms[k] = std::chrono::duration<double, std::milli>(stop - start).count();
      }
    };
    const std::size_t workers = std::clamp<std::size_t>(config.workers, 1, batch);
    if (workers == 1) {
      work({0, batch});
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back(work, Shard{batch * w / workers, batch * (w + 1) / workers});
      }
      for (std::thread& t : threads) t.join();
    }

    BenchResult r;
    r.solver = solver;
    r.n = n;
    r.batch = batch;
    double iteration_sum = 0;
    for (std::size_t k = 0; k < batch; ++k) {
      r.total_ms += elapsed_ms[k];
      iteration_sum += static_cast<double>(solutions[k].iterations);
      r.max_iterations = std::max(r.max_iterations, solutions[k].iterations);
      if (!solutions[k].optimal()) ++r.unbounded;
      if (config.keep_objectives) {
        r.objectives.push_back(solutions[k].optimal() ? solutions[k].t : NAN);
      }
    }
    r.mean_ms = r.total_ms / static_cast<double>(batch);
    std::vector<double> sorted = elapsed_ms;
    std::nth_element(sorted.begin(), sorted.begin() + batch / 2, sorted.end());
    r.median_ms = sorted[batch / 2];
    if (solver == SolverId::Hough2d) r.mean_iterations = iteration_sum / static_cast<double>(batch);

    // Re-validate an evenly spaced sample against the baseline.
    if (config.validate_fraction > 0) {
      const auto stride = static_cast<std::size_t>(
          std::max(1.0, std::floor(1.0 / std::min(1.0, config.validate_fraction))));
      for (std::size_t k = 0; k < batch; k += stride) {
        const Solution2 reference = solve_baseline(instances[k]);
        if (!agree(solutions[k], reference, 1e-12)) {
          throw ContractViolation("bench: " + std::string(to_string(solver)) +
                                  " disagrees with baseline at n=" + std::to_string(n) +
                                  ", instance " + std::to_string(k));
        }
        ++r.validated;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<IterationStats> iteration_stats(const std::vector<std::size_t>& sizes,
                                            std::size_t batch, std::uint64_t seed) {
  std::vector<IterationStats> out;
  for (std::size_t n : sizes) {
    const GenSpec spec{n, std::sqrt(10.0), seed, Dim::Two};
    IterationStats s;
    s.n = n;
    s.batch = batch;
    double sum = 0;
    for (std::size_t k = 0; k < batch; ++k) {
      const Solution2 sol = solve(gen2d(spec, k));
      sum += static_cast<double>(sol.iterations);
      s.max = std::max(s.max, sol.iterations);
      s.max_ratio =
          std::max(s.max_ratio, static_cast<double>(sol.iterations) / static_cast<double>(n));
    }
    s.mean = batch ? sum / static_cast<double>(batch) : 0.0;
    out.push_back(s);
  }
  return out;
}

double loglog_slope(const std::vector<BenchResult>& results) {
  if (results.size() < 2) throw DomainError("loglog_slope: need at least two sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchResult& r : results) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.mean_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(results.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

void write_bench_table(std::ostream& os, const std::vector<BenchResult>& results) {
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %10s %7s %12s %12s %12s %9s %8s\n", "solver", "n",
                "batch", "total_ms", "mean_ms", "median_ms", "mean_it", "max_it");
  os << line;
  for (const BenchResult& r : results) {
    std::snprintf(line, sizeof line, "%-14s %10zu %7zu %12.3f %12.6f %12.6f %9.2f %8zu\n",
                  to_string(r.solver), r.n, r.batch, r.total_ms, r.mean_ms, r.median_ms,
                  r.mean_iterations, r.max_iterations);
    os << line;
  }
}

void write_bench_csv(std::ostream& os, const std::vector<BenchResult>& results) {
  os << "solver,n,batch,total_ms,mean_ms,median_ms,mean_iterations,max_iterations,unbounded\n";
  for (const BenchResult& r : results) {
    os << to_string(r.solver) << ',' << r.n << ',' << r.batch << ',' << format_number(r.total_ms)
       << ',' << format_number(r.mean_ms) << ',' << format_number(r.median_ms) << ','
       << format_number(r.mean_iterations) << ',' << r.max_iterations << ',' << r.unbounded
       << '\n';
  }
}

void write_bench_json(std::ostream& os, const std::vector<BenchResult>& results,
                      std::optional<double> slope) {
  os << "{\"results\":[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const BenchResult& r = results[i];
    if (i) os << ',';
    os << "{\"solver\":\"" << to_string(r.solver) << "\",\"n\":" << r.n
       << ",\"batch\":" << r.batch << ",\"total_ms\":" << format_number(r.total_ms)
       << ",\"mean_ms\":" << format_number(r.mean_ms)
       << ",\"median_ms\":" << format_number(r.median_ms)
       << ",\"mean_iterations\":" << format_number(r.mean_iterations)
       << ",\"max_iterations\":" << r.max_iterations << ",\"unbounded\":" << r.unbounded
       << ",\"validated\":" << r.validated << '}';
  }
  os << ']';
  if (slope) os << ",\"loglog_slope\":" << format_number(*slope);
  os << "}\n";
}

void write_iteration_table(std::ostream& os, const std::vector<IterationStats>& stats) {
  char line[160];
  std::snprintf(line, sizeof line, "%10s %7s %10s %8s %12s\n", "n", "batch", "mean_it", "max_it",
                "max_it/n");
  os << line;
  for (const IterationStats& s : stats) {
    std::snprintf(line, sizeof line, "%10zu %7zu %10.3f %8zu %12.3g\n", s.n, s.batch, s.mean,
                  s.max, s.max_ratio);
    os << line;
  }
}

}  // namespace houghlp
