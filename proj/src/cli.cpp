#include "houghlp/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "houghlp/baseline_hull.hpp"
#include "houghlp/errors.hpp"
#include "houghlp/oracle.hpp"
#include "houghlp/solver2d.hpp"

namespace houghlp {
namespace {

// brute3d_box is quartic; validation against it is skipped above this size.
constexpr std::size_t kOracle3dLimit = 60;

std::string read_input(const RunConfig& config, std::istream& in) {
  if (config.input == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(config.input, std::ios::binary);
  if (!file) throw DomainError("cannot open input file: " + config.input);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

bool close(double u, double v, double rel) {
  return std::fabs(u - v) <= rel * std::max({1.0, std::fabs(u), std::fabs(v)});
}

std::vector<Constraint2> load2d(const RunConfig& config, std::istream& in) {
  ConstraintList parsed = parse_constraints(read_input(config, in));
  auto* rows = std::get_if<std::vector<Constraint2>>(&parsed);
  if (!rows) throw DomainError("expected 2 fields per line for a 2D problem");
  if (config.mode == Mode::Lp) return std::move(*rows);
  std::vector<Residual2> residuals;
  for (const Constraint2& r : *rows) residuals.push_back({r.a, r.b});
  return expand_absolute(residuals);
}

std::vector<Constraint3> load3d(const RunConfig& config, std::istream& in) {
  ConstraintList parsed = parse_constraints(read_input(config, in));
  auto* rows = std::get_if<std::vector<Constraint3>>(&parsed);
  if (!rows) throw DomainError("expected 3 fields per line for a 3D problem");
  if (config.mode == Mode::Lp) return std::move(*rows);
  std::vector<Residual3> residuals;
  for (const Constraint3& r : *rows) residuals.push_back({r.a, r.b, r.c});
  return expand_absolute(residuals);
}

void validate2d(std::span<const Constraint2> cs, const Solution2& sol) {
  const Solution2 reference = solve_baseline(cs);
  if (reference.status != sol.status || (sol.optimal() && !close(sol.t, reference.t, 1e-12))) {
    throw ContractViolation("validation: solution disagrees with the hull baseline");
  }
  if (sol.optimal() && !check_certificate(cs, sol, feasibility_tolerance(cs, sol))) {
    throw ContractViolation("validation: optimality certificate failed");
  }
}

void validate3d(std::span<const Constraint3> cs, double t, std::ostream& err) {
  if (cs.size() > kOracle3dLimit) {
    err << "warning: --validate skipped, oracle limited to n <= " << kOracle3dLimit << "\n";
    return;
  }
  const Solution3 reference = brute3d_box(cs);
  if (!close(t, reference.t, 1e-9)) {
    throw ContractViolation("validation: 3D optimum disagrees with the unpruned oracle");
  }
}

int run_solve2d(const RunConfig& config, std::istream& in, std::ostream& out) {
  const std::vector<Constraint2> cs = load2d(config, in);
  const Solution2 sol = solve(cs);
  if (config.validate) validate2d(cs, sol);
  out << emit_solution(sol, config.format);
  return kExitOk;
}

int run_solve3d(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<Constraint3> cs = load3d(config, in);
  const Solution3 sol = solve3d(cs, {config.solve_rule, config.validate});
  if (config.validate) validate3d(cs, sol.t, err);
  out << emit_solution(sol, config.format);
  return kExitOk;
}

int run_prune3d(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<Constraint3> cs = load3d(config, in);
  const PruneReport report = prune(cs, config.rule);
  if (config.validate) validate3d(cs, brute3d_box(report.kept).t, err);
  out << emit_prune_report(report, config.format);
  return kExitOk;
}

int run_oracle(const RunConfig& config, std::istream& in, std::ostream& out) {
  const std::string text = read_input(config, in);
  ConstraintList parsed = parse_constraints(text);
  if (auto* rows = std::get_if<std::vector<Constraint2>>(&parsed)) {
    std::vector<Constraint2> cs = std::move(*rows);
    if (config.mode == Mode::Abs) {
      std::vector<Residual2> residuals;
      for (const Constraint2& r : cs) residuals.push_back({r.a, r.b});
      cs = expand_absolute(residuals);
    }
    const Solution2 sol = brute2d(cs);
    if (config.validate) validate2d(cs, sol);
    out << emit_solution(sol, config.format);
  } else {
    std::vector<Constraint3> cs = std::move(std::get<std::vector<Constraint3>>(parsed));
    if (config.mode == Mode::Abs) {
      std::vector<Residual3> residuals;
      for (const Constraint3& r : cs) residuals.push_back({r.a, r.b, r.c});
      cs = expand_absolute(residuals);
    }
    const Solution3 sol = brute3d_box(cs);
    if (config.validate) {
      const Solution3 pruned = solve3d(cs);
      if (!close(pruned.t, sol.t, 1e-9)) {
        throw ContractViolation("validation: pruned solve disagrees with the oracle");
      }
    }
    out << emit_solution(sol, config.format);
  }
  return kExitOk;
}

int run_gen(const RunConfig& config, std::ostream& out) {
  if (config.count == 0) throw DomainError("gen: count must be at least 1");
  const GenSpec spec{config.n, config.sigma, config.seed, config.dim};
  for (std::uint64_t k = 0; k < config.count; ++k) {
    if (config.format == Format::Json) {
      if (config.dim == Dim::Two) {
        out << corpus_record(k, gen2d(spec, k));
      } else {
        out << corpus_record(k, gen3d(spec, k));
      }
    } else {
      if (config.count > 1) out << "# instance " << k << "\n";
      if (config.dim == Dim::Two) {
        out << write_constraints(gen2d(spec, k));
      } else {
        out << write_constraints(gen3d(spec, k));
      }
    }
  }
  return kExitOk;
}

int run_bench(const RunConfig& config, std::ostream& out) {
  ScalingConfig sc;
  sc.sizes = config.sizes;
  sc.batch = config.batch;
  sc.seed = config.seed;
  sc.constraint_budget = config.constraint_budget;
  sc.workers = config.workers;
  const std::vector<BenchResult> results = run_scaling(config.solver, sc);
  std::optional<double> slope;
  if (results.size() >= 2) slope = loglog_slope(results);

  if (config.format == Format::Json) {
    write_bench_json(out, results, slope);
  } else {
    write_bench_table(out, results);
    if (slope) out << "loglog_slope\t" << format_number(*slope) << "\n";
  }
  if (config.iterations && config.solver == SolverId::Hough2d) {
    write_iteration_table(out, iteration_stats(config.sizes, effective_batch(sc, config.sizes.front()),
                                               config.seed));
  }

  std::string dir = config.output_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("HOUGHLP_BENCH_DIR")) dir = env;
  }
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    std::ofstream json(std::filesystem::path(dir) / "bench.json");
    write_bench_json(json, results, slope);
    std::ofstream csv(std::filesystem::path(dir) / "bench.csv");
    write_bench_csv(csv, results);
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::Solve2d: return run_solve2d(config, in, out);
      case Subcommand::Solve3d: return run_solve3d(config, in, out, err);
      case Subcommand::Prune3d: return run_prune3d(config, in, out, err);
      case Subcommand::Oracle: return run_oracle(config, in, out);
      case Subcommand::Gen: return run_gen(config, out);
      case Subcommand::Bench: return run_bench(config, out);
    }
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitContractViolation;
  }
  return kExitContractViolation;
}

}  // namespace houghlp
