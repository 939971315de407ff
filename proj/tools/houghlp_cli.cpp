#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "houghlp/cli.hpp"

using namespace houghlp;

namespace {

void add_io_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("input", config.input, "Constraint file ('-' or omitted for standard input)")
      ->capture_default_str();
  cmd->add_option("--mode", config.mode, "lp: rows are a x + b <= t; abs: rows are |a x + b|")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"lp", Mode::Lp},
                                                                      {"abs", Mode::Abs}}));
  cmd->add_flag("--validate", config.validate, "Cross-check against the baseline or oracle");
}

const std::map<std::string, PruneRule> kRules{{"theorem", PruneRule::Theorem},
                                              {"dominance", PruneRule::BoxDominance}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"houghlp: linear min-max (L-infinity) solvers"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig config;

  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"tsv", Format::Tsv}}));

  auto* solve2d = app.add_subcommand("solve2d", "Solve min_x max_i (a_i x + b_i)");
  add_io_options(solve2d, config);

  auto* solve3d = app.add_subcommand("solve3d", "Solve the unit-box 3D problem");
  add_io_options(solve3d, config);
  solve3d->add_option("--rule", config.solve_rule, "Pruning rule applied before solving")
      ->transform(CLI::CheckedTransformer(kRules));

  auto* prune3d = app.add_subcommand("prune3d", "Report which 3D constraints are discarded");
  add_io_options(prune3d, config);
  prune3d->add_option("--rule", config.rule, "theorem (behind + too steep) or dominance")
      ->transform(CLI::CheckedTransformer(kRules));

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference solve (2D or 3D box)");
  add_io_options(oracle, config);

  auto* gen = app.add_subcommand("gen", "Generate seeded Gaussian instances");
  gen->add_option("--n", config.n, "Constraints per instance")->check(CLI::PositiveNumber);
  gen->add_option("--sigma", config.sigma, "Standard deviation")->check(CLI::PositiveNumber);
  gen->add_option("--seed", config.seed, "Seed");
  gen->add_option("--count", config.count, "Number of instances")->check(CLI::PositiveNumber);
  gen->add_option("--dim", config.dim, "2 or 3")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Dim>{{"2", Dim::Two},
                                                                     {"3", Dim::Three}}));

  auto* bench = app.add_subcommand("bench", "Time a solver over seeded batches");
  bench->add_option("--solver", config.solver, "hough2d, baseline_hull or brute2d")
      ->transform(CLI::CheckedTransformer(std::map<std::string, SolverId>{
          {"hough2d", SolverId::Hough2d},
          {"baseline_hull", SolverId::BaselineHull},
          {"brute2d", SolverId::Brute2d}}));
  bench->add_option("--sizes", config.sizes, "Constraint counts")->delimiter(',');
  bench->add_option("--batch", config.batch, "Instances per size (before the budget cap)");
  bench->add_option("--budget", config.constraint_budget, "Max constraints generated per size");
  bench->add_option("--seed", config.seed, "Seed");
  bench->add_option("--workers", config.workers, "Threads sharding each batch");
  bench->add_flag("--iterations", config.iterations, "Also report pivot counts per size");
  bench->add_option("--out-dir", config.output_dir,
                    "Write bench.json and bench.csv here (default: $HOUGHLP_BENCH_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  const std::map<CLI::App*, Subcommand> which{
      {solve2d, Subcommand::Solve2d}, {solve3d, Subcommand::Solve3d},
      {prune3d, Subcommand::Prune3d}, {oracle, Subcommand::Oracle},
      {gen, Subcommand::Gen},         {bench, Subcommand::Bench}};
  for (const auto& [cmd, sub] : which) {
    if (cmd->parsed()) config.subcommand = sub;
  }
  return run(config, std::cin, std::cout, std::cerr);
}
