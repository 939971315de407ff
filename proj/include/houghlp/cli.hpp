#pragma once

// Command-line front end. tools/houghlp_cli.cpp parses argv into a RunConfig;
// run() does the rest so it can be exercised in-process.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "houghlp/bench.hpp"
#include "houghlp/instancegen.hpp"
#include "houghlp/io.hpp"
#include "houghlp/prune3d.hpp"

namespace houghlp {

enum class Subcommand { Solve2d, Solve3d, Prune3d, Gen, Bench, Oracle };

enum class Mode { Lp, Abs };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitContractViolation = 3;

struct RunConfig {
  Subcommand subcommand = Subcommand::Solve2d;
  std::string input = "-";  // "-" reads standard input
  Mode mode = Mode::Lp;
  Format format = Format::Json;
  bool validate = false;

  // prune3d / solve3d
  PruneRule rule = PruneRule::Theorem;
  PruneRule solve_rule = PruneRule::BoxDominance;

  // gen
  std::size_t n = 10;
  double sigma = 3.1622776601683795;  // sqrt(10)
  std::uint64_t seed = 1;
  Dim dim = Dim::Two;
  std::size_t count = 1;

  // bench
  SolverId solver = SolverId::Hough2d;
  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  std::size_t batch = 10000;
  std::size_t constraint_budget = 10'000'000;
  std::size_t workers = 1;
  bool iterations = false;
  // Directory for bench.json / bench.csv; empty means HOUGHLP_BENCH_DIR or none.
  std::string output_dir;
};

// Input errors return 2, contract violations 3. Unbounded is success.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace houghlp
