#pragma once

// Text formats shared by the CLI, the corpus generator and the bench reports.
//
// Constraint files: one constraint per line, fields separated by commas and/or
// whitespace, '#' starts a comment. Two fields are a Constraint2 (a, b), three
// a Constraint3 (a, b, c); the count must be the same on every line.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "houghlp/problem.hpp"
#include "houghlp/prune3d.hpp"

namespace houghlp {

enum class Format { Json, Tsv };

using ConstraintList = std::variant<std::vector<Constraint2>, std::vector<Constraint3>>;

// Throws ParseError (with line number), MixedArity or EmptyProblem.
ConstraintList parse_constraints(std::string_view text);

// 17 significant digits; parses back to the same double.
std::string format_number(double v);

std::string emit_solution(const Solution2& sol, Format format);
std::string emit_solution(const Solution3& sol, Format format);
std::string emit_prune_report(const PruneReport& report, Format format);

// Constraint file text, tab separated, parseable by parse_constraints.
std::string write_constraints(std::span<const Constraint2> cs);
std::string write_constraints(std::span<const Constraint3> cs);

// One JSON-lines corpus record:
//   {"instance":k,"dim":2,"constraints":[[a,b],...]}
std::string corpus_record(std::uint64_t instance, std::span<const Constraint2> cs);
std::string corpus_record(std::uint64_t instance, std::span<const Constraint3> cs);

}  // namespace houghlp
