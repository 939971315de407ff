#include "houghlp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "houghlp/errors.hpp"

namespace houghlp {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on commas and whitespace. A comma with no field before it is an
// error; runs of whitespace are not.
std::vector<double> parse_fields(std::string_view line, std::size_t lineno) {
  std::vector<double> fields;
  std::size_t i = 0;
  bool expect_field = false;  // set after a comma
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == ',') {
      if (fields.empty() || expect_field) throw ParseError(lineno, "empty field");
      expect_field = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && line[j] != ',') ++j;
    const std::string_view token = line.substr(i, j - i);
    double v = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(lineno, "invalid number '" + std::string(token) + "'");
    }
    if (!std::isfinite(v)) throw ParseError(lineno, "non-finite number '" + std::string(token) + "'");
    fields.push_back(v);
    expect_field = false;
    i = j;
  }
  if (expect_field) throw ParseError(lineno, "trailing comma");
  return fields;
}

std::string json_solution2(const Solution2& sol) {
  if (!sol.optimal()) return "{\"status\":\"unbounded\"}";
  return "{\"status\":\"optimal\",\"x\":" + format_number(sol.x) +
         ",\"t\":" + format_number(sol.t) + ",\"iterations\":" + std::to_string(sol.iterations) +
         "}";
}

template <class Row, class Fn>
std::string join_rows(std::span<const Row> cs, Fn&& fn) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += fn(cs[i]);
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ConstraintList parse_constraints(std::string_view text) {
  std::vector<Constraint2> two;
  std::vector<Constraint3> three;
  std::size_t arity = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<double> f = parse_fields(line, lineno);
    if (f.empty()) continue;
    if (f.size() != 2 && f.size() != 3) {
      throw ParseError(lineno, "expected 2 or 3 fields, got " + std::to_string(f.size()));
    }
    if (arity == 0) arity = f.size();
    if (f.size() != arity) throw MixedArity(lineno, arity, f.size());
    if (arity == 2) {
      two.push_back({f[0], f[1]});
    } else {
      three.push_back({f[0], f[1], f[2]});
    }
  }
  if (arity == 0) throw EmptyProblem();
  if (arity == 2) return two;
  return three;
}

std::string emit_solution(const Solution2& sol, Format format) {
  if (format == Format::Json) return json_solution2(sol) + "\n";
  if (!sol.optimal()) return "status\nunbounded\n";
  return "status\tx\tt\titerations\noptimal\t" + format_number(sol.x) + "\t" +
         format_number(sol.t) + "\t" + std::to_string(sol.iterations) + "\n";
}

std::string emit_solution(const Solution3& sol, Format format) {
  if (format == Format::Json) {
    return "{\"status\":\"optimal\",\"x\":" + format_number(sol.x) +
           ",\"y\":" + format_number(sol.y) + ",\"t\":" + format_number(sol.t) + "}\n";
  }
  return "status\tx\ty\tt\noptimal\t" + format_number(sol.x) + "\t" + format_number(sol.y) +
         "\t" + format_number(sol.t) + "\n";
}

std::string emit_prune_report(const PruneReport& report, Format format) {
  std::string kept;
  for (std::size_t i = 0; i < report.kept_indices.size(); ++i) {
    if (i) kept += ',';
    kept += std::to_string(report.kept_indices[i]);
  }
  if (format == Format::Json) {
    return "{\"kept\":[" + kept + "],\"discarded_behind\":" +
           std::to_string(report.discarded_behind) +
           ",\"discarded_steep\":" + std::to_string(report.discarded_steep) +
           ",\"pmin_index\":" + std::to_string(report.pmin_index) + "}\n";
  }
  return "kept\tdiscarded_behind\tdiscarded_steep\tpmin_index\n" + kept + "\t" +
         std::to_string(report.discarded_behind) + "\t" +
         std::to_string(report.discarded_steep) + "\t" + std::to_string(report.pmin_index) +
         "\n";
}

std::string write_constraints(std::span<const Constraint2> cs) {
  std::string out;
  for (const Constraint2& c : cs) out += format_number(c.a) + "\t" + format_number(c.b) + "\n";
  return out;
}

std::string write_constraints(std::span<const Constraint3> cs) {
  std::string out;
  for (const Constraint3& c : cs) {
    out += format_number(c.a) + "\t" + format_number(c.b) + "\t" + format_number(c.c) + "\n";
  }
  return out;
}

std::string corpus_record(std::uint64_t instance, std::span<const Constraint2> cs) {
  return "{\"instance\":" + std::to_string(instance) + ",\"dim\":2,\"constraints\":[" +
         join_rows(cs,
                   [](const Constraint2& c) {
                     return "[" + format_number(c.a) + "," + format_number(c.b) + "]";
                   }) +
         "]}\n";
}

std::string corpus_record(std::uint64_t instance, std::span<const Constraint3> cs) {
  return "{\"instance\":" + std::to_string(instance) + ",\"dim\":3,\"constraints\":[" +
         join_rows(cs,
                   [](const Constraint3& c) {
                     return "[" + format_number(c.a) + "," + format_number(c.b) + "," +
                            format_number(c.c) + "]";
                   }) +
         "]}\n";
}

}  // namespace houghlp
