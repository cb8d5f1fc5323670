#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "filiform/param_table.hpp"

namespace filiform {

/// Input rejected: carries the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  int line;

  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

/// Table file: one entry per line as "j s p/q" (or "j s p"), both indices
/// >= 1, value nonzero and in lowest terms with a positive denominator.
/// '#' starts a comment, blank lines are ignored, duplicate (j, s) keys
/// are an error.
ParamTable parse_table(std::istream& in);

/// Sequence file: same rules with lines "s p/q".
MetabelianSeq parse_seq(std::istream& in);

/// One parseable line per entry, keys ascending. Re-parsing gives back the
/// identical table.
std::string format_table(const ParamTable& table);
std::string format_seq(const MetabelianSeq& seq);

}  // namespace filiform
