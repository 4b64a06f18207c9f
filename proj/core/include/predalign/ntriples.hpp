#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "predalign/term.hpp"

namespace predalign {

struct ParseDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct ParsedDocument {
  std::vector<Triple> triples;
  std::vector<ParseDiagnostic> diagnostics;
};

/// Parses a line-oriented N-Triples document. Valid statements yield one
/// triple each; blank-node statements and malformed lines are skipped with a
/// diagnostic. Comment and empty lines are valid and produce nothing.
/// Never throws: a fully unparseable document yields zero triples plus
/// diagnostics.
ParsedDocument parse_ntriples(std::string_view text);

/// N-Triples token for one term, e.g. `<http://a>` or `"5"^^<...#integer>`.
std::string term_to_ntriples(const Term& t);

std::string to_ntriples(const Triple& t);

/// One statement per line, in input order, trailing newline included.
std::string to_ntriples(std::span<const Triple> triples);

}  // namespace predalign
