#pragma once

// Text formats.
//
// Instance file:
//   # comment lines and blank lines are ignored
//   n m
//   tail head [multiplicity]      (m lines, 0-based vertices)
//   names                          (optional section)
//   index label                    (one per named vertex)
//
// 2-CNF: DIMACS CNF ("p cnf V C", literals terminated by 0) with at most two
// literals per clause.

#include <string>
#include <string_view>
#include <vector>

#include "maxdla/core.hpp"
#include "maxdla/errors.hpp"
#include "maxdla/relations.hpp"

namespace maxdla {

enum class ParseErrorKind {
  kSyntax,
  kIndexOutOfRange,
  kLoop,
  kClauseTooLong,
  kCountMismatch,
};

class ParseError : public InputError {
 public:
  ParseError(ParseErrorKind kind, int line, int column, const std::string& what);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

struct Instance {
  Digraph digraph;
  std::vector<std::string> names;  // empty, or one label per vertex

  std::string label(Vertex v) const;
  // Accepts a label from the name map or a plain index.
  Vertex lookup(std::string_view token) const;
};

Instance parse_instance(std::string_view text);
Digraph parse_digraph(std::string_view text);
TwoCnf parse_2cnf(std::string_view text);

std::string serialize_digraph(const Digraph& d, const std::vector<std::string>& names = {});
std::string serialize_2cnf(const TwoCnf& phi);

// Reads arcs as undirected edges; an edge listed in both directions is an
// error.
UndirectedGraph undirected_from(const Digraph& d);

// Heuristic used by the CLI: DIMACS input starts with "c" or "p" lines.
bool looks_like_dimacs(std::string_view text);

}  // namespace maxdla
