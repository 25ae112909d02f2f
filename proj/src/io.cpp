#include "maxdla/io.hpp"

#include <charconv>
#include <sstream>

namespace maxdla {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Non-blank lines whose first token does not start with `comment`.
std::vector<Line> content_lines(std::string_view text, char comment) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view body = text.substr(pos, end - pos);
    // '#' comments may trail content; DIMACS 'c' lines are whole-line only.
    if (comment == '#') body = body.substr(0, body.find('#'));
    auto tokens = split(body);
    if (!tokens.empty() && tokens[0].text != std::string_view(&comment, 1)) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long long to_integer(const Token& t, int line) {
  long long value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(ParseErrorKind::kSyntax, line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string Instance::label(Vertex v) const {
  if (!names.empty() && !names[v].empty()) return names[v];
  return std::to_string(v);
}

Vertex Instance::lookup(std::string_view token) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == token) return static_cast<Vertex>(i);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("unknown vertex '" + std::string(token) + "'");
  }
  if (value < 0 || value >= digraph.num_vertices()) {
    throw InputError("vertex " + std::string(token) + " out of range");
  }
  return value;
}

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = content_lines(text, '#');
  if (lines.empty()) throw ParseError(ParseErrorKind::kSyntax, 1, 1, "missing header 'n m'");
  const Line& header = lines[0];
  if (header.tokens.size() != 2) {
    throw ParseError(ParseErrorKind::kSyntax, header.number, header.tokens[0].column, "header must be 'n m'");
  }
  const long long n = to_integer(header.tokens[0], header.number);
  const long long m = to_integer(header.tokens[1], header.number);
  if (n < 0 || n > 1'000'000) {
    throw ParseError(ParseErrorKind::kSyntax, header.number, header.tokens[0].column, "vertex count out of range");
  }
  if (m < 0) throw ParseError(ParseErrorKind::kSyntax, header.number, header.tokens[1].column, "negative arc count");

  Instance inst;
  inst.digraph = Digraph(static_cast<int>(n));
  std::size_t idx = 1;
  for (long long k = 0; k < m; ++k, ++idx) {
    if (idx >= lines.size() || lines[idx].tokens[0].text == "names") {
      const int at = idx < lines.size() ? lines[idx].number : lines.back().number + 1;
      throw ParseError(ParseErrorKind::kCountMismatch, at, 1,
                       "expected " + std::to_string(m) + " arc lines, found " + std::to_string(k));
    }
    const Line& line = lines[idx];
    if (line.tokens.size() < 2 || line.tokens.size() > 3) {
      throw ParseError(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
                       "arc line must be 'tail head [multiplicity]'");
    }
    const long long tail = to_integer(line.tokens[0], line.number);
    const long long head = to_integer(line.tokens[1], line.number);
    const long long mult = line.tokens.size() == 3 ? to_integer(line.tokens[2], line.number) : 1;
    if (tail < 0 || tail >= n) {
      throw ParseError(ParseErrorKind::kIndexOutOfRange, line.number, line.tokens[0].column,
                       "tail " + std::to_string(tail) + " not below n = " + std::to_string(n));
    }
    if (head < 0 || head >= n) {
      throw ParseError(ParseErrorKind::kIndexOutOfRange, line.number, line.tokens[1].column,
                       "head " + std::to_string(head) + " not below n = " + std::to_string(n));
    }
    if (tail == head) {
      throw ParseError(ParseErrorKind::kLoop, line.number, line.tokens[0].column,
                       "loop at vertex " + std::to_string(tail));
    }
    if (mult < 1 || mult > 1'000'000) {
      throw ParseError(ParseErrorKind::kSyntax, line.number, line.tokens[2].column, "multiplicity must be positive");
    }
    inst.digraph.add_arc(static_cast<Vertex>(tail), static_cast<Vertex>(head), static_cast<int>(mult));
  }

  if (idx < lines.size()) {
    const Line& marker = lines[idx];
    if (marker.tokens.size() != 1 || marker.tokens[0].text != "names") {
      throw ParseError(ParseErrorKind::kCountMismatch, marker.number, marker.tokens[0].column,
                       "more arc lines than the header's m = " + std::to_string(m));
    }
    inst.names.assign(static_cast<std::size_t>(n), "");
    for (++idx; idx < lines.size(); ++idx) {
      const Line& line = lines[idx];
      if (line.tokens.size() != 2) {
        throw ParseError(ParseErrorKind::kSyntax, line.number, line.tokens[0].column, "name line must be 'index label'");
      }
      const long long v = to_integer(line.tokens[0], line.number);
      if (v < 0 || v >= n) {
        throw ParseError(ParseErrorKind::kIndexOutOfRange, line.number, line.tokens[0].column,
                         "named vertex " + std::to_string(v) + " not below n = " + std::to_string(n));
      }
      inst.names[static_cast<std::size_t>(v)] = std::string(line.tokens[1].text);
    }
  }
  return inst;
}

Digraph parse_digraph(std::string_view text) { return parse_instance(text).digraph; }

TwoCnf parse_2cnf(std::string_view text) {
  const std::vector<Line> lines = content_lines(text, 'c');
  if (lines.empty() || lines[0].tokens[0].text != "p") {
    throw ParseError(ParseErrorKind::kSyntax, lines.empty() ? 1 : lines[0].number, 1, "missing 'p cnf V C' header");
  }
  const Line& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[1].text != "cnf") {
    throw ParseError(ParseErrorKind::kSyntax, header.number, 1, "header must be 'p cnf V C'");
  }
  const long long vars = to_integer(header.tokens[2], header.number);
  const long long count = to_integer(header.tokens[3], header.number);
  if (vars < 0 || vars > 62 || count < 0) {
    throw ParseError(ParseErrorKind::kSyntax, header.number, header.tokens[2].column,
                     "variable count must be between 0 and 62");
  }

  std::vector<Clause> clauses;
  Clause current;
  int clause_line = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const Token& t : lines[i].tokens) {
      const long long lit = to_integer(t, lines[i].number);
      if (lit == 0) {
        if (current.literals.empty()) throw ParseError(ParseErrorKind::kSyntax, lines[i].number, t.column, "empty clause");
        clauses.push_back(std::move(current));
        current = {};
        continue;
      }
      if (current.literals.empty()) clause_line = lines[i].number;
      const long long var = lit < 0 ? -lit : lit;
      if (var > vars) {
        throw ParseError(ParseErrorKind::kIndexOutOfRange, lines[i].number, t.column,
                         "variable " + std::to_string(var) + " exceeds V = " + std::to_string(vars));
      }
      if (current.literals.size() == 2) {
        throw ParseError(ParseErrorKind::kClauseTooLong, lines[i].number, t.column,
                         "clause starting on line " + std::to_string(clause_line) + " has more than two literals");
      }
      for (const Literal& seen : current.literals) {
        if (seen.variable == var - 1) {
          throw ParseError(ParseErrorKind::kSyntax, lines[i].number, t.column,
                           "variable " + std::to_string(var) + " repeated within a clause");
        }
      }
      current.literals.push_back({static_cast<int>(var - 1), lit < 0});
    }
  }
  if (!current.literals.empty()) {
    throw ParseError(ParseErrorKind::kSyntax, clause_line, 1, "last clause is not terminated by 0");
  }
  if (static_cast<long long>(clauses.size()) != count) {
    throw ParseError(ParseErrorKind::kCountMismatch, header.number, header.tokens[3].column,
                     "header declares " + std::to_string(count) + " clauses, found " + std::to_string(clauses.size()));
  }
  return TwoCnf(static_cast<int>(vars), std::move(clauses));
}

std::string serialize_digraph(const Digraph& d, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << d.num_vertices() << ' ' << d.num_distinct_arcs() << '\n';
  for (const Arc& a : d.arcs()) {
    out << a.tail << ' ' << a.head;
    if (a.multiplicity != 1) out << ' ' << a.multiplicity;
    out << '\n';
  }
  if (!names.empty()) {
    out << "names\n";
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (!names[v].empty()) out << v << ' ' << names[v] << '\n';
    }
  }
  return out.str();
}

std::string serialize_2cnf(const TwoCnf& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars() << ' ' << phi.clauses().size() << '\n';
  for (const Clause& c : phi.clauses()) {
    for (const Literal& l : c.literals) out << (l.negated ? "-" : "") << l.variable + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

UndirectedGraph undirected_from(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Arc& a : d.arcs()) {
    if (a.multiplicity != 1) throw InputError("undirected graph: parallel edge between " + std::to_string(a.tail) +
                                              " and " + std::to_string(a.head));
    edges.emplace_back(a.tail, a.head);
  }
  return UndirectedGraph(d.num_vertices(), edges);
}

bool looks_like_dimacs(std::string_view text) {
  for (const Line& line : content_lines(text, '#')) {
    return line.tokens[0].text == "p" || line.tokens[0].text == "c";
  }
  return false;
}

}  // namespace maxdla
