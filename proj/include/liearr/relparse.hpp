#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liearr/freelie.hpp"

namespace liearr {

/// Parse failure with 1-based location; no partial results are returned.
struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

/// Parsed arrangement/presentation file. Line-oriented UTF-8, '#' comments.
/// Directives:
///   ground: <names>            (required, once)
///   deg: <name>=<int> ...      (optional; default degree 1)
///   mode: holonomy|custom      (default holonomy)
///   block <label>: <names>
///   rel <label>: <expr>        (custom mode)
///   group: <labels>            (optional, repeatable; partition groups)
///   normal <name>: <rationals> (mutually exclusive with block directives)
struct ArrangementSpec {
  enum class Mode { Holonomy, Custom };

  struct BlockDecl {
    std::string label;
    std::vector<std::string> members;
    int line = 0;
  };
  struct RelDecl {
    std::string block_label;
    std::string text;
    int line = 0;
    int col = 0;
  };

  std::vector<std::string> ground;
  std::map<std::string, int> degrees;  // explicit assignments only
  Mode mode = Mode::Holonomy;
  std::vector<BlockDecl> blocks;
  std::vector<RelDecl> relations;
  std::vector<std::vector<std::string>> groups;  // block labels
  std::vector<std::pair<std::string, std::vector<mpq_class>>> normals;

  int degree_of(const std::string& name) const {
    auto it = degrees.find(name);
    return it == degrees.end() ? 1 : it->second;
  }
};

ArrangementSpec parse_arrangement_file(const std::string& text);

/// Lie bracket expressions:
///   expr    := term (('+'|'-') term)*
///   term    := [integer '*'] bracket
///   bracket := '[' atom ',' atom ']'
///   atom    := name | bracket
/// Top-level terms must be brackets (relations lie in the derived
/// subalgebra); names resolve against the alphabet.
LieElement parse_lie_expr(const std::string& text, const GeneratorList& alphabet);

/// As parse_lie_expr, with error locations offset to a position in a file.
LieElement parse_lie_expr_at(const std::string& text, const GeneratorList& alphabet, int line,
                             int col_offset);

}  // namespace liearr
