#include "liearr/relparse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace liearr {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), name_char);
}

struct LineScanner {
  const std::string& text;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }
};

std::vector<std::string> split_names(LineScanner& sc, int line) {
  std::vector<std::string> names;
  while (!sc.done()) {
    int col = sc.col();
    std::string t = sc.token();
    if (!valid_name(t)) throw ParseError(line, col, "bad name '" + t + "'");
    names.push_back(std::move(t));
  }
  return names;
}

// Recursive-descent expression parser with file positions.
struct ExprParser {
  const std::string& text;
  const GeneratorList& gens;
  int line;
  int col_offset;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col_offset + static_cast<int>(pos), msg);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected ") + what);
    ++pos;
  }

  LieElement parse() {
    LieElement out = term();
    skip_ws();
    while (pos < text.size()) {
      char op = text[pos];
      if (op != '+' && op != '-') fail("expected '+' or '-' between terms");
      ++pos;
      LieElement t = term();
      if (op == '+') out += t;
      else out -= t;
      skip_ws();
    }
    return out;
  }

  LieElement term() {
    skip_ws();
    mpz_class coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff = mpz_class(text.substr(start, pos - start));
      expect('*', "'*' after coefficient");
    }
    skip_ws();
    if (pos >= text.size()) fail("expected a bracket");
    if (text[pos] != '[') {
      if (name_char(text[pos]))
        fail("bare generator as a term; relations must be sums of brackets");
      fail("expected '['");
    }
    return LieElement::monomial(coeff, bracket());
  }

  LieTreePtr bracket() {
    expect('[', "'['");
    LieTreePtr l = atom();
    expect(',', "','");
    LieTreePtr r = atom();
    expect(']', "']'");
    return LieTree::node(std::move(l), std::move(r));
  }

  LieTreePtr atom() {
    skip_ws();
    if (pos < text.size() && text[pos] == '[') return bracket();
    std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (pos == start) fail("expected a generator name or '['");
    std::string name = text.substr(start, pos - start);
    int id = gens.index_of(name);
    if (id < 0) {
      pos = start;
      fail("unknown name '" + name + "'");
    }
    return LieTree::leaf(id);
  }
};

}  // namespace

LieElement parse_lie_expr_at(const std::string& text, const GeneratorList& alphabet, int line,
                             int col_offset) {
  ExprParser p{text, alphabet, line, col_offset};
  LieElement e = p.parse();
  return e;
}

LieElement parse_lie_expr(const std::string& text, const GeneratorList& alphabet) {
  return parse_lie_expr_at(text, alphabet, 1, 1);
}

ArrangementSpec parse_arrangement_file(const std::string& text) {
  ArrangementSpec spec;
  bool have_ground = false, have_mode = false;
  std::set<std::string> block_labels;

  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::string line = text.substr(line_start, line_end - line_start);
    ++line_no;
    line_start = line_end + 1;
    if (line_end == text.size() && line.empty()) break;

    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    LineScanner sc{line, line_no};
    if (sc.done()) continue;

    // header: everything before ':'
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(line_no, static_cast<int>(line.size()) + 1, "expected ':' in directive");
    std::string header = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    LineScanner hsc{header, line_no};
    std::string directive = hsc.token();
    LineScanner rsc{rest, line_no};
    // column positions inside `rest` are offset by the header length
    int rest_offset = static_cast<int>(colon) + 1;

    auto rest_names = [&]() {
      std::vector<std::string> names;
      while (!rsc.done()) {
        int col = rest_offset + rsc.col();
        std::string t = rsc.token();
        if (!valid_name(t)) throw ParseError(line_no, col, "bad name '" + t + "'");
        names.push_back(std::move(t));
      }
      return names;
    };

    if (directive == "ground") {
      if (!hsc.done()) throw ParseError(line_no, hsc.col(), "unexpected token before ':'");
      if (have_ground) throw ParseError(line_no, 1, "duplicate ground directive");
      spec.ground = rest_names();
      if (spec.ground.size() < 2) throw ParseError(line_no, 1, "ground needs >= 2 names");
      std::set<std::string> seen;
      for (const auto& n : spec.ground)
        if (!seen.insert(n).second)
          throw ParseError(line_no, 1, "duplicate ground name '" + n + "'");
      have_ground = true;
    } else if (directive == "deg") {
      if (!have_ground) throw ParseError(line_no, 1, "deg before ground");
      while (!rsc.done()) {
        int col = rest_offset + rsc.col();
        std::string t = rsc.token();
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, col, "expected <name>=<int>");
        std::string name = t.substr(0, eq);
        std::string num = t.substr(eq + 1);
        if (std::find(spec.ground.begin(), spec.ground.end(), name) == spec.ground.end())
          throw ParseError(line_no, col, "deg for unknown name '" + name + "'");
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(line_no, col, "bad degree '" + num + "'");
        int d = std::stoi(num);
        if (d <= 0) throw ParseError(line_no, col, "degree must be positive");
        spec.degrees[name] = d;
      }
    } else if (directive == "mode") {
      if (have_mode) throw ParseError(line_no, 1, "duplicate mode directive");
      std::string m = rsc.token();
      if (m == "holonomy") spec.mode = ArrangementSpec::Mode::Holonomy;
      else if (m == "custom") spec.mode = ArrangementSpec::Mode::Custom;
      else throw ParseError(line_no, rest_offset + 1, "mode must be holonomy or custom");
      if (!rsc.done()) throw ParseError(line_no, rest_offset + rsc.col(), "trailing tokens");
      have_mode = true;
    } else if (directive == "block") {
      if (!have_ground) throw ParseError(line_no, 1, "block before ground");
      int col = hsc.col();
      std::string label = hsc.token();
      if (!valid_name(label)) throw ParseError(line_no, col, "bad block label '" + label + "'");
      if (!hsc.done()) throw ParseError(line_no, hsc.col(), "unexpected token before ':'");
      if (!block_labels.insert(label).second)
        throw ParseError(line_no, col, "duplicate block label '" + label + "'");
      ArrangementSpec::BlockDecl b;
      b.label = label;
      b.line = line_no;
      b.members = rest_names();
      for (const auto& n : b.members)
        if (std::find(spec.ground.begin(), spec.ground.end(), n) == spec.ground.end())
          throw ParseError(line_no, rest_offset + 1,
                           "block '" + label + "' references unknown name '" + n + "'");
      spec.blocks.push_back(std::move(b));
    } else if (directive == "rel") {
      int col = hsc.col();
      std::string label = hsc.token();
      if (!valid_name(label)) throw ParseError(line_no, col, "bad block label '" + label + "'");
      if (!hsc.done()) throw ParseError(line_no, hsc.col(), "unexpected token before ':'");
      ArrangementSpec::RelDecl r;
      r.block_label = label;
      r.text = rest;
      r.line = line_no;
      r.col = rest_offset + 1;
      spec.relations.push_back(std::move(r));
    } else if (directive == "group") {
      spec.groups.push_back(rest_names());
      if (spec.groups.back().empty()) throw ParseError(line_no, 1, "empty group");
    } else if (directive == "normal") {
      if (!have_ground) throw ParseError(line_no, 1, "normal before ground");
      int col = hsc.col();
      std::string name = hsc.token();
      if (std::find(spec.ground.begin(), spec.ground.end(), name) == spec.ground.end())
        throw ParseError(line_no, col, "normal for unknown name '" + name + "'");
      std::vector<mpq_class> v;
      while (!rsc.done()) {
        int tcol = rest_offset + rsc.col();
        std::string t = rsc.token();
        try {
          v.emplace_back(t);
          v.back().canonicalize();
        } catch (const std::invalid_argument&) {
          throw ParseError(line_no, tcol, "bad rational '" + t + "'");
        }
      }
      if (v.empty()) throw ParseError(line_no, rest_offset + 1, "empty normal vector");
      for (const auto& [n, unused] : spec.normals)
        if (n == name) throw ParseError(line_no, col, "duplicate normal for '" + name + "'");
      spec.normals.emplace_back(name, std::move(v));
    } else {
      throw ParseError(line_no, 1, "unknown directive '" + directive + "'");
    }
  }

  if (!have_ground) throw ParseError(line_no, 1, "missing ground directive");
  if (!spec.normals.empty() && !spec.blocks.empty())
    throw ParseError(line_no, 1, "normal and block directives are mutually exclusive");
  if (spec.normals.empty() && spec.blocks.empty())
    throw ParseError(line_no, 1, "need block or normal directives");
  if (!spec.normals.empty() && spec.normals.size() != spec.ground.size())
    throw ParseError(line_no, 1, "every ground name needs a normal vector");
  if (!spec.relations.empty() && spec.mode != ArrangementSpec::Mode::Custom)
    throw ParseError(spec.relations.front().line, 1, "rel directives require mode: custom");
  if (!spec.normals.empty() && spec.mode == ArrangementSpec::Mode::Custom)
    throw ParseError(line_no, 1, "custom relations require explicit blocks, not normals");
  for (const auto& r : spec.relations)
    if (!block_labels.count(r.block_label))
      throw ParseError(r.line, 1, "rel references unknown block label '" + r.block_label + "'");
  for (const auto& g : spec.groups)
    for (const auto& label : g)
      if (!block_labels.count(label))
        throw ParseError(1, 1, "group references unknown block label '" + label + "'");
  return spec;
}

}  // namespace liearr
