#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "liearr/decompose.hpp"
#include "liearr/relparse.hpp"

using namespace liearr;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

GeneratorList ex1_gens() {
  GeneratorList g;
  g.add("x", 2);
  g.add("y", 2);
  g.add("z", 2);
  g.add("u", 1);
  g.add("v", 1);
  return g;
}

}  // namespace

TEST_CASE("parse_arrangement_file examples") {
  SUBCASE("the ten-triple fixture") {
    auto spec = parse_arrangement_file(slurp(std::string(LIEARR_FIXTURE_DIR) + "/1033.arr"));
    CHECK(spec.ground.size() == 10);
    CHECK(spec.blocks.size() == 10);
    CHECK(spec.mode == ArrangementSpec::Mode::Holonomy);
    REQUIRE(spec.groups.size() == 1);
    CHECK(spec.groups[0] == std::vector<std::string>{"1", "2", "3", "4"});
  }
  SUBCASE("the weighted custom fixture") {
    auto spec = parse_arrangement_file(slurp(std::string(LIEARR_FIXTURE_DIR) + "/ex1.arr"));
    CHECK(spec.ground == std::vector<std::string>{"x", "y", "z", "u", "v"});
    CHECK(spec.degree_of("x") == 2);
    CHECK(spec.degree_of("u") == 1);
    CHECK(spec.mode == ArrangementSpec::Mode::Custom);
    REQUIRE(spec.blocks.size() == 3);
    REQUIRE(spec.relations.size() == 4);
    CHECK(spec.relations[0].block_label == "B");
    CHECK(spec.relations[0].text.find("[z,x]-[u,[u,x]]") != std::string::npos);

    auto asmb = assemble(spec);
    CHECK(asmb.presentation.gens().size() == 5);
    CHECK(asmb.presentation.relations_of_block("B").size() == 2);
    CHECK(asmb.presentation.relations_of_block("C").size() == 2);
    CHECK(asmb.presentation.relations_of_block(kAmbientOrigin).size() == 3);
  }
  SUBCASE("unknown name in a block reports its location") {
    const std::string text = "ground: a b\nblock A: a q\n";
    try {
      parse_arrangement_file(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("unknown name 'q'") != std::string::npos);
    }
  }
  SUBCASE("normals fixture parses and is exclusive with blocks") {
    auto spec =
        parse_arrangement_file(slurp(std::string(LIEARR_FIXTURE_DIR) + "/1033-normals.arr"));
    CHECK(spec.normals.size() == 10);
    CHECK(spec.blocks.empty());
    CHECK_THROWS_AS(parse_arrangement_file("ground: a b\nblock A: a b\nnormal a: 1 0\nnormal b: 0 1\n"),
                    ParseError);
  }
  SUBCASE("assorted diagnostics") {
    CHECK_THROWS_WITH_AS(parse_arrangement_file("block A: a b\n"),
                         doctest::Contains("block before ground"), ParseError);
    CHECK_THROWS_WITH_AS(parse_arrangement_file("ground: a b\nground: a b\nblock A: a b\n"),
                         doctest::Contains("duplicate ground"), ParseError);
    CHECK_THROWS_WITH_AS(parse_arrangement_file("ground: a a\nblock A: a a\n"),
                         doctest::Contains("duplicate ground name"), ParseError);
    CHECK_THROWS_WITH_AS(parse_arrangement_file("ground: a b\ndeg: a=0\nblock A: a b\n"),
                         doctest::Contains("positive"), ParseError);
    CHECK_THROWS_WITH_AS(parse_arrangement_file("ground: a b\nfrobnicate: yes\nblock A: a b\n"),
                         doctest::Contains("unknown directive"), ParseError);
    CHECK_THROWS_WITH_AS(parse_arrangement_file("ground: a b\nblock A: a b\nrel A: [a,b]\n"),
                         doctest::Contains("require mode: custom"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_arrangement_file("ground: a b\nmode: custom\nblock A: a b\nrel Q: [a,b]\n"),
        doctest::Contains("unknown block label"), ParseError);
  }
  SUBCASE("comments and blank lines are ignored") {
    auto spec = parse_arrangement_file("# header\nground: a b # trailing\n\nblock A: a b\n");
    CHECK(spec.ground.size() == 2);
    CHECK(spec.blocks.size() == 1);
  }
}

TEST_CASE("parse_lie_expr examples") {
  auto gens = ex1_gens();
  SUBCASE("a two-term relation text") {
    LieElement e = parse_lie_expr("[z,x]-[u,[u,x]]", gens);
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0].first == 1);
    CHECK(e.terms()[1].first == -1);
    CHECK(e.str(gens) == "[z,x] - [u,[u,x]]");
  }
  SUBCASE("a single bracket") {
    LieElement e = parse_lie_expr("[x,y]", gens);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms()[0].second->str(gens) == "[x,y]");
  }
  SUBCASE("coefficients") {
    LieElement e = parse_lie_expr("3*[x,[x,y]] - [y,[x,y]]", gens);
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0].first == 3);
    CHECK(e.terms()[1].first == -1);
  }
  SUBCASE("errors with positions") {
    try {
      parse_lie_expr("[x,w]", gens);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 4);  // 1-based, pointing at w
      CHECK(std::string(e.what()).find("unknown name 'w'") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse_lie_expr("[x,y", gens), doctest::Contains("expected ']'"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_lie_expr("x", gens), doctest::Contains("bare generator"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_lie_expr("[x,y] [y,z]", gens),
                         doctest::Contains("expected '+' or '-'"), ParseError);
    CHECK_THROWS_AS(parse_lie_expr("2[x,y]", gens), ParseError);
  }
}

TEST_CASE("pretty-print / parse roundtrip") {
  auto gens = ex1_gens();
  // parse(print(e)) has the same expansion as e, and printing is stable
  for (const char* text : {"[z,x]-[u,[u,x]]", "[z,u]-[u,x]", "3*[x,[x,y]] - [y,[x,y]]",
                           "[x,y]+[y,x]", "2*[[x,u],[y,v]] - 5*[x,[y,[u,v]]]"}) {
    CAPTURE(text);
    LieElement e = parse_lie_expr(text, gens);
    std::string printed = e.str(gens);
    LieElement back = parse_lie_expr(printed, gens);
    CHECK(expand(back) == expand(e));
    CHECK(back.str(gens) == printed);  // printing is a normal form for parsed input
  }
}
