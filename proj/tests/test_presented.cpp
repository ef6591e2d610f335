#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "liearr/decompose.hpp"
#include "liearr/ideal_quotient.hpp"
#include "liearr/presented.hpp"
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

Assembled fixture(const std::string& name) {
  return assemble(parse_arrangement_file(slurp(std::string(LIEARR_FIXTURE_DIR) + "/" + name)));
}

LieElement br(int a, int b) {
  return LieElement::monomial(1, LieTree::node(LieTree::leaf(a), LieTree::leaf(b)));
}
LieElement br(int a, int b, int c) {  // [a,[b,c]]
  return LieElement::monomial(
      1, LieTree::node(LieTree::leaf(a), LieTree::node(LieTree::leaf(b), LieTree::leaf(c))));
}

std::vector<long long> dims_of(const DimSeries& s) {
  std::vector<long long> out;
  for (const auto& r : s) out.push_back(r.dim);
  return out;
}
std::vector<long long> derived_of(const DimSeries& s) {
  std::vector<long long> out;
  for (const auto& r : s) out.push_back(r.derived_dim);
  return out;
}

}  // namespace

TEST_CASE("build_quotient examples") {
  RationalField Q;
  SUBCASE("free presentation on two unit generators") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    GradedQuotient<RationalField> q(Q, Presentation(g, {}), 4);
    CHECK(dims_of(q.dim_series()) == std::vector<long long>{2, 1, 2, 3});
    for (int d = 1; d <= 4; ++d) CHECK(q.ideal_rank(d) == 0);
  }
  SUBCASE("holonomy of a single block {1,2,3} is free on 2 generators in degrees >= 2") {
    auto arr = SetArrangement::validate({"1", "2", "3"}, {{"A", {0, 1, 2}, false}});
    GradedQuotient<RationalField> q(Q, holonomy_presentation(arr), 4);
    CHECK(dims_of(q.dim_series()) == std::vector<long long>{3, 1, 2, 3});
  }
  SUBCASE("abelian presentation") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    std::vector<Relation> rels;
    rels.push_back({br(0, 1), kAmbientOrigin});
    GradedQuotient<RationalField> q(Q, Presentation(g, rels), 3);
    CHECK(dims_of(q.dim_series()) == std::vector<long long>{2, 0, 0});
  }
  SUBCASE("inhomogeneous relation is rejected by name") {
    GeneratorList g;
    g.add("x");
    g.add("y", 2);
    std::vector<Relation> rels;
    rels.push_back({br(0, 1) + br(0, 0, 1), "R1"});  // degrees 3 and 4
    CHECK_THROWS_WITH_AS(Presentation(g, rels), doctest::Contains("not weighted-homogeneous"),
                         std::invalid_argument);
  }
  SUBCASE("relation of degree above the truncation only warns") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    std::vector<Relation> rels;
    rels.push_back({br(0, 0, 1), "R1"});  // degree 3
    GradedQuotient<RationalField> q(Q, Presentation(g, rels), 2);
    REQUIRE(q.warnings().size() == 1);
    CHECK(q.dim(2) == 1);
  }
}

TEST_CASE("is_zero examples") {
  RationalField Q;
  SUBCASE("defining relations vanish; free brackets do not") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    GradedQuotient<RationalField> qfree(Q, Presentation(g, {}), 3);
    CHECK_FALSE(qfree.is_zero(br(0, 0, 1)));  // [x,[x,y]] in the free algebra

    std::vector<Relation> rels;
    rels.push_back({br(0, 1), kAmbientOrigin});
    GradedQuotient<RationalField> qab(Q, Presentation(g, rels), 3);
    CHECK(qab.is_zero(br(0, 1)));
  }
  SUBCASE("[7,[1,2]] vanishes in the ten-triple holonomy quotient at degree 3") {
    auto asmb = fixture("1033.arr");
    GradedQuotient<RationalField> q(Q, asmb.presentation, 3);
    const auto& gens = asmb.presentation.gens();
    CHECK(q.is_zero(br(gens.require("7"), gens.require("1"), gens.require("2"))));
  }
  SUBCASE("degree above the truncation is undecidable, never a silent false") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    GradedQuotient<RationalField> q(Q, Presentation(g, {}), 2);
    CHECK_THROWS_AS((void)q.is_zero(br(0, 0, 1)), UndecidableAtDegree);
  }
}

TEST_CASE("dims examples") {
  RationalField Q;
  SUBCASE("ten-triple holonomy: 10 independent brackets in degree two") {
    auto asmb = fixture("1033.arr");
    GradedQuotient<RationalField> q(Q, asmb.presentation, 3);
    CHECK(q.derived_dim(2) == 10);
    CHECK(q.derived_dim(1) == 0);
  }
  SUBCASE("free on two unit generators") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    GradedQuotient<RationalField> q(Q, Presentation(g, {}), 3);
    CHECK(q.derived_dim(2) == 1);
    CHECK(q.derived_dim(3) == 2);
  }
  SUBCASE("abelian derived algebra vanishes") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    std::vector<Relation> rels;
    rels.push_back({br(0, 1), kAmbientOrigin});
    GradedQuotient<RationalField> q(Q, Presentation(g, rels), 4);
    for (int d = 2; d <= 4; ++d) CHECK(q.derived_dim(d) == 0);
  }
  SUBCASE("unit-degree generators with relations in degree >= 2: L'_d = L_d for d >= 2") {
    for (const char* name : {"1033.arr", "k4.arr"}) {
      auto asmb = fixture(name);
      GradedQuotient<RationalField> q(Q, asmb.presentation, 4);
      CHECK(q.derived_dim(1) == 0);
      for (int d = 2; d <= 4; ++d) CHECK(q.derived_dim(d) == q.dim(d));
    }
  }
}

TEST_CASE("subalgebra_dims examples") {
  RationalField Q;
  SUBCASE("all generators span the whole algebra") {
    auto asmb = fixture("k4.arr");
    GradedQuotient<RationalField> q(Q, asmb.presentation, 4);
    std::vector<int> all;
    for (int g = 0; g < asmb.presentation.gens().size(); ++g) all.push_back(g);
    auto sub = q.subalgebra_dims(all, 4);
    for (int d = 1; d <= 4; ++d) CHECK(sub[static_cast<std::size_t>(d - 1)] == q.dim(d));
  }
  SUBCASE("one generator of a free algebra spans a line") {
    GeneratorList g;
    g.add("x");
    g.add("y");
    GradedQuotient<RationalField> q(Q, Presentation(g, {}), 4);
    CHECK(q.subalgebra_dims({0}, 4) == std::vector<long long>{1, 0, 0, 0});
  }
  SUBCASE("{4,5,6} generate a free subalgebra of the four-triple localized algebra") {
    auto asmb = fixture("k4.arr");
    GradedQuotient<RationalField> q(Q, asmb.presentation, 4);
    const auto& gens = asmb.presentation.gens();
    std::vector<int> chosen = {gens.require("4"), gens.require("5"), gens.require("6")};
    auto sub = q.subalgebra_dims(chosen, 4);
    std::vector<long long> expected;
    for (int d = 1; d <= 4; ++d) expected.push_back(witt_dimension({1, 1, 1}, d));
    CHECK(sub == expected);
  }
}

TEST_CASE("every defining relation reduces to zero") {
  RationalField Q;
  for (const char* name : {"1033.arr", "k4.arr", "ex1.arr"}) {
    auto asmb = fixture(name);
    GradedQuotient<RationalField> q(Q, asmb.presentation, 6);
    for (const auto& r : asmb.presentation.relations()) {
      CAPTURE(name);
      CAPTURE(r.element.str(asmb.presentation.gens()));
      CHECK(q.is_zero(r.element));
    }
  }
}

TEST_CASE("adding a relation never increases any quotient dimension") {
  RationalField Q;
  GeneratorList g;
  g.add("x");
  g.add("y");
  g.add("z");
  std::vector<Relation> rels;
  rels.push_back({br(0, 1), "R1"});
  std::vector<Relation> more = rels;
  more.push_back({br(0, 0, 2), "R2"});
  GradedQuotient<RationalField> q1(Q, Presentation(g, rels), 5);
  GradedQuotient<RationalField> q2(Q, Presentation(g, more), 5);
  for (int d = 1; d <= 5; ++d) CHECK(q2.dim(d) <= q1.dim(d));

  // the dropped k-th holonomy relation changes nothing
  auto arr = SetArrangement::validate({"1", "2", "3"}, {{"A", {0, 1, 2}, false}});
  auto pres = holonomy_presentation(arr);
  std::vector<Relation> with_kth = pres.relations();
  LieElement kth;  // [3, 1+2+3]
  kth += br(2, 0);
  kth += br(2, 1);
  with_kth.push_back({kth, "A"});
  GradedQuotient<RationalField> qa(Q, pres, 5);
  GradedQuotient<RationalField> qb(Q, Presentation(pres.gens(), with_kth), 5);
  for (int d = 1; d <= 5; ++d) CHECK(qa.dim(d) == qb.dim(d));
}

TEST_CASE("quotient dims match the literal left-normed ad-word ideal construction") {
  RationalField Q;
  struct Case {
    const char* file;
    int max_degree;
  };
  for (Case c : {Case{"k4.arr", 5}, Case{"ex1.arr", 6}, Case{"1033.arr", 4}}) {
    auto asmb = fixture(c.file);
    GradedQuotient<RationalField> q(Q, asmb.presentation, c.max_degree);
    LyndonIdealQuotient<RationalField> lit(Q, asmb.presentation, c.max_degree);
    for (int d = 1; d <= c.max_degree; ++d) {
      CAPTURE(c.file);
      CAPTURE(d);
      CHECK(q.dim(d) == lit.dim(d));
      CHECK(q.ideal_rank(d) == lit.ideal_rank(d));
    }
  }
}

TEST_CASE("dims are field-independent on the shipped fixtures (no small torsion)") {
  RationalField Q;
  PrimeField f101(101), f32003(32003);
  for (const char* name : {"1033.arr", "k4.arr", "ex1.arr"}) {
    auto asmb = fixture(name);
    int D = 5;
    GradedQuotient<RationalField> q(Q, asmb.presentation, D);
    GradedQuotient<PrimeField> qa(f101, asmb.presentation, D);
    GradedQuotient<PrimeField> qb(f32003, asmb.presentation, D);
    for (int d = 1; d <= D; ++d) {
      CAPTURE(name);
      CAPTURE(d);
      CHECK(q.dim(d) == qa.dim(d));
      CHECK(q.dim(d) == qb.dim(d));
    }
  }
}

TEST_CASE("generator order changes labels but no dimension") {
  RationalField Q;
  auto make = [&](std::vector<int> perm) {
    // k4 arrangement with permuted ground order
    std::vector<std::string> ground;
    for (int i : perm) ground.push_back(std::to_string(i + 1));
    auto id = [&](int name1) {
      for (std::size_t k = 0; k < ground.size(); ++k)
        if (ground[k] == std::to_string(name1)) return static_cast<int>(k);
      return -1;
    };
    std::vector<ArrBlock> blocks = {{"1", {id(1), id(2), id(3)}, false},
                                    {"2", {id(1), id(4), id(5)}, false},
                                    {"3", {id(2), id(4), id(6)}, false},
                                    {"4", {id(3), id(5), id(6)}, false}};
    return holonomy_presentation(SetArrangement::validate(ground, std::move(blocks)));
  };
  GradedQuotient<RationalField> qa(Q, make({0, 1, 2, 3, 4, 5}), 5);
  GradedQuotient<RationalField> qb(Q, make({5, 3, 1, 4, 2, 0}), 5);
  for (int d = 1; d <= 5; ++d) CHECK(qa.dim(d) == qb.dim(d));
}

TEST_CASE("reduce gives canonical representatives and respects linearity") {
  RationalField Q;
  auto asmb = fixture("k4.arr");
  GradedQuotient<RationalField> q(Q, asmb.presentation, 3);
  const auto& gens = asmb.presentation.gens();
  int g1 = gens.require("1"), g2 = gens.require("2"), g3 = gens.require("3");
  // [1,2] = [2,3] = [3,1] in the holonomy quotient of the block {1,2,3}
  auto v12 = q.reduce(br(g1, g2));
  auto v23 = q.reduce(br(g2, g3));
  auto v31 = q.reduce(br(g3, g1));
  CHECK_FALSE(v12.empty());
  CHECK(v12 == v23);
  CHECK(v23 == v31);
  LieElement diff = br(g1, g2) - br(g2, g3);
  CHECK(q.is_zero(diff));
}
