#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liearr/freelie.hpp"

using namespace liearr;

namespace {

GeneratorList xy() {
  GeneratorList g;
  g.add("x");
  g.add("y");
  return g;
}

LieElement bracket_of(std::initializer_list<int> leaves_left_nested) {
  // builds [a,[b,[c,...]]] from generator ids
  std::vector<int> ids(leaves_left_nested);
  LieTreePtr t = LieTree::leaf(ids.back());
  for (auto it = ids.rbegin() + 1; it != ids.rend(); ++it)
    t = LieTree::node(LieTree::leaf(*it), t);
  return LieElement::monomial(1, t);
}

// Brute-force Lyndon count: words of weighted degree d that are strictly
// smaller than all their proper rotations. Independent of the Duval path.
long long lyndon_count_bruteforce(const std::vector<int>& weights, int d) {
  long long count = 0;
  std::vector<int> word;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      Word w;
      for (int g : word) w += static_cast<char>(g);
      if (is_lyndon(w)) ++count;
      return;
    }
    for (std::size_t g = 0; g < weights.size(); ++g) {
      if (weights[g] > remaining) continue;
      word.push_back(static_cast<int>(g));
      self(self, remaining - weights[g]);
      word.pop_back();
    }
  };
  rec(rec, d);
  return count;
}

}  // namespace

TEST_CASE("lyndon_words examples") {
  SUBCASE("two unit generators up to degree 3") {
    auto basis = LyndonBasis::build(xy(), 3);
    CHECK(basis.words(1) == std::vector<Word>{Word("\0", 1), Word("\1", 1)});
    CHECK(basis.words(2) == std::vector<Word>{Word("\0\1", 2)});
    CHECK(basis.words(3) == std::vector<Word>{Word("\0\0\1", 3), Word("\0\1\1", 3)});
  }
  SUBCASE("single generator has no Lyndon words beyond degree 1") {
    GeneratorList g;
    g.add("x");
    auto basis = LyndonBasis::build(g, 5);
    CHECK(basis.size(1) == 1);
    for (int d = 2; d <= 5; ++d) CHECK(basis.size(d) == 0);
  }
  SUBCASE("weighted alphabet u:1, x:2") {
    GeneratorList g;
    g.add("u", 1);
    g.add("x", 2);
    auto basis = LyndonBasis::build(g, 3);
    CHECK(basis.size(1) == 1);  // u
    CHECK(basis.size(2) == 1);  // x
    CHECK(basis.words(3) == std::vector<Word>{Word("\0\1", 2)});  // ux
  }
}

TEST_CASE("standard bracketings of small Lyndon words") {
  auto gens = xy();
  auto basis = LyndonBasis::build(gens, 3);
  CHECK(basis.bracketing(2, 0)->str(gens) == "[x,y]");
  CHECK(basis.bracketing(3, 0)->str(gens) == "[x,[x,y]]");
  CHECK(basis.bracketing(3, 1)->str(gens) == "[[x,y],y]");
}

TEST_CASE("expand examples") {
  auto gens = xy();
  SUBCASE("[x,y] -> xy - yx") {
    PolyZ p = expand(bracket_of({0, 1}));
    REQUIRE(p.size() == 2);
    CHECK(p.at(Word("\0\1", 2)) == 1);
    CHECK(p.at(Word("\1\0", 2)) == -1);
  }
  SUBCASE("[x,x] -> 0") {
    CHECK(expand(bracket_of({0, 0})).empty());
  }
  SUBCASE("[x,[x,y]] -> xxy - 2xyx + yxx") {
    PolyZ p = expand(bracket_of({0, 0, 1}));
    REQUIRE(p.size() == 3);
    CHECK(p.at(Word("\0\0\1", 3)) == 1);
    CHECK(p.at(Word("\0\1\0", 3)) == -2);
    CHECK(p.at(Word("\1\0\0", 3)) == 1);
  }
}

TEST_CASE("lyndon_coords examples") {
  auto gens = xy();
  auto basis = LyndonBasis::build(gens, 3);
  RationalField f;

  SUBCASE("[y,x] has coordinate -1 on xy") {
    auto coords = lyndon_coords(f, gens, bracket_of({1, 0}), basis);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0].first == 0);
    CHECK(coords[0].second == mpq_class(-1));
  }
  SUBCASE("[x,[x,y]] is the basis element xxy") {
    auto coords = lyndon_coords(f, gens, bracket_of({0, 0, 1}), basis);
    REQUIRE(coords.size() == 1);
    CHECK(basis.words(3)[coords[0].first] == Word("\0\0\1", 3));
    CHECK(coords[0].second == mpq_class(1));
  }
  SUBCASE("[[x,y],y] is the basis element xyy") {
    LieElement e = LieElement::monomial(
        1, LieTree::node(LieTree::node(LieTree::leaf(0), LieTree::leaf(1)), LieTree::leaf(1)));
    auto coords = lyndon_coords(f, gens, e, basis);
    REQUIRE(coords.size() == 1);
    CHECK(basis.words(3)[coords[0].first] == Word("\0\1\1", 3));
    CHECK(coords[0].second == mpq_class(1));
  }
  SUBCASE("degree above the basis range is an error") {
    CHECK_THROWS(lyndon_coords(f, gens, bracket_of({0, 0, 1, 1}), basis));
  }
}

TEST_CASE("witt_dimension examples") {
  SUBCASE("two unit-degree generators") {
    std::vector<int> w = {1, 1};
    CHECK(witt_dimension(w, 1) == 2);
    CHECK(witt_dimension(w, 2) == 1);
    CHECK(witt_dimension(w, 3) == 2);
    CHECK(witt_dimension(w, 4) == 3);
    CHECK(witt_dimension(w, 5) == 6);
  }
  SUBCASE("one generator") {
    std::vector<int> w = {1};
    CHECK(witt_dimension(w, 1) == 1);
    for (int d = 2; d <= 6; ++d) CHECK(witt_dimension(w, d) == 0);
  }
  SUBCASE("three unit-degree generators") {
    std::vector<int> w = {1, 1, 1};
    CHECK(witt_dimension(w, 2) == 3);
    CHECK(witt_dimension(w, 3) == 8);
  }
}

TEST_CASE("witt agrees with brute-force Lyndon enumeration (unit weights 1..4, d <= 10)") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> weights(static_cast<std::size_t>(n), 1);
    for (int d = 1; d <= 10; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(witt_dimension(weights, d) == lyndon_count_bruteforce(weights, d));
    }
  }
}

TEST_CASE("witt agrees with brute force for the weighted profiles (1,1,2) and (2,2,2,1,1)") {
  for (const auto& weights : {std::vector<int>{1, 1, 2}, std::vector<int>{2, 2, 2, 1, 1}}) {
    for (int d = 1; d <= 10; ++d) {
      CAPTURE(d);
      CHECK(witt_dimension(weights, d) == lyndon_count_bruteforce(weights, d));
    }
  }
}

TEST_CASE("basis sizes match witt dimensions (alphabets <= 4, unit and mixed weights)") {
  std::vector<std::vector<int>> profiles = {{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1},
                                            {1, 2},  {1, 1, 2}, {2, 2, 2, 1, 1}};
  for (const auto& weights : profiles) {
    GeneratorList gens;
    for (std::size_t i = 0; i < weights.size(); ++i)
      gens.add("g" + std::to_string(i), weights[i]);
    int up_to = weights.size() <= 2 ? 10 : 8;
    auto basis = LyndonBasis::build(gens, up_to);
    for (int d = 1; d <= up_to; ++d) {
      CAPTURE(weights.size());
      CAPTURE(d);
      CHECK(static_cast<long long>(basis.size(d)) == witt_dimension(weights, d));
    }
  }
}

TEST_CASE("triangularity: expansions lead with their own word, coefficient 1") {
  GeneratorList gens;
  gens.add("x");
  gens.add("y");
  gens.add("z");
  auto basis = LyndonBasis::build(gens, 5);
  for (int d = 1; d <= 5; ++d)
    for (std::size_t i = 0; i < basis.size(d); ++i) {
      const PolyZ& p = basis.expansion(d, static_cast<std::size_t>(i));
      CHECK(p.begin()->first == basis.words(d)[i]);  // least word is the Lyndon word
      CHECK(p.begin()->second == 1);
    }
}

TEST_CASE("lyndon_coords inverts linear combinations of basis bracketings") {
  GeneratorList gens = xy();
  auto basis = LyndonBasis::build(gens, 6);
  RationalField f;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int d = 2; d <= 6; ++d) {
    LieElement e;
    std::vector<mpq_class> expected(basis.size(d), 0);
    for (std::size_t i = 0; i < basis.size(d); ++i) {
      int c = coeff(rng);
      expected[i] = c;
      if (c != 0) e += LieElement::monomial(c, basis.bracketing(d, i));
    }
    auto coords = to_dense(f, lyndon_coords(f, gens, e, basis), basis.size(d));
    CHECK(coords == expected);
  }
}

TEST_CASE("expand is a Lie homomorphism into the commutator algebra") {
  GeneratorList gens = xy();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(0, 1), coeff(-2, 2);
  auto random_element = [&](int max_leaves) {
    LieElement e;
    for (int t = 0; t < 2; ++t) {
      LieTreePtr tree = LieTree::leaf(pick(rng));
      for (int l = 1; l < max_leaves; ++l) tree = LieTree::node(LieTree::leaf(pick(rng)), tree);
      e += LieElement::monomial(coeff(rng), tree);
    }
    return e;
  };
  RationalField f;
  for (int iter = 0; iter < 50; ++iter) {
    LieElement a = random_element(2), b = random_element(3);
    PolyF<RationalField> lhs = poly_to_field(f, expand(lie_bracket(a, b)));
    PolyF<RationalField> rhs =
        poly_commutator(f, poly_to_field(f, expand(a)), poly_to_field(f, expand(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ad_word examples") {
  GeneratorList gens;
  gens.add("x");
  gens.add("y");
  gens.add("z");
  LieElement yz = LieElement::monomial(1, LieTree::node(LieTree::leaf(1), LieTree::leaf(2)));

  SUBCASE("empty prefix is the identity") {
    LieElement e = ad_word(Word(), yz);
    CHECK(e.str(gens) == "[y,z]");
  }
  SUBCASE("single prefix letter") {
    CHECK(ad_word(Word("\0", 1), yz).str(gens) == "[x,[y,z]]");
  }
  SUBCASE("repeated prefix letters nest left") {
    CHECK(ad_word(Word("\0\0", 2), yz).str(gens) == "[x,[x,[y,z]]]");
  }
}

TEST_CASE("pretty-printing of elements") {
  GeneratorList gens = xy();
  LieElement e = LieElement::monomial(3, LieTree::node(LieTree::leaf(0),
                                                       LieTree::node(LieTree::leaf(0), LieTree::leaf(1))));
  e -= LieElement::monomial(1, LieTree::node(LieTree::leaf(1),
                                             LieTree::node(LieTree::leaf(0), LieTree::leaf(1))));
  CHECK(e.str(gens) == "3*[x,[x,y]] - [y,[x,y]]");
  CHECK(LieElement().str(gens) == "0");
}
