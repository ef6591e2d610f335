#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cli_support.hpp"
#include "liearr/relparse.hpp"

using namespace liearr;
using liearr::testing::fixture_path;
using liearr::testing::run_cli;

TEST_CASE("flats command") {
  SUBCASE("normal-vector input yields the ten triples") {
    auto r = run_cli("flats " + fixture_path("1033-normals.arr"));
    CHECK(r.exit_code == 0);
    auto spec = parse_arrangement_file(r.output);  // output is a valid file
    std::set<std::set<std::string>> triples;
    for (const auto& b : spec.blocks)
      if (b.members.size() == 3) triples.insert({b.members.begin(), b.members.end()});
    std::set<std::set<std::string>> expected = {
        {"1", "2", "3"}, {"1", "4", "5"}, {"2", "4", "6"}, {"3", "5", "6"}, {"1", "7", "8"},
        {"2", "7", "10"}, {"3", "7", "9"}, {"4", "8", "10"}, {"5", "9", "10"}, {"6", "8", "9"}};
    CHECK(triples == expected);
  }
  SUBCASE("two hyperplanes give one block") {
    std::string tmp = "/tmp/liearr_two_planes.arr";
    std::ofstream(tmp) << "ground: a b\nnormal a: 1 0\nnormal b: 0 1\n";
    auto r = run_cli("flats " + tmp);
    CHECK(r.exit_code == 0);
    auto spec = parse_arrangement_file(r.output);
    CHECK(spec.blocks.size() == 1);
  }
  SUBCASE("flats output is a fixpoint of flats") {
    auto first = run_cli("flats " + fixture_path("1033.arr"));
    REQUIRE(first.exit_code == 0);
    std::string tmp = "/tmp/liearr_flats_once.arr";
    std::ofstream(tmp) << first.output;
    auto second = run_cli("flats " + tmp);
    REQUIRE(second.exit_code == 0);
    auto a = parse_arrangement_file(first.output);
    auto b = parse_arrangement_file(second.output);
    std::set<std::set<std::string>> sa, sb;
    for (const auto& blk : a.blocks) sa.insert({blk.members.begin(), blk.members.end()});
    for (const auto& blk : b.blocks) sb.insert({blk.members.begin(), blk.members.end()});
    CHECK(sa == sb);
  }
  SUBCASE("input errors exit 2") {
    CHECK(run_cli("flats /tmp/liearr_no_such_file.arr").exit_code == 2);
    std::string tmp = "/tmp/liearr_bad.arr";
    std::ofstream(tmp) << "ground: a b\nblock A: a q\n";
    auto r = run_cli("flats " + tmp);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown name 'q'") != std::string::npos);
  }
}

TEST_CASE("dims command") {
  SUBCASE("ten triples: derived row starts 0, 10, 22, 39") {
    auto r = run_cli("dims " + fixture_path("1033.arr") + " -d 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1  10  0") != std::string::npos);
    CHECK(r.output.find("2  10  10") != std::string::npos);
    CHECK(r.output.find("3  22  22") != std::string::npos);
    CHECK(r.output.find("4  39  39") != std::string::npos);
  }
  SUBCASE("four triples on six generators") {
    auto r = run_cli("dims " + fixture_path("k4.arr") + " -d 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1  6  0") != std::string::npos);
    CHECK(r.output.find("2  4  4") != std::string::npos);
    CHECK(r.output.find("3  10  10") != std::string::npos);
    CHECK(r.output.find("4  21  21") != std::string::npos);
  }
  SUBCASE("weighted fixture over several fields agrees") {
    auto r = run_cli("dims " + fixture_path("ex1.arr") + " -d 5 --all-fields q,2,3,101");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fields agree: yes") != std::string::npos);
  }
  SUBCASE("structured output is stable across runs") {
    auto a = run_cli("dims " + fixture_path("k4.arr") + " -d 3 --format structured");
    auto b = run_cli("dims " + fixture_path("k4.arr") + " -d 3 --format structured");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"fields_agree\": true") != std::string::npos);
  }
  SUBCASE("truncation below a relation degree exits 3 with a warning") {
    std::string tmp = "/tmp/liearr_highdeg.arr";
    std::ofstream(tmp) << "ground: x y\nmode: custom\nblock A: x y\nrel A: [x,[x,[x,[x,y]]]]\n";
    auto r = run_cli("dims " + tmp + " -d 2");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("warning") != std::string::npos);
  }
}

TEST_CASE("check command exit codes") {
  SUBCASE("explicit paper partition decomposes (exit 0)") {
    auto r = run_cli("check " + fixture_path("1033.arr") +
                     " --partition B1=1,2,3,4 --singletons-rest -d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("checked 58, zero 58") != std::string::npos);
    CHECK(r.output.find("verdict: decomposes") != std::string::npos);
  }
  SUBCASE("file groups give the same run by default") {
    auto r = run_cli("check " + fixture_path("1033.arr") + " -d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("checked 58, zero 58") != std::string::npos);
  }
  SUBCASE("all-singletons partition fails with a witness (exit 1)") {
    auto r = run_cli("check " + fixture_path("1033.arr") + " --singletons -d 3");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("nonzero") != std::string::npos);
    CHECK(r.output.find("verdict: does-not-decompose") != std::string::npos);
  }
  SUBCASE("the weighted example decomposes as singletons (exit 0)") {
    auto r = run_cli("check " + fixture_path("ex1.arr") + " --singletons -d 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("checked 11, zero 11") != std::string::npos);
  }
  SUBCASE("a too-small truncation degree is undecidable (exit 3)") {
    auto r = run_cli("check " + fixture_path("ex1.arr") + " --singletons -d 3");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("undecidable") != std::string::npos);
  }
  SUBCASE("bad partitions exit 2") {
    auto r = run_cli("check " + fixture_path("1033.arr") + " --partition A=1,5 --singletons-rest");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("not closed") != std::string::npos);
    CHECK(run_cli("check " + fixture_path("1033.arr") + " --partition A=1,2").exit_code == 2);
    CHECK(run_cli("check " + fixture_path("1033.arr") + " --partition A=zz").exit_code == 2);
  }
  SUBCASE("several fields cross-tabulate") {
    auto r = run_cli("check " + fixture_path("1033.arr") + " -d 3 --all-fields q,2,3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fields agree: yes") != std::string::npos);
  }
}

TEST_CASE("partial command") {
  SUBCASE("splitting off the four-triple sub-arrangement") {
    auto r = run_cli("partial " + fixture_path("1033.arr") + " --sub 1,2,3,4 -d 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("checked 16, zero 16") != std::string::npos);
    CHECK(r.output.find("kernel = complement span: yes") != std::string::npos);
  }
  SUBCASE("non-closed sub-arrangement exits 2") {
    auto r = run_cli("partial " + fixture_path("1033.arr") + " --sub 1,5 -d 3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("not closed") != std::string::npos);
  }
}
