#include <sstream>

#include "doctest.h"
#include "facinv/cli.hpp"
#include "json.hpp"

using facinv::cli::run;
using facinv::cli::RunResult;
using nlohmann::json;

namespace {

RunResult invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return run(args, in);
}

std::string data(const std::string& name) { return std::string(FACINV_DATA_DIR) + "/" + name; }

void check_round_trip(const RunResult& r) {
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.dump() + "\n" == r.out);
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = invoke({"delta-set", "--gens", "3 4 5", "--method", "grobner", "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"delta_set\":[1]}\n");
  CHECK(r.err.empty());

  CHECK(invoke({"catenary", "--gens", "11 36 39", "--element", "450"}).out == "16\n");
  CHECK(invoke({"tame", "--equations", data("block_z2z2z2.json")}).out == "4\n");
}

TEST_CASE("plain output formats") {
  CHECK(invoke({"factorizations", "--gens", "3,4,5", "--element", "10"}).out == "(0,0,2)\n(2,1,0)\n");
  CHECK(invoke({"length-set", "--gens", "3 4 5", "--element", "12"}).out == "3 4\n");
  CHECK(invoke({"delta-element", "--gens", "3 4 5", "--element", "8"}).out == "\n");
  CHECK(invoke({"betti", "--gens", "3 4 5"}).out == "8\n9\n10\n");
  CHECK(invoke({"min-presentation", "--gens", "3 4 5"}).out ==
        "(1,0,1) (0,2,0)\n(3,0,0) (0,1,1)\n(2,1,0) (0,0,2)\n");
  CHECK(invoke({"catenary-range", "--gens", "3 5", "--bound", "15"}).out ==
        "0 0\n3 0\n5 0\n6 0\n8 0\n9 0\n10 0\n11 0\n12 0\n13 0\n14 0\n15 5\n");
  CHECK(invoke({"factorizations", "--gens", "(1,0);(1,1);(1,2)", "--element", "(2,2)"}).out ==
        "(0,2,0)\n(1,0,1)\n");
  CHECK(invoke({"betti", "--gens", "(1,0);(1,1);(1,2)"}).out == "(2,2)\n");
  CHECK(invoke({"block-monoid", "--moduli", "3"}).out == "(0,3)\n(1,1)\n(3,0)\n");
}

TEST_CASE("JSON output round-trips") {
  const std::vector<std::vector<std::string>> cases{
      {"factorizations", "--gens", "3 4 5", "--element", "24", "--format", "json"},
      {"length-set", "--gens", "3 4 5", "--element", "24", "--format", "json"},
      {"delta-element", "--gens", "11 36 39", "--element", "450", "--format", "json"},
      {"delta-set", "--gens", "17 33 53 71", "--method", "hilbert", "--format", "json"},
      {"min-presentation", "--gens", "(1,0);(1,1);(1,3)", "--format", "json"},
      {"betti", "--gens", "11 36 39", "--format", "json"},
      {"graver", "--gens", "3 4 5", "--format", "json"},
      {"hilbert", "--equations", data("block_z2z3.json"), "--format", "json"},
      {"catenary", "--gens", "11 36 39", "--element", "351", "--method", "naive", "--format", "json"},
      {"catenary-range", "--gens", "11 23 27 31 43", "--bound", "100", "--format", "json"},
      {"tame", "--equations", data("block_z2z3.json"), "--atoms", "1 2", "--format", "json"},
      {"block-monoid", "--moduli", "2 2", "--format", "json"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0]);
    check_round_trip(invoke(args));
  }
  const json j = json::parse(invoke(cases[0]).out);
  CHECK(j.at("element") == json::array({24}));
  CHECK(j.at("factorizations").size() == 8);
  const json c = json::parse(invoke(cases[8]).out);
  CHECK(c == json{{"catenary_degree", 16}, {"element", {351}}});
}

TEST_CASE("the two delta methods print the same thing") {
  for (const std::string gens : {"3 4 5", "17 33 53 71", "11 36 39", "(1,0);(1,1);(1,3)", "(2,0);(1,1);(0,2)",
                                 "(1,2);(3,1);(2,2);(0,3)"}) {
    for (const std::string format : {"plain", "json"}) {
      const auto h = invoke({"delta-set", "--gens", gens, "--method", "hilbert", "--format", format});
      const auto g = invoke({"delta-set", "--gens", gens, "--method", "grobner", "--format", format});
      CHECK(h.exit_code == 0);
      CHECK(h.out == g.out);
    }
  }
}

TEST_CASE("semigroup sources") {
  CHECK(invoke({"betti", "--gens", "-"}, "3 4\n5\n").out == "8\n9\n10\n");
  CHECK(invoke({"tame", "--equations", data("block_z2z3.json"), "--atoms", "1"}).exit_code == 0);
  // More than one source, or none.
  CHECK(invoke({"betti", "--gens", "3 4", "--equations", data("block_z2z3.json")}).exit_code == 2);
  CHECK(invoke({"betti"}).exit_code == 2);
  CHECK(invoke({"betti", "--gens-file", "/nonexistent/gens.txt"}).exit_code == 2);
}

TEST_CASE("errors exit with the documented codes and print nothing") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"betti", "--gens", "3 4 5", "--bogus"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
      {{"betti", "--gens", "3 x 5"}, 2},
      {{"betti", "--gens", "3 -4"}, 2},
      {{"betti", "--gens", "(1,0);(1"}, 2},
      {{"betti", "--gens", "(1,0);(1,1,1)"}, 2},
      {{"betti", "--gens", "99999999999999999999999"}, 2},
      {{"catenary", "--gens", "3 4 5", "--element", "(1,2)"}, 2},
      {{"catenary", "--gens", "3 4 5"}, 2},
      {{"delta-set", "--gens", "3 4 5", "--method", "magic"}, 2},
      {{"delta-set", "--gens", "3 4 5", "--format", "xml"}, 2},
      {{"delta-set", "--gens", "3 4 5", "--max-steps", "0"}, 2},
      {{"tame", "--equations", data("block_z2z3.json"), "--atoms", "99"}, 2},
      {{"catenary", "--gens", "3 4 5", "--element", "2"}, 3},
      {{"length-set", "--gens", "3 4 5", "--element", "1"}, 3},
      {{"tame", "--gens", "3 4 5"}, 3},
      {{"catenary-range", "--gens", "(1,0);(0,1)", "--bound", "3"}, 3},
      {{"delta-set", "--gens", "17 33 53 71", "--max-steps", "10"}, 4},
      {{"graver", "--gens", "17 33 53 71", "--max-steps", "10", "--format", "json"}, 4},
  };
  for (const auto& c : cases) {
    const auto r = invoke(c.args);
    CAPTURE(c.args.empty() ? std::string("<none>") : c.args[0]);
    CHECK(r.exit_code == c.code);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help succeeds") {
  const auto r = invoke({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("catenary-range") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"min-presentation", "--gens", "11 23 27 31 43", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);
}
