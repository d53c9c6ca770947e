#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "cockcroft/cli.hpp"
#include "cockcroft/word.hpp"

using namespace cockcroft;
using cli::Json;

namespace {

const std::filesystem::path kGolden = COCKCROFT_GOLDEN_DIR;

Json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return Json::parse(in);
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("cockcroft_test_" + name);
  std::ofstream(path) << content;
  return path;
}

// Every printed word must re-parse to the same word. Basis entries (objects
// with a "bracket") hold Lyndon monomials rather than words and are skipped.
void check_round_trip(const Json& j, const AlphabetPtr& a, int& count) {
  auto same = [&](const Json& v) {
    auto text = v.get<std::string>();
    CHECK(parse_word(text, a).to_string() == text);
    ++count;
  };
  if (j.is_object()) {
    if (j.contains("bracket")) return;
    for (const auto& [key, value] : j.items()) {
      if (key == "word" || key == "mu" || key == "conjugator" || key == "product") {
        same(value);
      } else if (key == "relators") {
        for (const auto& r : value) same(r);
      } else {
        check_round_trip(value, a, count);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) check_round_trip(v, a, count);
  }
}

}  // namespace

TEST_CASE("demo output matches the golden files") {
  struct Case {
    std::vector<std::string> args;
    std::string file;
  };
  std::vector<Case> cases{
      {{"demo", "example1", "--a", "1", "--b", "1", "--c", "1"}, "demo_example1_1_1_1.json"},
      {{"demo", "example1", "--a", "2", "--b", "3", "--c", "5"}, "demo_example1_2_3_5.json"},
      {{"demo", "example2", "--c", "1"}, "demo_example2_1.json"},
      {{"demo", "example2", "--c", "3"}, "demo_example2_3.json"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    auto res = cli::run(c.args);
    auto golden = load(kGolden / c.file);
    CHECK(res.to_json() == golden);
    CHECK(res.exit_code == 0);
  }
}

TEST_CASE("demo headline values") {
  auto one = cli::run({"demo", "example1", "--a", "1", "--b", "1", "--c", "1"}).payload;
  CHECK(one["certificate"]["n"] == "2");
  CHECK(one["detection"]["detected"] == true);
  CHECK(one["detection"]["vector"]["coords"] == Json{{"xyz", "1"}, {"xzy", "1"}});
  CHECK(one["detection"]["vector"] == one["reference_class"]);
  CHECK(one["membership"]["R"]["balance_zero"] == true);
  CHECK(one["membership"]["S"]["balance_zero"] == true);

  auto big = cli::run({"demo", "example1", "--a", "2", "--b", "3", "--c", "5"}).payload;
  CHECK(big["scalar"] == "30");
  CHECK(big["detection"]["vector"]["coords"] == Json{{"xyz", "30"}, {"xzy", "30"}});

  auto two = cli::run({"demo", "example2", "--c", "3"}).payload;
  CHECK(two["certificate"]["n"] == "3");
  CHECK(two["scalar"] == "9");
  CHECK(two["detection"]["vector"]["render"] == "-9*[x,[[x,y],y]]");
  CHECK(two["reference_commutator"] == "[y,[x,[x,y]]]");
  CHECK(two["matches_reference_power"] == true);
}

TEST_CASE("runs are deterministic") {
  std::vector<std::string> args{"demo", "example1", "--a", "2", "--b", "3", "--c", "1", "--json"};
  CHECK(cli::run(args).render() == cli::run(args).render());
}

TEST_CASE("printed words re-parse to equal words") {
  auto pres = scratch("ex1.pres", "gens: x, y, z\nr: [x,y]\ns: [y,z]\ns: [z,x]\n");
  auto XYZ = make_alphabet({"x", "y", "z"});
  int count = 0;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"demo", "example1", "--a", "2", "--b", "-3", "--c", "5"},
           {"demo", "example2", "--c", "-2"},
           {"member", "--file", pres.string(), "--part", "s", "--word", "x^2 [[x,y],z] x^-2"},
           {"expand", "--gens", "x,y,z", "--word", "[x^3,z^-2] y", "--degree", "2"},
           {"cockcroft-check", "--file", pres.string()}}) {
    auto res = cli::run(args);
    REQUIRE(res.exit_code == 0);
    check_round_trip(res.payload, XYZ, count);
  }
  CHECK(count > 20);
}

TEST_CASE("usage errors exit with code 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"demo", "example1", "--a", "0"},
           {"demo", "example2", "--c", "0"},
           {"demo", "example2", "--c", "two"},
           {"weight", "--word", "x"},
           {"expand", "--gens", "x,y", "--word", "x"},
           {"snf"},
           {"member", "--gens", "x", "--word", "x"}}) {
    auto res = cli::run(args);
    CAPTURE(res.command);
    CHECK(res.exit_code == 2);
    CHECK(res.status == "usage_error");
    CHECK_FALSE(res.diagnostic.empty());
  }
}

TEST_CASE("input errors and failures exit with code 1") {
  auto bad = cli::run({"weight", "--gens", "x,y", "--word", "x^"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.status == "input_error");
  CHECK(bad.diagnostic.find("position") != std::string::npos);

  auto dep = scratch("dep.pres", "gens: x, y\nr: [x,y]\ns: [x,y^2]\n");
  auto res = cli::run({"cockcroft-check", "--file", dep.string()});
  CHECK(res.exit_code == 1);
  CHECK(res.status == "dependent");
  CHECK(res.payload["failure"]["dependency"].size() == 2);

  auto uneq = scratch("uneq.pres", "gens: x, y\nr: x\ns: [x,y]\n");
  CHECK(cli::run({"cockcroft-check", "--file", uneq.string()}).status == "unequal_weights");

  auto missing = cli::run({"homology", "--file", "/nonexistent/file.pres"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.status == "input_error");
}

TEST_CASE("algebra commands") {
  auto e = cli::run({"expand", "--gens", "x,y", "--word", "[x,y]", "--degree", "2"}).payload;
  CHECK(e["terms"] == Json{{"xy", "1"}, {"yx", "-1"}});
  CHECK(e["constant"] == "1");

  // Binomial coefficients beyond 64 bits stay exact.
  auto huge = cli::run({"expand", "--gens", "x", "--word", "x^1000000000000", "--degree", "3"}).payload;
  CHECK(huge["terms"]["xxx"] == "166666666666166666666667000000000000");

  CHECK(cli::run({"weight", "--gens", "x,y", "--word", "1"}).payload["weight"] == "identity");
  CHECK(cli::run({"weight", "--gens", "x,y", "--word", "[x,[x,y]]"}).payload["weight"] == "3");
  CHECK(cli::run({"weight", "--gens", "x,y", "--word", "[x,[x,[x,y]]]", "--dmax", "3"}).payload["weight"] ==
        "exceeds_bound");

  auto cls = cli::run({"class", "--gens", "x,y", "--word", "[y,[x,y]]", "--degree", "3"}).payload;
  CHECK(cls["class"]["render"] == "-[[x,y],y]");

  auto lb = cli::run({"lyndon-basis", "--gens", "x,y", "--degree", "5"}).payload;
  CHECK(lb["count"] == "6");

  auto snf = cli::run({"snf", "--matrix", "2,4,4;-6,6,12;10,-4,-16"}).payload;
  CHECK(snf["invariant_factors"] == Json{"2", "6", "12"});
  CHECK(snf["rank"] == "3");

  auto tor = scratch("tor.pres", "gens: x, y, z\nr: x^2 y^4\nr: y^6\n");
  auto h = cli::run({"homology", "--file", tor.string()}).payload;
  CHECK(h["homology"]["h1"]["text"] == "Z + Z/2 + Z/6");
  CHECK(h["homology"]["h2_free_rank"] == "0");
}

TEST_CASE("membership commands") {
  auto pres = scratch("ex1m.pres", "gens: x, y, z\nr: [x,y]\ns: [y,z]\ns: [z,x]\n");
  auto m = cli::run({"member", "--file", pres.string(), "--part", "r", "--word", "[[x,y],z]"});
  CHECK(m.exit_code == 0);
  CHECK(m.payload["evidence"] == "search_proved");
  CHECK(m.payload["witness_valid"] == true);

  auto u = cli::run({"member", "--file", pres.string(), "--part", "r", "--word", "x"});
  CHECK(u.exit_code == 1);
  CHECK(u.status == "unknown");

  auto good = scratch("w_good.json", R"({"factors": [{"conjugator": "z", "relator": "0", "exponent": "-1"}]})");
  auto ok = cli::run({"witness-check", "--file", pres.string(), "--part", "r", "--word", "z [y,x] z^-1", "--witness",
                      good.string()});
  CHECK(ok.exit_code == 0);
  CHECK(ok.payload["valid"] == true);
  CHECK(ok.payload["exponent_balance"] == Json{{"0", "-1"}});

  auto wrong = cli::run({"witness-check", "--file", pres.string(), "--part", "r", "--word", "[x,y]", "--witness",
                         good.string()});
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.status == "invalid_witness");

  auto e = cli::run({"e-class", "--file", pres.string(), "--word", "[x,y]", "--degree", "3"});
  CHECK(e.status == "weight_below_degree");
}

TEST_CASE("json and pretty renderings carry the same document") {
  auto compact = cli::run({"lyndon-basis", "--gens", "x,y", "--degree", "3", "--json"});
  auto pretty = cli::run({"lyndon-basis", "--gens", "x,y", "--degree", "3"});
  CHECK(compact.render().find('\n') == std::string::npos);
  CHECK(pretty.render().find('\n') != std::string::npos);
  CHECK(Json::parse(compact.render())["payload"] == Json::parse(pretty.render())["payload"]);
}
