#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "powerindex/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = powerindex::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("index") {
    auto r = run({"index", "--weights", "2,1,1", "--quota", "3", "--mode", "ge", "--kind", "both",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["banzhaf"] == json({"3/5", "1/5", "1/5"}));
    CHECK(doc["ss"] == json({"2/3", "1/6", "1/6"}));

    r = run({"index", "--weights", "1,1,1,1", "--quota", "3", "--mode", "ge", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "player,weight,banzhaf,ss\n0,1,1/4,1/4\n1,1,1/4,1/4\n2,1,1/4,1/4\n3,1,1/4,1/4\n");

    r = run({"index", "--weights", "6,3,2,1", "--quota", "1/2", "--mode", "gt", "--normalize",
             "--kind", "ss"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "3/4"));
  }

  TEST_CASE("global options may come before or after the subcommand") {
    const auto before = run({"--format", "json", "--engine", "enum", "index", "--weights", "2,1,1",
                             "--quota", "3"});
    const auto after = run({"index", "--weights", "2,1,1", "--quota", "3", "--format", "json",
                            "--engine", "enum"});
    REQUIRE(before.code == 0);
    CHECK(before.out == after.out);
    CHECK(json::parse(before.out)["engine"]["ss"] == "enum");
    const auto capped = run({"--max-players", "2", "--format", "json", "index", "--weights",
                             "2,1,1", "--quota", "3"});
    CHECK(json::parse(capped.out)["engine"]["banzhaf"] == "dp");
  }

  TEST_CASE("exit codes") {
    CHECK(run({"index", "--weights", "1", "--quota", "2", "--mode", "ge"}).code == 3);
    CHECK(run({"index", "--weights", "1,x", "--quota", "2"}).code == 2);
    CHECK(run({"index", "--weights", "1,1", "--quota", "2", "--mode", "le"}).code == 2);
    CHECK(run({"index", "--weights", "1,1", "--quota", "2", "--engine", "fast"}).code == 2);
    CHECK(run({"index", "--weights", "1,1", "--quota", "2", "--format", "xml"}).code == 2);
    CHECK(run({"index", "--weights", "1,1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"divisor", "1"}).code == 2);
    CHECK(run({"divisor", "-4"}).code == 2);
    CHECK(run({"fixedpoint", "--weights", "0,0"}).code == 2);
    CHECK(run({"fixedpoint", "--weights", "1,1"}).code == 2);
    CHECK(run({"fixedpoint", "--weights", "0,0", "--normalize"}).code == 2);
    CHECK(run({"family", "abc", "--m", "3", "--solve"}).code == 2);
    CHECK(run({"family", "aab", "--m", "4", "--b", "1/4"}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
    CHECK(run({"verify", "prop24", "--n", "12", "--p", "29", "--m", "37"}).code == 1);
    CHECK(run({"family", "ab", "--k", "3", "--C", "2", "--banzhaf-check"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("divisor") {
    auto r = run({"divisor", "6", "--prop21"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "indices differ at divisor 6"));
    r = run({"divisor", "20", "--formulas", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["prediction"]["banzhaf_1"] == "1/42");
    bool found = false;
    for (const auto& c : doc["formula_checks"]) {
      if (c["class"] == "B(1)") {
        found = true;
        CHECK(c["predicted"] == "1/42");
        CHECK(c.contains("matches"));
      }
    }
    CHECK(found);
    r = run({"divisor", "24", "--formulas"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "formulas:"));
  }

  TEST_CASE("scan") {
    auto r = run({"scan", "--limit", "100", "--divisor-count", "6", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "\n12,6,4\n"));
    CHECK(has(r.out, "\n18,6,3\n"));
    CHECK(has(r.out, "\n20,6,2\n"));
    r = run({"scan", "--limit", "30", "--report", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,d,sigma,k,banzhaf_vector,ss_vector,witness_positions,formula_match\n", 0) == 0);
    CHECK(has(r.out, "\n6,4,12,0,"));
    CHECK(has(r.out, "\n28,6,56,0,"));
    CHECK(has(r.out, "\n20,6,42,2,"));
    CHECK_FALSE(has(r.out, "\n24,"));
    r = run({"scan", "--limit", "1000", "--quasiperfect"});
    CHECK(r.code == 0);
  }

  TEST_CASE("fixedpoint") {
    auto r = run({"fixedpoint", "--weights", "1/2,1/4,1/4", "--kind", "ss", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["kind"] == "ss");
    CHECK(doc["states"].size() == 3);
    CHECK(doc["states"][2] == json({"1", "0", "0"}));
    CHECK(doc["outcome"]["type"] == "fixed");

    r = run({"fixedpoint", "--weights", "1/3,1/3,1/3", "--kind", "banzhaf", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["states"].size() == 1);

    r = run({"fixedpoint", "--weights", "2,1,1", "--normalize"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "fixed point at state 2"));
  }

  TEST_CASE("family") {
    auto r = run({"family", "ab", "--k", "3", "--C", "1", "--banzhaf-check"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "1/3, 2/15 x5"));
    CHECK(has(r.out, "ss-fixed: yes"));
    CHECK(has(r.out, "banzhaf-fixed: yes"));

    r = run({"family", "aab", "--m", "8", "--solve", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    std::vector<std::string> bs;
    for (const auto& s : doc["solutions"]) bs.push_back(s["b"]);
    CHECK(bs == std::vector<std::string>{"13/180", "4/45", "1/9"});

    r = run({"family", "ab", "--k", "2", "--C", "1"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "invalid: 1/(2b) integer"));

    r = run({"family", "ab", "--k", "5", "--C", "1", "--parity", "even", "--format", "json"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["b"] == "4/55");
    CHECK(doc["ss_fixed"] == true);

    r = run({"family", "aab", "--m", "3", "--b", "2/15", "--denominator", "off-by-one", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["ss_fixed"] == false);
    r = run({"family", "aab", "--m", "3", "--b", "2/15", "--format", "json"});
    CHECK(json::parse(r.out)["ss_power_of_A"] == "3/10");
    r = run({"family", "aab", "--k", "2", "--parity", "even", "--format", "csv"});
    CHECK(r.out == "b\n2/15\n1/5\n");
    r = run({"family", "ab", "--m", "5", "--solve"});
    CHECK(has(r.out, "2/15"));
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "prop24", "--n", "12", "--p", "31", "--m", "37"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "PASS"));
    r = run({"verify", "conj23", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"] == true);
    r = run({"verify", "prop22census"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "(finding)"));
  }

  TEST_CASE("JSON output round-trips through the CLI") {
    const auto first = run({"index", "--weights", "1/3,2/15,2/15,2/15,2/15,2/15", "--quota", "1/2",
                            "--mode", "gt", "--format", "json"});
    REQUIRE(first.code == 0);
    const auto path = temp_file("powerindex_index.json", first.out);
    const auto second = run({"index", "--from-json", path, "--format", "json"});
    REQUIRE(second.code == 0);
    CHECK(second.out == first.out);

    const auto d = run({"divisor", "12", "--format", "json"});
    const auto dpath = temp_file("powerindex_divisor.json", d.out);
    const auto again = run({"index", "--from-json", dpath, "--format", "json"});
    REQUIRE(again.code == 0);
    const json a = json::parse(d.out), b = json::parse(again.out);
    CHECK(a["banzhaf"] == b["banzhaf"]);
    CHECK(a["ss"] == b["ss"]);

    const auto t = run({"fixedpoint", "--weights", "1/2,1/4,1/4", "--format", "json"});
    const auto tpath = temp_file("powerindex_trace.json", t.out);
    CHECK(run({"fixedpoint", "--from-json", tpath, "--format", "json"}).out == t.out);

    CHECK(run({"index", "--from-json", "/nonexistent/x.json"}).code == 2);
    CHECK(run({"index", "--from-json", temp_file("powerindex_bad.json", "{")}).code == 2);
  }
}
