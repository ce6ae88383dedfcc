#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "kgg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kgg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// A fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  Scratch() {
    static int counter = 0;
    dir = fs::temp_directory_path() / ("kgg_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

void gen(const Scratch& s, const std::string& name, std::vector<std::string> args) {
  args.insert(args.begin(), "gen");
  args.push_back("-o");
  args.push_back(s / name);
  REQUIRE(run(args).code == 0);
}

}  // namespace

TEST_CASE("gen and validate") {
  Scratch s;
  gen(s, "ckr.json", {"ckr", "--k", "2", "--R", "2"});
  gen(s, "nv.json", {"nv", "--k", "2", "--sizes", "2,2"});
  gen(s, "cu.json", {"cover", "--k", "2", "--sizes", "1,1", "--labelling", "uniform"});
  gen(s, "cm.json", {"cover", "--k", "2", "--sizes", "2,2", "--labelling", "mixed"});
  std::ofstream(s / "lab.json") << R"({"a1": 1, "b1": 0})";
  gen(s, "ce.json", {"cover", "--k", "2", "--sizes", "1,1", "--labelling", "explicit:" + (s / "lab.json")});

  const auto r = run({"validate", s / "ckr.json"});
  CHECK(r.code == 0);
  CHECK(r.out == "OK: rank 2, 3 vertices, 42 edges, 147 squares\n");
  for (const auto* name : {"nv.json", "cu.json", "cm.json", "ce.json"}) CHECK(run({"validate", s / name}).code == 0);

  const auto j = run({"--json", "validate", s / "nv.json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["squares"] == 4);

  // Output is byte-deterministic.
  CHECK(run({"gen", "ckr", "--k", "2", "--R", "2"}).out == slurp(s / "ckr.json"));
}

TEST_CASE("validate reports violations with exit 1") {
  Scratch s;
  std::ofstream(s / "broken.json") << R"({
    "rank": 2,
    "vertices": ["v"],
    "edges": [
      {"name": "a1", "color": 1, "range": "v", "source": "v"},
      {"name": "b1", "color": 2, "range": "v", "source": "v"}
    ],
    "squares": []
  })";
  const auto r = run({"validate", s / "broken.json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("MISSING") != std::string::npos);
  CHECK(r.out.find("FAILED") != std::string::npos);
}

TEST_CASE("parse errors and unknown commands exit 2") {
  Scratch s;
  std::ofstream(s / "junk.json") << "{ not json";
  CHECK(run({"validate", s / "junk.json"}).code == 2);
  CHECK(run({"validate", s / "missing.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"gen", "ckr", "--k", "0"}).code == 2);
  CHECK(run({"gen", "cover", "--k", "2", "--labelling", "sideways"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("homology") {
  Scratch s;
  gen(s, "ckr.json", {"ckr", "--k", "2", "--R", "2"});
  const auto r = run({"homology", s / "ckr.json"});
  CHECK(r.code == 0);
  CHECK(r.out == "H_0 = Z^2 (+) Z/2\nH_1 = Z^4 (+) Z/2\nH_2 = Z^2\n");
  const auto sc = run({"homology", "--shortcut", s / "ckr.json"});
  CHECK(sc.out == "H_0 = Z^2 (+) Z/2\nH_2 = Z^2\n");

  gen(s, "cu.json", {"cover", "--k", "2", "--sizes", "1,1", "--labelling", "uniform"});
  const auto j = run({"--json", "homology", s / "cu.json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["method"] == "evans");
  REQUIRE(doc["homology"].size() == 3);
  CHECK(doc["homology"][0]["free_rank"] == 0);
  CHECK(doc["homology"][0]["torsion"] == nlohmann::json::array({3}));
  CHECK(doc["homology"][2]["text"] == "0");
}

TEST_CASE("check") {
  Scratch s;
  gen(s, "ckr.json", {"ckr", "--k", "2", "--R", "1"});
  const auto c = run({"check", s / "ckr.json"});
  CHECK(c.code == 0);
  CHECK(c.out.find("verdict: SIMPLE") != std::string::npos);

  gen(s, "nsquare.json", {"nv", "--k", "2", "--sizes", "1,1"});
  const auto n = run({"check", s / "nsquare.json"});
  CHECK(n.code == 3);
  CHECK(n.out.find("aperiodicity: UNKNOWN_UP_TO_BOUND") != std::string::npos);
  CHECK(n.out.find("no witness:") != std::string::npos);

  gen(s, "zero.json", {"cover", "--k", "2", "--labelling", "zero"});
  const auto z = run({"--json", "check", s / "zero.json"});
  CHECK(z.code == 1);
  const auto doc = nlohmann::json::parse(z.out);
  CHECK(doc["cofinality"]["verdict"] == "FAILS");
  CHECK(doc["verdict"] == "FAILS");

  const auto b = run({"--json", "check", "--pair-bound", "1,0", "--witness-bound", "1,1", s / "nsquare.json"});
  CHECK(nlohmann::json::parse(b.out)["aperiodicity"]["pair_bound"] == "1,0");
  CHECK(run({"check", "--pair-bound", "1,2,3", s / "nsquare.json"}).code == 2);
}

TEST_CASE("group commands") {
  Scratch s;
  gen(s, "g.json", {"nv", "--k", "2", "--sizes", "2,2"});
  REQUIRE(run({"--seed", "5", "group", "random", s / "g.json", "--expansions", "3", "-o", s / "A.json"}).code == 0);
  REQUIRE(run({"--seed", "9", "group", "random", s / "g.json", "-o", s / "B.json"}).code == 0);
  // Same seed, same bytes.
  REQUIRE(run({"--seed", "5", "group", "random", s / "g.json", "--expansions", "3", "-o", s / "A2.json"}).code == 0);
  CHECK(slurp(s / "A.json") == slurp(s / "A2.json"));

  REQUIRE(run({"group", "refine", s / "A.json", "--degree", "3,3", "-o", s / "A_refined.json"}).code == 0);
  const auto eq = run({"group", "eq", s / "A.json", s / "A_refined.json"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "equal\n");

  REQUIRE(run({"group", "inv", s / "A.json", "-o", s / "Ainv.json"}).code == 0);
  REQUIRE(run({"group", "mul", s / "A.json", s / "Ainv.json", "-o", s / "AAinv.json"}).code == 0);
  std::ofstream(s / "id.json") << R"({"graph": "g.json", "pairs": [{"target": "v", "source": "v"}]})";
  CHECK(run({"group", "eq", s / "AAinv.json", s / "id.json"}).code == 0);
  CHECK(run({"--json", "group", "eq", s / "A.json", s / "id.json"}).out == "{\"equal\":false}\n");
  CHECK(run({"group", "eq", s / "A.json", s / "id.json"}).code == 1);

  REQUIRE(run({"group", "reduce", s / "A_refined.json", "-o", s / "A_reduced.json"}).code == 0);
  CHECK(run({"group", "eq", s / "A_reduced.json", s / "A.json"}).code == 0);

  std::ofstream(s / "swap.json") << R"({"graph": "g.json", "pairs": [{"target": "a2", "source": "a1"}, {"target": "a1", "source": "a2"}]})";
  const auto ap = run({"group", "apply", s / "swap.json", "--path", "a1,b2"});
  CHECK(ap.code == 0);
  CHECK(ap.out == "a2,b2\n");
  CHECK(run({"--json", "group", "apply", s / "swap.json", "--path", "a2"}).out == "{\"image\":\"a1\"}\n");
  CHECK(run({"group", "apply", s / "swap.json", "--path", "v"}).code == 2);
  CHECK(run({"--degree-cap", "2", "group", "refine", s / "swap.json", "--degree", "3,0"}).code == 2);

  std::ofstream(s / "bad.json") << R"({"graph": "g.json", "pairs": [{"target": "a1", "source": "a1"}]})";
  const auto bad = run({"group", "inv", s / "bad.json"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
}
