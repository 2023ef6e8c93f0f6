#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "nlohmann/json.hpp"
#include "nodebal/cli.h"
#include "nodebal/instance.h"
#include "test_support.h"

using namespace nodebal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "nodebal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("nodebal_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const char* kPuzzle =
    "# six boxes\ngraph 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 0\n"
    "w 0 1\nw 1 2\nw 2 3\nw 3 4\nw 4 5\nw 5 6\n";
const char* kTriangle = "graph 3\ne 0 1\ne 1 2\ne 0 2\nw 0 1\n";

}  // namespace

TEST_CASE("equate golden outputs") {
  Scratch s;
  Outcome puzzle = run({"equate", s.write("puzzle_c6.txt", kPuzzle)});
  CHECK(puzzle.code == kExitOk);
  CHECK(puzzle.out ==
        "{\"equatable\":false,\"beta\":null,\"plan\":null,\"certificate\":{\"type\":\"parity\"}}\n");

  Outcome k3 = run({"equate", s.write("k3_100.txt", kTriangle)});
  CHECK(k3.code == kExitOk);
  CHECK(k3.out ==
        "{\"equatable\":true,\"beta\":1,\"plan\":[{\"edge\":[1,2],\"count\":1}],\"certificate\":null}\n");
  CHECK(k3.err.empty());
}

TEST_CASE("equate certificate output") {
  Scratch s;
  Outcome p3 = run({"equate", s.write("p3.txt", "graph 3\ne 0 1\ne 1 2\nw 1 1\n")});
  REQUIRE(p3.code == kExitOk);
  const auto doc = p3.json();
  CHECK(doc["equatable"] == false);
  CHECK(doc["certificate"]["type"] == "tutte");
  CHECK(doc["certificate"]["U"] == nlohmann::json::array({1}));
  CHECK(doc["certificate"]["isolated"] == nlohmann::json::array({0, 2}));
  CHECK(doc["certificate"]["parity"] == "odd");

  Outcome p4 = run({"equate", s.write("p4.txt", "graph 4\ne 0 1\ne 1 2\ne 2 3\nw 0 2\n")});
  const auto both = p4.json();
  CHECK(both["certificate"]["type"] == "tutte_per_parity");
  CHECK(both["certificate"]["even"]["type"] == "tutte");
  CHECK(both["certificate"]["odd"]["deficiency"].get<int>() >= 1);
}

TEST_CASE("missing files and malformed input") {
  Scratch s;
  Outcome missing = run({"equate", s.path("nosuchfile.txt")});
  CHECK(missing.code == kExitParse);
  CHECK(missing.out.empty());
  CHECK_FALSE(missing.err.empty());

  Outcome loop = run({"equate", s.write("loop.txt", "graph 2\ne 0 0\n")});
  CHECK(loop.code == kExitParse);
  CHECK(loop.out.empty());
  CHECK(loop.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors") {
  Scratch s;
  const std::string file = s.write("k3.txt", kTriangle);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"equate"}).code == kExitUsage);
  CHECK(run({"oracle", "backtrack", file}).code == kExitUsage);
  CHECK(run({"equate", file, "--max-copies", "many"}).code == kExitUsage);
  Outcome hyper = run({"equate", s.write("h.txt", "graph 3\nh 0 1 2\n")});
  CHECK(hyper.code == kExitUsage);
  CHECK(hyper.out.empty());
  Outcome help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("equate") != std::string::npos);
}

TEST_CASE("budget errors") {
  Scratch s;
  const std::string file = s.write("k3.txt", "graph 3\ne 0 1\ne 1 2\ne 0 2\nw 0 50\n");
  Outcome tight = run({"equate", file, "--max-copies", "10"});
  CHECK(tight.code == kExitBudget);
  CHECK(tight.out.empty());
  Outcome span = run({"oracle", "backtrack", file, "--beta", "50"});
  CHECK(span.code == kExitBudget);
}

TEST_CASE("seed is accepted and ignored") {
  Scratch s;
  const std::string file = s.write("k3.txt", kTriangle);
  CHECK(run({"--seed", "7", "equate", file}).out == run({"equate", file}).out);
  CHECK(run({"equate", file, "--seed", "9"}).out == run({"equate", file}).out);
}

TEST_CASE("classify output") {
  Scratch s;
  Outcome k3 = run({"classify", s.write("k3.txt", kTriangle)});
  REQUIRE(k3.code == kExitOk);
  CHECK(k3.json()["universal_equatable"] == true);
  Outcome p3 = run({"classify", s.write("p3.txt", "graph 3\ne 0 1\ne 1 2\n")});
  const auto doc = p3.json();
  CHECK(doc["universal_equatable"] == false);
  CHECK(doc["reason"] == "isolated_condition");
  CHECK(doc["U"] == nlohmann::json::array({1}));
  CHECK(doc["isolated"] == nlohmann::json::array({0, 2}));
  CHECK(run({"classify", s.write("c4.txt", "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n")}).json()["reason"] ==
        "even_order");
}

TEST_CASE("bipartite output") {
  Scratch s;
  const auto c6 = run({"bipartite", s.write("c6.txt", kPuzzle)}).json();
  CHECK(c6["bipartite"] == true);
  CHECK(c6["L"] == nlohmann::json::array({0, 2, 4}));
  CHECK(c6["strict_hall"] == true);
  CHECK(c6["balanced"] == false);

  const auto p4 = run({"bipartite", s.write("p4.txt", "graph 4\ne 0 1\ne 1 2\ne 2 3\n")}).json();
  CHECK(p4["strict_hall"] == false);
  CHECK(p4["witness_assignment"].is_array());

  const auto k3 = run({"bipartite", s.write("k3.txt", kTriangle)}).json();
  CHECK(k3["bipartite"] == false);
}

TEST_CASE("hyper-equate output") {
  Scratch s;
  const std::string file = s.write("h.txt", "graph 6\nh 0 1 2\ne 3 4\ne 4 5\nw 3 1\nw 4 1\nw 5 1\n");
  Outcome r = run({"hyper-equate", file});
  REQUIRE(r.code == kExitOk);
  const auto doc = r.json();
  CHECK(doc["equatable"] == true);
  CHECK(doc["beta"] == 1);
  CHECK(doc["plan"] == nlohmann::json::parse(R"([{"edge":[0,1,2],"count":1}])"));
  CHECK(run({"hyper-equate", file, "--beta-cap", "0"}).code == kExitUsage);

  const auto c6 = run({"hyper-equate", s.write("c6.txt", kPuzzle)}).json();
  CHECK(c6["equatable"] == false);
  CHECK(c6["proof"] == "divisibility");
}

TEST_CASE("reduce writes a parseable instance") {
  Scratch s;
  const std::string out_file = s.path("reduced.txt");
  Outcome r = run({"reduce", s.write("h0.txt", "graph 3\nh 0 1 2\n"), "-o", out_file});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()["gadget"] == nlohmann::json::array({3, 4, 5}));
  Instance reduced = read_instance_file(out_file);
  REQUIRE(reduced.is_hypergraph());
  CHECK(reduced.weights == WeightAssignment{0, 0, 0, 1, 1, 1});
  Outcome solved = run({"hyper-equate", out_file});
  CHECK(solved.json()["beta"] == 1);
  CHECK(run({"reduce", s.path("h0.txt"), "-o", s.path("missing_dir/x.txt")}).code == kExitUsage);
}

TEST_CASE("oracle subcommands") {
  Scratch s;
  const std::string k3 = s.write("k3.txt", kTriangle);
  CHECK(run({"oracle", "min-beta", k3}).out == "{\"beta\":1}\n");
  CHECK(run({"oracle", "backtrack", k3, "--beta", "1"}).out ==
        "{\"beta\":1,\"feasible\":true,\"plan\":[{\"edge\":[1,2],\"count\":1}]}\n");
  CHECK(run({"oracle", "backtrack", k3, "--beta", "2"}).json()["feasible"] == false);
  CHECK(run({"oracle", "backtrack", k3, "--beta", "0"}).code == kExitUsage);
  CHECK(run({"oracle"}).code == kExitUsage);
}

TEST_CASE("verify replays plans") {
  Scratch s;
  const std::string k3 = s.write("k3.txt", kTriangle);
  const std::string plan = s.write("plan.json", run({"equate", k3}).out);
  const auto doc = run({"verify", k3, "--plan", plan}).json();
  CHECK(doc["uniform"] == true);
  CHECK(doc["beta"] == 1);
  CHECK(doc["steps"] == 1);
  CHECK(doc["claimed_beta_matches"] == true);

  const std::string bare = s.write("bare.json", R"([{"edge":[0,1],"count":2}])");
  const auto partial = run({"verify", k3, "--plan", bare}).json();
  CHECK(partial["uniform"] == false);
  CHECK(partial["final_weights"] == nlohmann::json::array({3, 2, 0}));
  CHECK(partial["claimed_beta_matches"].is_null());

  CHECK(run({"verify", k3, "--plan", s.write("bad.json", "{ nope")}).code == kExitParse);
  CHECK(run({"verify", k3, "--plan", s.write("edge.json", R"([{"edge":[0,5],"count":1}])")}).code ==
        kExitParse);
  CHECK(run({"verify", k3, "--plan", s.path("none.json")}).code == kExitParse);
}

TEST_CASE("property: equate output is deterministic and passes verify") {
  Scratch s;
  testing::Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Instance inst{testing::random_connected_graph(rng, n, static_cast<int>(rng() % 5)),
                  testing::random_weights(rng, n, 6)};
    const std::string file = s.write("i.txt", serialize_instance(inst));
    Outcome first = run({"equate", file});
    REQUIRE(first.code == kExitOk);
    CHECK(first.out == run({"equate", file}).out);
    if (first.json()["equatable"] == true) {
      const std::string plan = s.write("p.json", first.out);
      const auto v = run({"verify", file, "--plan", plan}).json();
      CHECK(v["uniform"] == true);
      CHECK(v["claimed_beta_matches"] == true);
    }
  }
}
