#include <cstdio>   // for remove
#include <fstream>  // for ifstream
#include <sstream>  // for ostringstream
#include <string>   // for string
#include <vector>   // for vector

#include "catch2/catch_amalgamated.hpp"
#include "json.hpp"

#include "malcev/cli.hpp"

using json = nlohmann::json;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "malcev");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = malcev::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    auto const r = run(args);
    auto doc     = json::parse(r.out);
    REQUIRE(doc.contains("command"));
    REQUIRE(doc.contains("n"));
    REQUIRE(doc.contains("result"));
    REQUIRE(doc["violations"].is_array());
    return doc;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      file(path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
}  // namespace

TEST_CASE("cli: gen", "[cli]") {
  auto const r = run({"gen", "-n", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("generators (8): a b c d A1 B1 C1 D1") != std::string::npos);
  REQUIRE(r.out.find("  d a = A1 C1\n  A1 D1 = d b\n  c b = B1 D1\n")
          != std::string::npos);

  auto const doc = run_json({"gen", "-n", "5"});
  REQUIRE(doc["command"] == "gen");
  REQUIRE(doc["n"] == 5);
  REQUIRE(doc["result"]["generators"].size() == 24);
  REQUIRE(doc["result"]["relations"].size() == 11);
}

TEST_CASE("cli: nf and eq", "[cli]") {
  auto const r = run({"nf", "-n", "2", "-w", "a b a C2 d b c A1 B1 D1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "a b a C2 A2 D2 c A1 B2 C2\n");
  REQUIRE(run({"nf", "-n", "1", "-w", "1"}).out == "1\n");

  auto const no = run({"eq", "-n", "1", "-w", "c a", "-w", "B1 C1"});
  REQUIRE(no.code == 1);
  REQUIRE(no.out == "false\n");
  auto const yes = run({"eq", "-n", "1", "-w", "d a", "-w", "A1 C1"});
  REQUIRE(yes.code == 0);
  REQUIRE(yes.out == "true\n");

  auto const doc = run_json({"eq", "-n", "1", "-w", "d a", "-w", "A1 C1"});
  REQUIRE(doc["result"]["equal"] == true);
  REQUIRE(doc["result"]["normal_forms"] == json({"d a", "d a"}));
}

TEST_CASE("cli: divides and intersect", "[cli]") {
  auto const r = run({"divides", "-n", "1", "-p", "d", "-q", "A1 C1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "a\n");
  auto const none = run({"divides", "-n", "1", "-p", "a", "-q", "b a"});
  REQUIRE(none.code == 1);
  REQUIRE(none.out == "none\n");

  auto const i1 = run({"intersect", "-n", "1", "-p", "A1", "-q", "d"});
  REQUIRE(i1.code == 0);
  REQUIRE(i1.out == "Generators: \"d a\", \"A1 D1\"\nprovenance: base-search\n");
  auto const i2 = run({"intersect", "-n", "2", "-p", "A1", "-q", "d"});
  REQUIRE(i2.out == "Principal: \"d a\"\nprovenance: base-search\n");
  auto const i3 = run({"intersect", "-n", "1", "-p", "a", "-q", "b"});
  REQUIRE(i3.out == "Empty\nprovenance: base-search\n");

  auto const doc = run_json({"intersect", "-n", "1", "-p", "A1", "-q", "d"});
  REQUIRE(doc["result"]["kind"] == "Generators");
  REQUIRE(doc["result"]["generators"] == json({"d a", "A1 D1"}));
}

TEST_CASE("cli: ball", "[cli]") {
  auto const r = run({"ball", "-n", "1", "--radius", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("vertices: 9\nedges: 8\n") != std::string::npos);

  auto const path = std::string("test-cli-ball.dot");
  auto const w    = run({"ball", "-n", "1", "--radius", "2", "--dot", path});
  REQUIRE(w.code == 0);
  auto const dot = slurp(path);
  std::remove(path.c_str());
  REQUIRE(dot.rfind("digraph cayley {", 0) == 0);
  REQUIRE(dot.find("\"A1\" -> \"d.a\" [label=\"C1\"];") != std::string::npos);

  auto const to_stdout
      = run({"ball", "-n", "2", "--radius", "0", "--root", "d a", "--dot", "-"});
  REQUIRE(to_stdout.out.find("digraph cayley {\n  \"d.a\";\n}\n")
          != std::string::npos);

  auto const doc = run_json({"ball", "-n", "1", "--radius", "1"});
  REQUIRE(doc["result"]["vertices"].size() == 9);
  REQUIRE(doc["result"]["edges"].size() == 8);
}

TEST_CASE("cli: verify", "[cli]") {
  for (auto suite : {"nf-oracle", "cancellative", "codet", "indegree"}) {
    auto const r = run({"verify", "-n", "1", "--suite", suite, "--max-len", "2"});
    CAPTURE(suite, r.out);
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("violations: 0") != std::string::npos);
  }
  auto const doc = run_json({"verify", "-n", "1", "--suite", "alignment",
                             "--max-len", "1", "--samples", "10", "--seed", "3"});
  REQUIRE(doc["command"] == "verify");
  REQUIRE(doc["result"]["max_generators"] == 2);
  REQUIRE(doc["result"]["oracle_pairs"] == 10);
  REQUIRE(doc["result"]["seed"] == 3);
  REQUIRE(doc["violations"].empty());

  auto const again = run_json({"verify", "-n", "1", "--suite", "alignment",
                               "--max-len", "1", "--samples", "10", "--seed", "3"});
  REQUIRE(again == doc);

  auto const bad_window = run({"verify", "-n", "1", "--suite", "alignment",
                               "--max-len", "2", "--window", "2"});
  REQUIRE(bad_window.code == 2);
}

TEST_CASE("cli: obstruct", "[cli]") {
  auto const r = run({"obstruct", "-n", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("1. insert b b^-1 at 1: c a  =>  c b b^-1 a")
          != std::string::npos);
  REQUIRE(r.out.find("7. cancel at 1: B1 A1^-1 A1 C1  =>  B1 C1")
          != std::string::npos);
  auto const doc = run_json({"obstruct", "-n", "4"});
  REQUIRE(doc["result"]["steps"].size() == 19);
  REQUIRE(doc["result"]["monoid_witness"] == json({"c a", "B1 C1"}));
}

TEST_CASE("cli: presentation files and --out", "[cli]") {
  auto const pres_path = std::string("test-cli-pres.txt");
  {
    std::ofstream file(pres_path);
    file << "# single relation\nd a = A1 C1\n";
  }
  auto const r = run({"nf", "--pres", pres_path, "-w", "A1 C1 A1 C1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "d a d a\n");

  auto const out_path = std::string("test-cli-out.json");
  auto const w = run({"nf", "-n", "1", "-w", "d b", "--format", "json", "--out",
                      out_path});
  REQUIRE(w.code == 0);
  REQUIRE(w.out.empty());
  auto const doc = json::parse(slurp(out_path));
  REQUIRE(doc["result"]["normal_form"] == "A1 D1");
  std::remove(out_path.c_str());

  {
    std::ofstream file(pres_path);
    file << "a b = b a\n";
  }
  auto const bad = run({"nf", "--pres", pres_path, "-w", "a b"});
  REQUIRE(bad.code == 2);
  REQUIRE(bad.err.find("PQOverlap") != std::string::npos);
  std::remove(pres_path.c_str());
}

TEST_CASE("cli: usage errors", "[cli]") {
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({"nf", "-n", "0", "-w", "a"}).code == 2);
  REQUIRE(run({"nf", "-n", "2", "-w", "A3"}).code == 2);
  REQUIRE(run({"nf", "-n", "2", "-w", "x"}).code == 2);
  REQUIRE(run({"eq", "-n", "2", "-w", "a"}).code == 2);
  REQUIRE(run({"verify", "-n", "2", "--suite", "nope", "--max-len", "2"}).code
          == 2);
  REQUIRE(run({"--help"}).code == 0);
}
