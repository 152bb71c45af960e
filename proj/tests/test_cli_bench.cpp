#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plybasis/cli.hpp"
#include "plybasis/errors.hpp"
#include "plybasis/generators.hpp"
#include "plybasis/io.hpp"

using namespace plybasis;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "plybasis_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

int parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("graph format") {
  const Graph p3 = parse_graph("e 1 2\ne 2 3");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(parse_error_line("e 1 1") == 1);
  CHECK(parse_error_line("c hi\ne 1 2\ne 2 1\n") == 3);
  CHECK(parse_error_line("e 1 2\nx 3\n") == 2);
  CHECK(parse_error_line("e 1 two\n") == 1);
  CHECK(parse_error_line("p edge 2 1\ne 1 3\n") == 2);
  CHECK(parse_error_line("p edge 3 2\ne 1 2\n") != 0);

  const std::string messy = "c comment\np edge 4 3\ne 3 2\n\ne 4 1\ne 1 2\n";
  const std::string canonical = "p edge 4 3\ne 1 2\ne 1 4\ne 2 3\n";
  CHECK(emit_graph(parse_graph(messy)) == canonical);
  CHECK(emit_graph(parse_graph(canonical)) == canonical);
  CHECK(parse_graph("p edge 5 0\n").vertex_count() == 5);
}

TEST_CASE("decomposition and basis formats") {
  const PathDecomposition d = parse_decomposition("\n1\n1 2\nc note\n2 3\n", 3);
  CHECK(d.bags() == std::vector<std::vector<int>>{{}, {0}, {0, 1}, {1, 2}});
  CHECK(emit_decomposition(d) == "\n1\n1 2\n2 3\n");
  CHECK(parse_decomposition(emit_decomposition(d), 3) == d);
  CHECK_THROWS_AS(parse_decomposition("1 4\n", 3), ParseError);

  const GeneratingSet b = parse_basis("0 1 2\n\nc x\n2 3 4\n", 5);
  CHECK(b.size() == 2);
  CHECK(emit_basis(b) == "0 1 2\n2 3 4\n");
  CHECK_THROWS_AS(parse_basis("0 9\n", 5), ParseError);
  CHECK_THROWS_AS(parse_basis("1 1\n", 5), ParseError);
}

TEST_CASE("generators") {
  const Instance k4 = generate_complete(4);
  CHECK(cycle_rank(k4.graph) == 3);
  CHECK_FALSE(k4.decomposition.has_value());
  const Instance sq = generate_grid(2, 2);
  CHECK(sq.graph.edge_count() == 4);
  CHECK(is_cycle(sq.graph, sq.graph.all_edges()));
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const Instance ri = generate_random_interval(20, 3, s);
    REQUIRE(ri.decomposition.has_value());
    CHECK_FALSE(validate(ri.graph, *ri.decomposition).has_value());
    CHECK(ri.decomposition->width() <= 3);
    CHECK(component_count(ri.graph) == 1);

    const Instance cactus = generate_cactus(25, s);
    CHECK(component_count(cactus.graph) == 1);
    // a cactus: every edge lies on at most one cycle, so cycles are edge-disjoint
    CHECK(cycle_rank(cactus.graph) * 3 <= static_cast<int>(cycle_edges(cactus.graph, cactus.graph.all_edges()).count()));

    for (int glue : {1, 2}) {
      const Instance chain = generate_block_chain(5, BlockKind::Random, glue, s);
      CHECK_FALSE(validate(chain.graph, *chain.decomposition).has_value());
      CHECK(max_adhesion(*chain.decomposition) == glue);
    }
    const Instance adh = generate_random_adhesion(10, 4, s);
    CHECK_FALSE(validate(adh.graph, *adh.decomposition).has_value());
    CHECK(max_adhesion(*adh.decomposition) <= 4);
  }
  CHECK(generate_random_interval(12, 2, 9).graph.edges() == generate_random_interval(12, 2, 9).graph.edges());
}

TEST_CASE("cli: construct pw4t on C8 with an automatic decomposition") {
  const std::string g = write("c8.txt", emit_graph(make_cycle(8)));
  const Run r = run({"construct", "--graph", g, "--method", "pw4t", "--auto-pw"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "pw4t");
  CHECK(j["params"]["t"] == 2);
  CHECK(j["result"]["generating"] == true);
  CHECK(j["result"]["ply"].get<int>() <= 8);
  CHECK(j["result"]["wall_ms"] == 0);
  for (const auto& key : {"version", "instance", "method", "params", "result"}) CHECK(j.contains(key));
  for (const auto& key : {"n", "m", "t", "k", "b", "seed"}) CHECK(j["params"].contains(key));
  for (const auto& key : {"ply", "size", "generating", "audits", "wall_ms"}) CHECK(j["result"].contains(key));
}

TEST_CASE("cli: verify exit codes") {
  const Graph k4 = make_complete(4);
  const std::string g = write("k4.txt", emit_graph(k4));
  const std::string out_basis = (scratch_dir() / "k4.basis").string();
  REQUIRE(run({"construct", "--graph", g, "--method", "fundamental", "--basis-out", out_basis}).code == kExitOk);
  CHECK(run({"verify", "--graph", g, "--basis", out_basis}).code == kExitOk);

  // drop one element: rank 2 of 3
  std::string text = read_text_file(out_basis);
  text = text.substr(text.find('\n') + 1);
  const std::string broken = write("k4_broken.basis", text);
  const Run bad = run({"verify", "--graph", g, "--basis", broken});
  CHECK(bad.code == kExitAudit);
  CHECK(nlohmann::json::parse(bad.out)["result"]["generating"] == false);
  CHECK(run({"verify", "--graph", g, "--basis", out_basis, "--bound", "0"}).code == kExitAudit);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"construct", "--method", "pw4t"}).code == kExitUsage);
  CHECK(run({"construct", "--family", "cycle", "--n", "6", "--method", "pw4t"}).code == kExitUsage);
  CHECK(run({"construct", "--family", "cycle", "--n", "6", "--method", "bogus"}).code == kExitUsage);
  CHECK(run({"construct", "--family", "complete", "--n", "25", "--method", "pw4t", "--auto-pw"}).code == kExitUsage);
  CHECK(run({"construct", "--family", "random_adhesion", "--bags", "5", "--method", "adhesion"}).code == kExitUsage);
  const std::string loop = write("loop.txt", "e 1 1\n");
  const Run r = run({"construct", "--graph", loop, "--method", "fh"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(run({"verify", "--graph", "/nonexistent/graph", "--basis", "x"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli: adhesion, pw-exact, generate and bench") {
  const Run adh = run({"construct", "--family", "block_chain", "--kind", "k4", "--glue", "2", "--bags", "4", "--method",
                       "adhesion", "--k", "2", "--seed", "3"});
  REQUIRE(adh.code == kExitOk);
  const auto aj = nlohmann::json::parse(adh.out);
  CHECK(aj["params"]["k"] == 2);
  CHECK(aj["result"]["generating"] == true);

  const Run pw = run({"pw-exact", "--family", "grid", "--n", "3"});
  REQUIRE(pw.code == kExitOk);
  CHECK(nlohmann::json::parse(pw.out)["result"]["width"] == 3);

  const std::string gpath = (scratch_dir() / "gen.txt").string();
  const std::string dpath = (scratch_dir() / "gen.dec").string();
  REQUIRE(run({"generate", "--family", "random_interval", "--n", "15", "--t", "3", "--seed", "5", "--out", gpath,
               "--decomposition-out", dpath})
              .code == kExitOk);
  const Run fromfile = run({"construct", "--graph", gpath, "--decomposition", dpath, "--method", "pw4t"});
  CHECK(fromfile.code == kExitOk);
  CHECK(nlohmann::json::parse(fromfile.out)["params"]["t"].get<int>() <= 3);

  const Run bench = run({"bench", "--methods", "fh,maxply", "--family", "complete", "--n", "16", "--trials", "5"});
  REQUIRE(bench.code == kExitOk);
  const auto bj = nlohmann::json::parse(bench.out);
  CHECK(bj["result"]["methods"].contains("fh"));
  CHECK(bj["result"]["methods"]["maxply"]["histogram"].is_object());
}

TEST_CASE("cli: reports repeat byte for byte") {
  const std::vector<std::vector<std::string>> commands{
      {"construct", "--family", "random_interval", "--n", "20", "--t", "3", "--seed", "4", "--method", "pw4t",
       "--auto-pw", "--pw-cap", "20"},
      {"construct", "--family", "complete", "--n", "10", "--method", "fh", "--seed", "9"},
      {"bench", "--methods", "fh,maxply-randomized", "--family", "cactus", "--n", "30", "--trials", "4", "--seed", "2"},
  };
  for (const auto& c : commands) {
    const Run a = run(c), b = run(c), d = run(c);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == d.out);
  }
}
