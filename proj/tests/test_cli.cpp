#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gvd/cli.hpp"
#include "gvd/json_io.hpp"
#include "gvd/reference.hpp"

using namespace gvd;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

struct TempFiles {
  std::vector<std::string> paths;
  std::string add(const std::string& name, const std::string& content) {
    paths.push_back(write_temp(name, content));
    return paths.back();
  }
  ~TempFiles() {
    for (const auto& p : paths) std::remove(p.c_str());
  }
};

}  // namespace

TEST_CASE("json round trips") {
  Ideal I = reference::decomposable_demo();
  Ideal I2 = ideal_from_json(ideal_to_json(I));
  CHECK(ideals_equal(I, map_to_ring(I2, I.ring())));

  Graph g = grd_graph(3, 2);
  Graph g2 = graph_from_json(graph_to_json(g));
  CHECK(g2.vertex_count() == g.vertex_count());
  CHECK(g2.edge_count() == g.edge_count());
  CHECK(graph_to_json(g2) == graph_to_json(g));

  SimplicialComplex c = reference::triangle_complex();
  SimplicialComplex c2 = complex_from_json(complex_to_json(c));
  CHECK(complex_to_json(c2) == complex_to_json(c));
}

TEST_CASE("report serialization is deterministic") {
  InvariantReport a =
      invariants_direct(reference::decomposable_demo(), CmStatus::Certified);
  InvariantReport b =
      invariants_direct(reference::decomposable_demo(), CmStatus::Certified);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());

  GVDTree ta = is_gvd(reference::decomposable_demo());
  GVDTree tb = is_gvd(reference::decomposable_demo());
  CHECK(tree_to_json(ta).dump() == tree_to_json(tb).dump());
}

TEST_CASE("cli exit codes") {
  TempFiles tmp;
  std::string pair = tmp.add(
      "pair.json",
      R"({"ring": ["x","y","z","w"], "generators": ["y*z - x*w", "x*y"]})");

  CHECK(run_cli({"invariants", pair, "--assume-cm"}) == 0);
  CHECK(run_cli({"gvd", "check", pair, "--expect", "not-gvd"}) == 0);
  CHECK(run_cli({"gvd", "check", pair, "--expect", "gvd"}) == 1);
  CHECK(run_cli({"gvd", "invariants", pair, "--assume-cm"}) == 0);
  CHECK(run_cli({"gvd", "c-saturated", pair}) == 0);

  CHECK(run_cli({"invariants", "no_such_file.json"}) == 2);
  std::string broken = tmp.add("broken.json", "{not json");
  CHECK(run_cli({"invariants", broken}) == 2);
  std::string badvar = tmp.add(
      "badvar.json", R"({"ring": ["x"], "generators": ["x*q"]})");
  CHECK(run_cli({"invariants", badvar}) == 2);
  std::string unit = tmp.add(
      "unit.json", R"({"ring": ["x"], "generators": ["1"]})");
  CHECK(run_cli({"invariants", unit}) == 2);
}

TEST_CASE("cli graph and complex commands") {
  TempFiles tmp;
  Json c4 = graph_to_json(reference::cycle_graph(4));
  std::string graph = tmp.add("c4.json", c4.dump());
  CHECK(run_cli({"toric", "build", graph, "--invariants", "--json"}) == 0);
  CHECK(run_cli({"glue", "--graph", graph, "--edge", "e1", "--cycle", "4"}) ==
        0);
  CHECK(run_cli({"glue", "--graph", graph, "--edge", "e1", "--cycle", "3"}) ==
        2);

  CHECK(run_cli({"ferrers", "--partition", "3,3,3,2", "--verify-direct"}) ==
        0);
  CHECK(run_cli({"ferrers", "--partition", "2,3"}) == 2);
  CHECK(run_cli({"grd", "--r", "3", "--d", "2", "--verify-direct"}) == 0);
  CHECK(run_cli({"grd", "--r", "2", "--d", "2"}) == 2);

  Json tri = complex_to_json(reference::triangle_complex());
  std::string complex = tmp.add("tri.json", tri.dump());
  CHECK(run_cli({"sr", "invariants", complex, "--json"}) == 0);
  CHECK(run_cli({"sr", "vd-check", complex, "--expect", "vd"}) == 0);
  CHECK(run_cli({"sr", "vd-check", complex, "--expect", "not-vd"}) == 1);

  Json rp = complex_to_json(reference::projective_plane_six());
  std::string rp_path = tmp.add("rp.json", rp.dump());
  CHECK(run_cli({"sr", "vd-check", rp_path, "--expect", "not-vd"}) == 0);

  // Non-bipartite toric input without a walk bound is an input error.
  Json c5 = graph_to_json(reference::cycle_graph(5));
  std::string c5_path = tmp.add("c5.json", c5.dump());
  CHECK(run_cli({"toric", "build", c5_path}) == 2);
  CHECK(run_cli({"toric", "build", c5_path, "--walk-bound", "8"}) == 0);
}

TEST_CASE("verify-paper subset through the cli") {
  CHECK(run_cli({"verify-paper", "--only", "01", "--json"}) == 0);
}

TEST_CASE("verify-paper accepts worker threads") {
  CHECK(run_cli({"verify-paper", "--only", "01", "--threads", "2"}) == 0);
}
