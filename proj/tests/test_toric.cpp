#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvd/corpus.hpp"
#include "gvd/decompose.hpp"
#include "gvd/parse.hpp"
#include "gvd/reference.hpp"
#include "gvd/toric.hpp"

using namespace gvd;

namespace {

Polynomial p(const std::string& s, const RingPtr& r) {
  return parse_polynomial(s, r);
}

// Kernel membership oracle: substitute every edge by the product of its
// endpoint variables and check the result is zero.
bool in_kernel(const Graph& g, const Polynomial& f) {
  RingPtr vring = make_ring(g.vertices());
  Polynomial image = Polynomial::zero(vring);
  for (const auto& t : f.terms()) {
    Polynomial part = Polynomial::constant(vring, t.c);
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      const GraphEdge& e = g.edges()[i];
      Polynomial prod = Polynomial::variable(vring, e.u) *
                        Polynomial::variable(vring, e.v);
      for (int k = 0; k < t.m.e[i]; ++k) part = part * prod;
    }
    image = image + part;
  }
  return image.is_zero();
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS(Graph::from_ends({"a"}, {{"e", {"a", "a"}}}));
  CHECK_THROWS(Graph::from_ends({"a", "b"},
                                {{"e", {"a", "b"}}, {"f", {"b", "a"}}}));
  CHECK_THROWS(Graph::from_ends({"a", "b"},
                                {{"e", {"a", "b"}}, {"e", {"a", "b"}}}));
  CHECK_THROWS(Graph::from_ends({"a", "a"}, {}));
}

TEST_CASE("bipartition and connectivity") {
  Graph c4 = reference::cycle_graph(4);
  CHECK(c4.is_bipartite());
  CHECK(c4.is_connected());
  Graph c5 = reference::cycle_graph(5);
  CHECK(!c5.is_bipartite());
  CHECK(reference::complete_bipartite(3, 3).is_bipartite());
}

TEST_CASE("simple cycle counts") {
  CHECK(reference::cycle_graph(4).simple_cycles().size() == 1);
  CHECK(reference::cycle_graph(6).simple_cycles().size() == 1);
  CHECK(reference::complete_bipartite(2, 3).simple_cycles().size() == 3);
  // 9 four-cycles plus 6 six-cycles
  CHECK(reference::complete_bipartite(3, 3).simple_cycles().size() == 15);
  // 36 + 96 + 72
  CHECK(reference::complete_bipartite(4, 4).simple_cycles().size() == 204);
}

TEST_CASE("toric ideal golden examples") {
  ToricIdealResult c4 = toric_ideal(reference::cycle_graph(4));
  CHECK(c4.certified);
  REQUIRE(c4.ideal.generators().size() == 1);
  const RingPtr& R = c4.ideal.ring();
  CHECK(ideals_equal(c4.ideal, Ideal(R, {p("e1*e3 - e2*e4", R)})));

  // A tree has no cycles.
  Graph path = Graph::from_ends(
      {"1", "2", "3"}, {{"e1", {"1", "2"}}, {"e2", {"2", "3"}}});
  CHECK(is_zero_ideal(toric_ideal(path).ideal));

  // Non-bipartite input needs a walk bound and is flagged.
  Graph c5 = reference::cycle_graph(5);
  CHECK_THROWS(toric_ideal(c5));
  ToricIdealResult r5 = toric_ideal(c5, 8);
  CHECK(!r5.certified);
  for (const auto& g : r5.ideal.generators()) CHECK(in_kernel(c5, g));
}

TEST_CASE("toric generators lie in the kernel") {
  Rng rng(73);
  for (int i = 0; i < 8; ++i) {
    Graph g = random_connected_bipartite(rng, 8);
    Ideal I = toric_ideal(g).ideal;
    for (const auto& f : I.generators()) CHECK(in_kernel(g, f));
  }
}

TEST_CASE("grd generators match the known universal basis") {
  for (int r = 3; r <= 4; ++r) {
    for (int d = 1; d <= 3; ++d) {
      Graph g = grd_graph(r, d);
      Ideal I = toric_ideal(g).ideal;
      const RingPtr& R = I.ring();
      std::vector<Polynomial> expected;
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
          expected.push_back(
              p("a" + std::to_string(i) + "*b" + std::to_string(j) + " - a" +
                    std::to_string(j) + "*b" + std::to_string(i),
                R));
      for (int i = 1; i <= d; ++i) {
        std::string even, odd;
        for (int k = 2; k <= 2 * r - 2; k += 2)
          even += "*e" + std::to_string(k);
        for (int k = 1; k <= 2 * r - 3; k += 2)
          odd += "*e" + std::to_string(k);
        expected.push_back(p("a" + std::to_string(i) + even + " - b" +
                                 std::to_string(i) + odd,
                             R));
      }
      CHECK(ideals_equal(I, Ideal(R, expected)));
    }
  }
}

TEST_CASE("edge split golden examples") {
  // Any edge of the 4-cycle: N = 0, C = the opposite-edge monomial.
  Graph c4 = reference::cycle_graph(4);
  EdgeSplitResult s = edge_split(c4, "e1");
  CHECK(is_zero_ideal(s.N));
  REQUIRE(s.m_monomials.size() == 1);
  CHECK(to_string(s.m_monomials[0]) == "e3");

  // A leaf edge lies on no cycle: C = N.
  Graph leafy = Graph::from_ends({"1", "2", "3", "4", "5"},
                                 {{"e1", {"1", "2"}},
                                  {"e2", {"2", "3"}},
                                  {"e3", {"3", "4"}},
                                  {"e4", {"4", "1"}},
                                  {"e5", {"4", "5"}}});
  EdgeSplitResult ls = edge_split(leafy, "e5");
  CHECK(ls.m_monomials.empty());
  CHECK(ideals_equal(ls.N, ls.C));

  // Ferrers split at the last edge: the cycle monomials are exactly the
  // grid variables north-west of it.
  std::vector<int> lambda{3, 3, 3, 2};
  Graph t = ferrers_graph(lambda);
  EdgeSplitResult fs = edge_split(t, "e4_2");
  const RingPtr& R = fs.C.ring();
  std::vector<Polynomial> expected;
  for (int i = 1; i <= 3; ++i)
    expected.push_back(p("e" + std::to_string(i) + "_1", R));
  Ideal m_ideal(R, expected);
  Ideal got(R, fs.m_monomials);
  CHECK(ideals_equal(got, m_ideal));

  CHECK_THROWS(edge_split(c4, "nope"));
  CHECK_THROWS(edge_split(reference::cycle_graph(5), "e1"));
}

TEST_CASE("edge split agrees with the decomposition engine") {
  Rng rng(79);
  std::vector<Graph> graphs{reference::cycle_graph(4),
                            reference::complete_bipartite(2, 3),
                            random_connected_bipartite(rng, 7)};
  for (const auto& g : graphs) {
    Ideal I = toric_ideal(g).ideal;
    for (const auto& edge : g.edges()) {
      EdgeSplitResult structural = edge_split(g, edge.label);
      GVDSplit split = one_step_split(I, *g.edge_index(edge.label));
      CHECK(split.valid);
      CHECK(ideals_equal(structural.N, split.N));
      CHECK(ideals_equal(structural.C, split.C));
    }
  }
}

TEST_CASE("ferrers graphs") {
  Graph t = ferrers_graph({3, 3, 3, 2});
  CHECK(t.vertex_count() == 7);
  CHECK(t.edge_count() == 11);
  CHECK(t.is_bipartite());
  CHECK(t.is_connected());

  // Constant partitions give complete bipartite graphs.
  Graph k23 = ferrers_graph({3, 3});
  CHECK(k23.edge_count() == 6);
  CHECK(k23.simple_cycles().size() ==
        reference::complete_bipartite(2, 3).simple_cycles().size());

  Graph single = ferrers_graph({1});
  CHECK(single.edge_count() == 1);

  CHECK_THROWS(ferrers_graph({}));
  CHECK_THROWS(ferrers_graph({2, 3}));
  CHECK_THROWS(ferrers_graph({2, 0}));
}

TEST_CASE("ferrers invariants golden examples") {
  InvariantReport r = ferrers_invariants({3, 3, 3, 2});
  CHECK(*r.reg == 2);

  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      CHECK(*ferrers_invariants(std::vector<int>(n, m)).reg ==
            std::min(n, m) - 1);

  InvariantReport k22 = ferrers_invariants({2, 2});
  CHECK(k22.e == 2);
  CHECK(k22.a == -2);

  // reg 0 when n = 1 or the second part is 1.
  CHECK(*ferrers_invariants({5}).reg == 0);
  CHECK(*ferrers_invariants({4, 1, 1}).reg == 0);
}

TEST_CASE("ferrers closed form satisfies its own recursion") {
  // reg(lambda) = max{reg(lambda''), reg(lambda') + 1} with lambda'' the
  // partition with the last corner removed and lambda' the shifted one.
  auto check = [](std::vector<int> lambda) {
    const int n = static_cast<int>(lambda.size());
    if (n < 2 || lambda[1] < 2 || lambda[n - 1] < 2) return;
    std::vector<int> down = lambda;
    down[n - 1] -= 1;
    std::vector<int> shifted;
    for (int i = 0; i + 1 < n; ++i) {
      int v = lambda[i] - lambda[n - 1] + 1;
      if (v >= 1) shifted.push_back(v);
    }
    int expected = *ferrers_invariants(down).reg;
    if (!shifted.empty())
      expected = std::max(expected, *ferrers_invariants(shifted).reg + 1);
    CHECK(*ferrers_invariants(lambda).reg == expected);
  };
  check({3, 3, 3, 2});
  check({4, 4, 3, 2});
  check({3, 3, 3, 3});
  check({2, 2});
  check({4, 3, 2, 2});
}

TEST_CASE("glue cycle construction") {
  Graph g = reference::cycle_graph(4);
  Graph h = glue_cycle(g, "e1", 4);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 7);
  CHECK(h.is_bipartite());
  CHECK_THROWS(glue_cycle(g, "e1", 5));
  CHECK_THROWS(glue_cycle(g, "e1", 2));
  CHECK_THROWS(glue_cycle(g, "zz", 4));
}

TEST_CASE("grd graph shape") {
  Graph g = grd_graph(6, 5);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 2 * 5 + 2 * 6 - 2);
  CHECK(g.is_bipartite());

  // G_{r,1} is the cycle C_{2r}.
  Graph c = grd_graph(4, 1);
  CHECK(c.vertex_count() == 8);
  CHECK(c.edge_count() == 8);
  for (int v = 0; v < c.vertex_count(); ++v) CHECK(c.degree(v) == 2);
  CHECK(c.is_connected());
  CHECK(c.simple_cycles().size() == 1);

  CHECK_THROWS(grd_graph(2, 1));
  CHECK_THROWS(grd_graph(3, 0));
}

TEST_CASE("bipartite a-invariant shortcut") {
  CHECK(bipartite_a(reference::complete_bipartite(2, 2), 1) == -2);
  for (int r = 3; r <= 4; ++r)
    for (int d = 1; d <= 2; ++d)
      CHECK(bipartite_a(grd_graph(r, d), r - 1) == 1 - d - r);
  CHECK_THROWS(bipartite_a(reference::cycle_graph(5), 0));
}

TEST_CASE("chordal bipartite detection") {
  CHECK(is_chordal_bipartite(ferrers_graph({3, 3, 3, 2})));
  CHECK(is_chordal_bipartite(ferrers_graph({4, 4, 4, 4})));
  CHECK(is_chordal_bipartite(reference::cycle_graph(4)));
  CHECK(!is_chordal_bipartite(reference::cycle_graph(6)));
}

TEST_CASE("leaf stripping") {
  Graph leafy = Graph::from_ends({"1", "2", "3", "4", "5", "6"},
                                 {{"e1", {"1", "2"}},
                                  {"e2", {"2", "3"}},
                                  {"e3", {"3", "4"}},
                                  {"e4", {"4", "1"}},
                                  {"e5", {"4", "5"}},
                                  {"e6", {"5", "6"}}});
  StripResult s = strip_leaves(leafy);
  CHECK(s.removed_edges == std::vector<std::string>{"e6", "e5"});
  CHECK(s.graph.edge_count() == 4);
  CHECK(s.graph.vertex_count() == 4);

  // Stripping does not change reg or e; dim and a shift by one per edge.
  ToricInvariantsResult full = toric_invariants(leafy);
  ToricInvariantsResult bare = toric_invariants(s.graph);
  CHECK(full.report.reg == bare.report.reg);
  CHECK(full.report.e == bare.report.e);
  CHECK(full.report.a == bare.report.a - 2);
  CHECK(full.report.dim == bare.report.dim + 2);
}

TEST_CASE("subgraph monotonicity sample") {
  Rng rng(83);
  Graph g = random_connected_bipartite(rng, 7);
  Ideal ig = toric_ideal(g).ideal;
  InvariantReport big = invariants_direct(ig, CmStatus::Certified);
  for (const auto& e : g.edges()) {
    EdgeSplitResult es = edge_split(g, e.label);
    InvariantReport sub = invariants_direct(es.N, CmStatus::Certified);
    CHECK(*sub.reg <= *big.reg);
    CHECK(sub.e <= big.e);
    CHECK(sub.a <= big.a);
    // The drop is strict when the edge lies on a cycle (the split at the
    // edge variable is then nondegenerate); deleting a bridge leaves the
    // ideal untouched.
    if (!es.m_monomials.empty()) CHECK(sub.a <= big.a - 1);
  }
}

TEST_CASE("toric invariants report") {
  ToricInvariantsResult c4 = toric_invariants(reference::cycle_graph(4));
  CHECK(*c4.report.reg == 1);
  CHECK(c4.report.e == 2);
  CHECK(c4.report.a == -2);
  CHECK(c4.report.dim == 3);
  CHECK(c4.report.hilbertian == HilbertianClass::Hilbertian);
  CHECK(c4.generators_certified);
}

TEST_CASE("regularity and a-invariant bounds after leaf stripping") {
  Rng rng(89);
  for (int i = 0; i < 10; ++i) {
    Graph raw = random_connected_bipartite(rng, 8);
    StripResult s = strip_leaves(raw);
    const Graph& g = s.graph;
    if (g.edge_count() == 0) continue;
    auto colors = g.bipartition();
    REQUIRE(colors);
    int n = 0, m = 0;
    for (int c : *colors) (c == 0 ? n : m) += 1;
    ToricInvariantsResult ti = toric_invariants(g);
    CHECK(*ti.report.reg + 1 <= std::min(n, m));
    CHECK(ti.report.a <= std::min(-n, -m));
  }
}
