#ifndef GVD_TORIC_HPP
#define GVD_TORIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "gvd/hilbert.hpp"

namespace gvd {

struct GraphEdge {
  std::string label;
  int u = -1;
  int v = -1;
};

// Finite simple graph with labelled edges; the labels become the variables
// of the edge ring K[E] in list order.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<GraphEdge> edges);

  static Graph from_ends(
      std::vector<std::string> vertices,
      const std::vector<std::pair<std::string,
                                  std::pair<std::string, std::string>>>&
          labelled_ends);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int vertex_index(const std::string& name) const;
  std::optional<int> edge_index(const std::string& label) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  std::optional<std::vector<int>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }
  bool is_connected() const;  // ignoring isolated vertices

  // Every simple cycle exactly once, as a cyclic edge-index sequence.
  std::vector<std::vector<int>> simple_cycles() const;

  RingPtr edge_ring() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
};

// Alternating-product binomial of a closed even walk.
Polynomial cycle_binomial(const std::vector<int>& cycle_edges,
                          const RingPtr& ring);

struct ToricIdealResult {
  Ideal ideal;
  // Bipartite graphs get the full even-cycle generating set; non-bipartite
  // input falls back to bounded closed even walks and is not certified.
  bool certified = false;
};

// Generators f_Gamma over all even cycles (bipartite; complete) or over
// closed even walks with distinct edges up to walk_bound (non-bipartite;
// flagged).  Errors when walk_bound is missing for non-bipartite input.
ToricIdealResult toric_ideal(const Graph& g,
                             std::optional<int> walk_bound = std::nullopt);

struct EdgeSplitResult {
  Ideal N;  // toric ideal of G minus the edge, in K[E(G)]
  Ideal C;  // N plus the cycle monomials through the edge
  std::vector<Polynomial> m_monomials;
};

// Structural C/N ideals of the split at an edge variable (bipartite only);
// agrees with one_step_split of the decomposition engine at that variable.
EdgeSplitResult edge_split(const Graph& g, const std::string& edge_label);

// Ferrers graph of a weakly decreasing positive partition.
Graph ferrers_graph(const std::vector<int>& lambda);

// Closed-form regularity / a-invariant / multiplicity of the Ferrers toric
// ring (reg 0 when n = 1 or lambda_2 = 1; otherwise the min formula), the
// a-invariant shift by (n + m - 1), and the nested-sum multiplicity.
InvariantReport ferrers_invariants(const std::vector<int>& lambda);

// Graph obtained by gluing a cycle of even length along an edge of g; the
// new cycle edges are appended after the existing ones.
Graph glue_cycle(const Graph& g, const std::string& edge_label,
                 int cycle_length);

// K_{2,d} with a path of length 2r-2 joining the two degree-d vertices.
Graph grd_graph(int r, int d);

// a(K[E]/I_G) = reg(K[E]/I_G) - (|V|-1) for bipartite G.
int bipartite_a(const Graph& g, int reg_of_quotient);

// Every cycle of length >= 6 has a chord.
bool is_chordal_bipartite(const Graph& g);

struct StripResult {
  Graph graph;
  std::vector<std::string> removed_edges;
  std::vector<std::string> removed_vertices;
};

// Repeatedly removes leaf edges and isolated vertices; the toric ideal is
// unchanged by either operation.
StripResult strip_leaves(const Graph& g);

struct ToricInvariantsResult {
  Ideal ideal;  // in the full ring K[E(G)]
  InvariantReport report;
  StripResult strip;
  bool generators_certified = true;
};

// Direct invariants of K[E(G)]/I_G: computed on the leaf-stripped graph and
// re-expressed in the full edge ring (reg and e are unchanged; dim and a
// shift by the number of stripped edges).
ToricInvariantsResult toric_invariants(
    const Graph& g, std::optional<int> walk_bound = std::nullopt);

}  // namespace gvd

#endif
