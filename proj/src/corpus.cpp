#include "gvd/corpus.hpp"

#include <algorithm>

namespace gvd {

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int max_degree,
                             int max_terms) {
  const int n = ring->size();
  std::vector<Term> terms;
  const int count = rng.range(1, max_terms);
  for (int t = 0; t < count; ++t) {
    Monomial m(n);
    int degree = rng.range(0, max_degree);
    for (int d = 0; d < degree; ++d) m.e[rng.below(n)] += 1;
    int coeff = 0;
    while (coeff == 0) coeff = rng.range(-3, 3);
    terms.push_back({std::move(m), Rat(coeff)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Ideal random_ideal(Rng& rng, int max_vars, int max_gens, int max_degree) {
  static const std::vector<std::string> names{"x", "y", "z", "u", "v", "w"};
  const int n = rng.range(2, max_vars);
  RingPtr ring =
      make_ring(std::vector<std::string>(names.begin(), names.begin() + n));
  const int gens = rng.range(1, max_gens);
  std::vector<Polynomial> gs;
  for (int i = 0; i < gens; ++i) {
    Polynomial f = random_polynomial(rng, ring, max_degree, 4);
    if (!f.is_zero() && !f.is_constant()) gs.push_back(std::move(f));
  }
  if (gs.empty()) gs.push_back(Polynomial::variable(ring, 0));
  return Ideal(ring, std::move(gs));
}

Ideal random_homogeneous_ideal(Rng& rng, int max_vars, int max_gens,
                               int max_degree) {
  static const std::vector<std::string> names{"x", "y", "z", "u", "v", "w"};
  const int n = rng.range(2, max_vars);
  RingPtr ring =
      make_ring(std::vector<std::string>(names.begin(), names.begin() + n));
  const int gens = rng.range(1, max_gens);
  std::vector<Polynomial> gs;
  for (int i = 0; i < gens; ++i) {
    const int degree = rng.range(1, max_degree);
    std::vector<Term> terms;
    const int count = rng.range(1, 3);
    for (int t = 0; t < count; ++t) {
      Monomial m(n);
      for (int d = 0; d < degree; ++d) m.e[rng.below(n)] += 1;
      int coeff = 0;
      while (coeff == 0) coeff = rng.range(-3, 3);
      terms.push_back({std::move(m), Rat(coeff)});
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero()) gs.push_back(std::move(f));
  }
  if (gs.empty()) gs.push_back(Polynomial::variable(ring, 0));
  return Ideal(ring, std::move(gs));
}

Graph random_connected_bipartite(Rng& rng, int max_edges) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int n1 = rng.range(2, 4);
    const int n2 = rng.range(2, 4);
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) all.push_back({i, n1 + j});
    rng.shuffle(all);
    const int want =
        rng.range(std::min<int>(3, static_cast<int>(all.size())),
                  std::min<int>(max_edges, static_cast<int>(all.size())));
    all.resize(want);

    std::vector<std::string> vertices;
    for (int i = 1; i <= n1; ++i) vertices.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n2; ++j) vertices.push_back("y" + std::to_string(j));
    std::sort(all.begin(), all.end());
    std::vector<GraphEdge> edges;
    for (std::size_t k = 0; k < all.size(); ++k)
      edges.push_back({"e" + std::to_string(k + 1), all[k].first,
                       all[k].second});
    Graph g(vertices, edges);
    // Require every vertex covered and the graph connected.
    bool covered = true;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 0) covered = false;
    if (covered && g.is_connected()) return g;
  }
  // Deterministic fallback: a 4-cycle.
  return Graph::from_ends({"x1", "x2", "y1", "y2"},
                          {{"e1", {"x1", "y1"}},
                           {"e2", {"y1", "x2"}},
                           {"e3", {"x2", "y2"}},
                           {"e4", {"y2", "x1"}}});
}

SimplicialComplex random_pure_complex(Rng& rng, int max_vertices) {
  const int n = rng.range(4, max_vertices);
  const int dim = rng.range(1, std::min(3, n - 1));
  std::vector<std::vector<int>> candidates;
  std::vector<int> subset(dim + 1);
  auto gen = [&](auto&& self, int start, int pos) -> void {
    if (pos == dim + 1) {
      candidates.push_back(subset);
      return;
    }
    for (int v = start; v < n; ++v) {
      subset[pos] = v;
      self(self, v + 1, pos + 1);
    }
  };
  gen(gen, 0, 0);
  rng.shuffle(candidates);
  const int lo = std::min<int>(2, static_cast<int>(candidates.size()));
  const int hi = std::min<int>(6, static_cast<int>(candidates.size()));
  const int facets = rng.range(lo, hi);
  candidates.resize(facets);
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  return SimplicialComplex(std::move(vertices), std::move(candidates));
}

}  // namespace gvd
