#include "gvd/reference.hpp"

#include "gvd/parse.hpp"

namespace gvd::reference {

Ideal binomial_pair() {
  RingPtr ring = make_ring({"x", "y", "z", "w"});
  return Ideal(ring, {parse_polynomial("y*z - x*w", ring),
                      parse_polynomial("x*y", ring)});
}

Ideal decomposable_demo() {
  RingPtr ring = make_ring({"y", "z", "s", "x", "w", "r"});
  return Ideal(ring,
               {parse_polynomial("y*(z*s - x^2)", ring),
                parse_polynomial("y*w*r", ring),
                parse_polynomial("w*r*(z^2 + z*x + w*r + s^2)", ring)});
}

Ideal weakly_decomposable_demo() {
  RingPtr ring = make_ring({"y", "z", "s", "x", "w", "r"});
  return Ideal(ring,
               {parse_polynomial("y*(z*s - x^2)", ring),
                parse_polynomial("y*w*r", ring),
                parse_polynomial("w*r*(x^2 + z^2 + w*r + s^2)", ring)});
}

Ideal saturation_counterexample() {
  RingPtr ring = make_ring({"y", "x", "z"});
  return Ideal(ring, {parse_polynomial("y*z", ring),
                      parse_polynomial("x + z", ring)});
}

Graph cycle_graph(int m) {
  std::vector<std::string> vertices;
  for (int i = 1; i <= m; ++i) vertices.push_back("c" + std::to_string(i));
  std::vector<GraphEdge> edges;
  for (int i = 0; i < m; ++i)
    edges.push_back({"e" + std::to_string(i + 1), i, (i + 1) % m});
  return Graph(std::move(vertices), std::move(edges));
}

Graph complete_bipartite(int n, int m) {
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back("x" + std::to_string(i));
  for (int j = 1; j <= m; ++j) vertices.push_back("y" + std::to_string(j));
  std::vector<GraphEdge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j),
                       i - 1, n + j - 1});
  return Graph(std::move(vertices), std::move(edges));
}

SimplicialComplex triangle_complex() {
  return SimplicialComplex::from_names({"x", "y", "z"},
                                       {{"x", "y"}, {"y", "z"}, {"x", "z"}});
}

SimplicialComplex projective_plane_six() {
  return SimplicialComplex::from_names(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2", "3"},
       {"1", "3", "4"},
       {"1", "4", "5"},
       {"1", "5", "6"},
       {"1", "2", "6"},
       {"2", "3", "5"},
       {"2", "4", "5"},
       {"2", "4", "6"},
       {"3", "4", "6"},
       {"3", "5", "6"}});
}

}  // namespace gvd::reference
