#ifndef GVD_CORPUS_HPP
#define GVD_CORPUS_HPP

#include <random>

#include "gvd/simplicial.hpp"
#include "gvd/toric.hpp"

namespace gvd {

// Deterministic generator for the seeded corpora.  Bounds are taken with a
// plain modulus so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = below(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Random polynomial with small integer coefficients.
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int max_degree,
                             int max_terms);

// Random ideal in <= 5 variables with generators of degree <= 4.
Ideal random_ideal(Rng& rng, int max_vars = 5, int max_gens = 4,
                   int max_degree = 4);

// Connected bipartite graph with at most max_edges edges and no isolated
// vertices.
Graph random_connected_bipartite(Rng& rng, int max_edges);

// Pure complex on at most max_vertices vertices (random facet selection of
// a fixed dimension).
SimplicialComplex random_pure_complex(Rng& rng, int max_vertices);

// Random homogeneous ideal (every generator of a single total degree).
Ideal random_homogeneous_ideal(Rng& rng, int max_vars = 4, int max_gens = 3,
                               int max_degree = 3);

}  // namespace gvd

#endif
