#ifndef GVD_REFERENCE_HPP
#define GVD_REFERENCE_HPP

#include "gvd/simplicial.hpp"
#include "gvd/toric.hpp"

namespace gvd::reference {

// Inputs with independently known invariants, shared by the verification
// suite and the test binaries.

// <yz - xw, xy> over K[x,y,z,w]: not decomposable, Cohen-Macaulay, reg 2.
Ideal binomial_pair();

// <y(zs - x^2), ywr, wr(z^2 + zx + wr + s^2)> over K[y,z,s,x,w,r]:
// geometrically vertex decomposable with reg(R/I) = 3, e = 8, a = -1.
Ideal decomposable_demo();

// <y(zs - x^2), ywr, wr(x^2 + z^2 + wr + s^2)>: not decomposable, but the
// one-step recursion applies under a Cohen-Macaulay assertion; reg(R/I) = 3.
Ideal weakly_decomposable_demo();

// <yz, x + z> over K[y,x,z]: decomposable with a = 0, but every
// decomposition process hits an irrelevant or unit C-ideal.
Ideal saturation_counterexample();

// Cycle graph C_m with edges e1..em.
Graph cycle_graph(int m);

// Complete bipartite graph K_{n,m}.
Graph complete_bipartite(int n, int m);

// Triangle boundary (three edges), the smallest non-cone decomposable
// 1-complex; its Stanley-Reisner ideal is <xyz>.
SimplicialComplex triangle_complex();

// Six-vertex triangulation of the real projective plane: pure, every edge
// in exactly two triangles, not shellable, hence not vertex decomposable.
SimplicialComplex projective_plane_six();

}  // namespace gvd::reference

#endif
