#ifndef GVD_GROEBNER_HPP
#define GVD_GROEBNER_HPP

#include <optional>
#include <vector>

#include "gvd/ideal.hpp"

namespace gvd {

// Buchberger with Gebauer-Moeller pair elimination and normal selection
// (minimal lcm degree first).  Returns the unique reduced basis, monic and
// sorted ascending by leading monomial; deterministic.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                         const MonomialOrder& order);

// Remainder of multivariate division of f by gb: no term of the result is
// divisible by any leading monomial of gb, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool contains(const Ideal& I, const Polynomial& f);

// Generator containment both ways; equivalently equal reduced bases.
bool ideals_equal(const Ideal& I, const Ideal& J);

bool is_zero_ideal(const Ideal& I);
bool is_unit_ideal(const Ideal& I);

// Exact test via the reduced basis (generators may be presented
// inhomogeneously).
bool is_homogeneous(const Ideal& I);

// True iff the reduced grevlex basis consists of single variables (empty
// basis counts: the zero ideal is generated by the empty set of variables).
bool is_variable_generated(const Ideal& I);

// Variable indices generated, when is_variable_generated holds.
std::vector<int> generated_variables(const Ideal& I);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const Polynomial& f);

// I cap K[remaining variables], via a block order with `vars` leading.
// The result lives in the ring with `vars` removed.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// Intersection by the auxiliary-variable trick: eliminate t from
// t*I + (1-t)*J.  The auxiliary variable is appended at the end of the
// variable list with top block priority and never leaks into the result.
Ideal intersect(const Ideal& I, const Ideal& J);

// f in sqrt(I), decided by 1 in I + <1 - w*f> in the extended ring.
bool in_radical(const Polynomial& f, const Ideal& I);

// Every generator of A lies in sqrt(B).
bool radical_subset(const Ideal& A, const Ideal& B);

Ideal contract(const Ideal& I, int drop);           // gens must avoid drop
Ideal map_to_ring(const Ideal& I, const RingPtr& target);

}  // namespace gvd

#endif
