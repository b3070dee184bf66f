#ifndef GVD_SIMPLICIAL_HPP
#define GVD_SIMPLICIAL_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gvd/ideal.hpp"

namespace gvd {

// Complex given by its facet list over named vertices.  The empty complex
// (only face: the empty set) is encoded by the single empty facet; the void
// complex (no faces at all) is representable but rejected by the
// decomposability search.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> vertices,
                    std::vector<std::vector<int>> facets);

  static SimplicialComplex from_names(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& facets);

  static SimplicialComplex empty_complex(std::vector<std::string> vertices) {
    return SimplicialComplex(std::move(vertices), {{}});
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const {
    return facets_.size() == 1 && facets_[0].empty();
  }
  bool is_simplex() const { return facets_.size() == 1; }

  // -2 for void, -1 for the empty complex.
  int dimension() const;
  bool is_pure() const;
  bool is_cone_vertex(int v) const;  // v lies in every facet
  bool is_face(const std::vector<int>& face) const;

  SimplicialComplex link(int v) const;
  SimplicialComplex deletion(int v) const;
  SimplicialComplex link(const std::string& v) const;
  SimplicialComplex deletion(const std::string& v) const;

  std::string signature() const;

 private:
  int require_vertex(const std::string& v) const;

  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> facets_;  // each sorted; list sorted; minimal
};

// Squarefree monomials of the minimal non-faces, over K[vertices].
Ideal stanley_reisner_ideal(const SimplicialComplex& complex);

enum class VDKind { Base, Cone, Shed, Failed };

struct VDNode {
  SimplicialComplex complex;
  VDKind kind = VDKind::Failed;
  int vertex = -1;  // Cone / Shed
  std::shared_ptr<const VDNode> del_child;   // Shed
  std::shared_ptr<const VDNode> link_child;  // Shed
  std::shared_ptr<const VDNode> base_child;  // Cone
  std::string reason;

  bool ok() const { return kind != VDKind::Failed; }
};

struct VDTrace {
  std::shared_ptr<const VDNode> root;
  bool decomposable = false;
};

// Exhaustive shedding-vertex search for pure complexes.  A vertex sheds
// when no facet of its link is a facet of its deletion; simplices and the
// empty complex are base cases, cone points are peeled directly.  Errors on
// non-pure or void input.
VDTrace is_vertex_decomposable_pure(const SimplicialComplex& complex);

// reg(R/I_del) / reg(R/I_link) recursion: shed nodes combine as
// max{reg(del), reg(link) + 1}, cone nodes copy the base, bases are 0.
int reg_via_vd_recursion(const VDTrace& trace);

}  // namespace gvd

#endif
