#ifndef GVD_DECOMPOSE_HPP
#define GVD_DECOMPOSE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gvd/hilbert.hpp"

namespace gvd {

enum class Degeneracy { Nondegenerate, UnitC, EqualRadicals };
std::string to_string(Degeneracy d);

// One geometric vertex decomposition step at variable y.  C and N live in
// the ambient ring with y-free generators; in_y is the ideal of initial
// y-forms of the reduced basis.
struct GVDSplit {
  int y = -1;
  MonomialOrder order = MonomialOrder::grevlex(0);
  Ideal in_y;
  Ideal C;
  Ideal N;
  bool valid = false;
  Degeneracy degeneracy = Degeneracy::Nondegenerate;

  bool is_degenerate() const { return degeneracy != Degeneracy::Nondegenerate; }
};

// Split from the reduced basis under the canonical y-compatible order
// (y-block over grevlex), or an explicitly supplied y-compatible order.
GVDSplit one_step_split(const Ideal& I, int y);
GVDSplit one_step_split(const Ideal& I, int y, const MonomialOrder& order);

// First variable in ring order admitting a valid decomposition.
std::optional<GVDSplit> first_valid_split(const Ideal& I);

enum class UnmixedOutcome {
  CertifiedUnit,
  CertifiedVariables,
  CertifiedPrincipal,
  CertifiedCompleteIntersection,
  CertifiedSquarefreePure,
  CertifiedPrime,
  RefutedNonPure,
  Assumed,
  Skipped,
};
std::string to_string(UnmixedOutcome u);
bool unmixed_counts_as_assumption(UnmixedOutcome u);

// Auto: certify structurally when possible, otherwise assume and annotate.
// AssumeAll: skip the checks entirely.  Strict: fail nodes that cannot be
// certified.
enum class UnmixedPolicy { Auto, AssumeAll, Strict };

enum class NodeKind { BaseUnit, BaseVariables, Decomposed, Failed };

struct GVDNode {
  Ideal ideal;
  NodeKind kind = NodeKind::Failed;
  UnmixedOutcome unmixed = UnmixedOutcome::Skipped;
  std::optional<GVDSplit> split;
  std::shared_ptr<const GVDNode> c_child;
  std::shared_ptr<const GVDNode> n_child;
  std::string reason;  // failure reason
  std::vector<std::pair<int, std::string>> attempts;  // per-variable notes

  bool ok() const { return kind != NodeKind::Failed; }
};

struct GVDTree {
  std::shared_ptr<const GVDNode> root;
  bool certified = false;
  int assumed_nodes = 0;
  int node_count = 0;
};

struct GvdOptions {
  UnmixedPolicy policy = UnmixedPolicy::Auto;
  bool wide_order_search = false;  // additionally try lex orders per variable
  bool root_is_prime = false;      // structural hint (e.g. toric ideals)
};

// Recursive certifier for Definition-style geometric vertex
// decomposability: base cases are the unit ideal and ideals generated by a
// subset of variables; otherwise some variable must admit a valid
// decomposition whose contracted C and N ideals are again decomposable.
GVDTree is_gvd(const Ideal& I, const GvdOptions& opts = {});

// C-saturated variant: a decomposition process in which no contracted
// C-ideal is the irrelevant ideal of its ring.  Unit-C degenerations are
// not admissible steps and variable-generated bases must be proper subsets
// of the variables.
struct CSatResult {
  bool certified = false;
  GVDTree tree;
};
CSatResult is_c_saturated(const Ideal& I, const GvdOptions& opts = {});

// H_{R/I}(t) = H_{R/(N+<y>)}(t) + t*H_{R/C}(t) as exact rational functions
// (first-form numerators over a common (1-t)^n).  Errors on invalid splits.
bool verify_series_identity(const Ideal& I, const GVDSplit& split);

// h_{R/I}(t) = h_{R/N}(t) + t*h_{R/C}(t) (reduced h-polynomials).
bool verify_h_identity(const Ideal& I, const GVDSplit& split);

// Bottom-up evaluation of the regularity / multiplicity / a-invariant
// recursions over a certified tree.  reg combines as
// max{reg(N), reg(C)+1}, e as e(N)+e(C), and a as max{a(N), a(C)} in the
// contracted rings; degenerate nodes copy N with the ring-change bookkeeping
// for a.  Errors when the tree is not certified.
InvariantReport invariants_via_recursion(const GVDTree& tree);

// One-step recursion under an asserted Cohen-Macaulay hypothesis: the first
// valid split is taken and the C/N invariants are computed directly.
InvariantReport invariants_recursion_asserted(const Ideal& I);

struct AuditRow {
  std::string name;
  bool gvd_certified = false;
  bool c_saturated = false;
  int a = 0;
  bool ok = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  bool all_ok = true;
};

// Asserts a <= 0 on every certified ideal and a < 0 on every C-saturated
// one; violations are hard failures.
AuditReport nonpositivity_audit(
    const std::vector<std::pair<std::string, Ideal>>& corpus,
    const GvdOptions& opts = {});

}  // namespace gvd

#endif
