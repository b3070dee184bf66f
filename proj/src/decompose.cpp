#include "gvd/decompose.hpp"

#include <algorithm>
#include <map>

#include "gvd/parse.hpp"

namespace gvd {

namespace {

bool is_monomial_basis(const GroebnerBasis& gb) {
  for (const auto& g : gb.elements)
    if (g.size() != 1) return false;
  return true;
}

bool all_squarefree(const GroebnerBasis& gb) {
  for (const auto& g : gb.elements)
    for (int e : g.terms()[0].m.e)
      if (e > 1) return false;
  return true;
}

// Radical of a monomial ideal: squarefree parts of the generators.
MonomialList monomial_radical(const GroebnerBasis& gb) {
  MonomialList rad;
  rad.reserve(gb.elements.size());
  for (const auto& g : gb.elements)
    rad.push_back(squarefree_part(g.terms()[0].m));
  return minimalize_monomials(std::move(rad));
}

// sqrt(C) = sqrt(N)?  N is generated by a subset of C's generators, so only
// the containment of C's generators in sqrt(N) is at stake; the reverse
// direction is checked by (cheap) membership first.
bool equal_radicals(const Ideal& C, const Ideal& N) {
  if (ideals_equal(C, N)) return true;
  if (is_zero_ideal(N)) return is_zero_ideal(C);
  const GroebnerBasis& gc = C.groebner();
  const GroebnerBasis& gn = N.groebner();
  if (is_monomial_basis(gc) && is_monomial_basis(gn)) {
    MonomialList rc = monomial_radical(gc);
    MonomialList rn = monomial_radical(gn);
    return rc.size() == rn.size() &&
           std::equal(rc.begin(), rc.end(), rn.begin(),
                      [](const Monomial& a, const Monomial& b) {
                        return a.e == b.e;
                      });
  }
  return radical_subset(C, N) && radical_subset(N, C);
}

struct SquarefreeFacets {
  bool computed = false;
  bool pure = false;
};

// Facets of the Stanley-Reisner complex of a squarefree monomial ideal:
// maximal subsets containing no generator support.  Used for the purity
// (= unmixedness) test.
SquarefreeFacets squarefree_purity(const GroebnerBasis& gb, int n) {
  SquarefreeFacets out;
  if (n > 22) return out;  // enumeration guard; fall back to "assumed"
  std::vector<unsigned> supports;
  supports.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    unsigned mask = 0;
    const auto& e = g.terms()[0].m.e;
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  const unsigned total = 1u << n;
  std::vector<bool> face(total, false);
  for (unsigned s = 0; s < total; ++s) {
    bool f = true;
    for (unsigned sup : supports) {
      if ((sup & s) == sup) {
        f = false;
        break;
      }
    }
    face[s] = f;
  }
  int facet_size = -1;
  bool pure = true;
  for (unsigned s = 0; s < total; ++s) {
    if (!face[s]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(s & (1u << v)) && face[s | (1u << v)]) maximal = false;
    }
    if (!maximal) continue;
    int size = __builtin_popcount(s);
    if (facet_size < 0)
      facet_size = size;
    else if (size != facet_size)
      pure = false;
  }
  out.computed = true;
  out.pure = pure;
  return out;
}

// Greedy minimal generating set size (drop generators lying in the ideal of
// the others).  For homogeneous ideals this is the minimal number of
// generators.
int minimal_generator_count(const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      Ideal rest(I.ring(), others);
      if (contains(rest, gens[i])) {
        gens.erase(gens.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return static_cast<int>(gens.size());
}

struct SearchContext {
  GvdOptions opts;
  bool c_saturated = false;
  std::map<std::string, std::shared_ptr<const GVDNode>> memo;
  int depth = 0;
};

// The series identities and the invariant recursions are statements about
// graded quotients; reject inhomogeneous input rather than reporting values
// for the initial degeneration.
void require_homogeneous(const Ideal& I, const char* what) {
  if (!is_homogeneous(I))
    throw std::invalid_argument(std::string(what) +
                                " requires a homogeneous ideal");
}

std::string node_key(const Ideal& I) {
  std::string key;
  for (const auto& v : I.ring()->variables()) {
    key += v;
    key += ',';
  }
  key += "||";
  for (const auto& g : I.groebner().elements) {
    key += to_string(g);
    key += ';';
  }
  return key;
}

UnmixedOutcome check_unmixed(const Ideal& I, const SearchContext& ctx,
                             bool is_root) {
  if (ctx.opts.policy == UnmixedPolicy::AssumeAll)
    return UnmixedOutcome::Skipped;
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_unit()) return UnmixedOutcome::CertifiedUnit;
  if (is_variable_generated(I)) return UnmixedOutcome::CertifiedVariables;
  if (is_root && ctx.opts.root_is_prime) return UnmixedOutcome::CertifiedPrime;
  if (gb.elements.size() == 1) return UnmixedOutcome::CertifiedPrincipal;
  if (is_monomial_basis(gb) && all_squarefree(gb)) {
    SquarefreeFacets sf = squarefree_purity(gb, I.ring()->size());
    if (sf.computed)
      return sf.pure ? UnmixedOutcome::CertifiedSquarefreePure
                     : UnmixedOutcome::RefutedNonPure;
  }
  // Complete intersections are Cohen-Macaulay, hence unmixed.
  HilbertData hd = hilbert_data(I);
  int height = I.ring()->size() - hd.dim;
  if (minimal_generator_count(I) == height)
    return UnmixedOutcome::CertifiedCompleteIntersection;
  return UnmixedOutcome::Assumed;
}

bool irrelevant_ideal(const Ideal& I) {
  int n = I.ring()->size();
  if (n == 0) return false;
  if (!is_variable_generated(I)) return false;
  return static_cast<int>(generated_variables(I).size()) == n;
}

std::shared_ptr<const GVDNode> certify(const Ideal& I, SearchContext& ctx);

std::shared_ptr<const GVDNode> certify_uncached(const Ideal& I,
                                                SearchContext& ctx) {
  auto node = std::make_shared<GVDNode>();
  node->ideal = I;
  const bool is_root = ctx.depth == 0;

  if (is_unit_ideal(I)) {
    if (ctx.c_saturated) {
      node->kind = NodeKind::Failed;
      node->reason = "unit ideal is not proper";
      node->unmixed = UnmixedOutcome::CertifiedUnit;
      return node;
    }
    node->kind = NodeKind::BaseUnit;
    node->unmixed = UnmixedOutcome::CertifiedUnit;
    return node;
  }

  node->unmixed = check_unmixed(I, ctx, is_root);
  if (node->unmixed == UnmixedOutcome::RefutedNonPure) {
    node->kind = NodeKind::Failed;
    node->reason = "not unmixed (non-pure squarefree monomial ideal)";
    return node;
  }
  if (ctx.opts.policy == UnmixedPolicy::Strict &&
      node->unmixed == UnmixedOutcome::Assumed) {
    node->kind = NodeKind::Failed;
    node->reason = "unmixedness not certifiable under strict policy";
    return node;
  }

  if (is_variable_generated(I)) {
    if (ctx.c_saturated && irrelevant_ideal(I)) {
      node->kind = NodeKind::Failed;
      node->reason = "irrelevant ideal (not saturated)";
      return node;
    }
    node->kind = NodeKind::BaseVariables;
    return node;
  }

  const int n = I.ring()->size();
  for (int y = 0; y < n; ++y) {
    std::vector<MonomialOrder> orders;
    orders.push_back(MonomialOrder::y_block_grevlex(y, n));
    if (ctx.opts.wide_order_search) {
      std::vector<int> perm;
      perm.push_back(y);
      for (int i = 0; i < n; ++i)
        if (i != y) perm.push_back(i);
      orders.push_back(MonomialOrder::lex(std::move(perm)));
    }
    bool branch_done = false;
    for (const auto& ord : orders) {
      GVDSplit split = one_step_split(I, y, ord);
      if (!split.valid) {
        node->attempts.emplace_back(
            y, "identity in_y(I) = C cap (N + <y>) fails");
        continue;
      }
      if (ctx.c_saturated && split.degeneracy == Degeneracy::UnitC) {
        node->attempts.emplace_back(
            y, "unit C-ideal (inadmissible in a C-saturated process)");
        continue;
      }
      ++ctx.depth;
      std::shared_ptr<const GVDNode> nres =
          certify(contract(split.N, y), ctx);
      std::shared_ptr<const GVDNode> cres;
      if (!(ctx.c_saturated &&
            split.degeneracy == Degeneracy::EqualRadicals)) {
        cres = certify(contract(split.C, y), ctx);
      }
      --ctx.depth;
      if (!nres->ok()) {
        node->attempts.emplace_back(y, "N-branch fails: " + nres->reason);
        continue;
      }
      if (cres && !cres->ok()) {
        node->attempts.emplace_back(y, "C-branch fails: " + cres->reason);
        continue;
      }
      node->kind = NodeKind::Decomposed;
      node->split = split;
      node->c_child = cres;
      node->n_child = nres;
      branch_done = true;
      break;
    }
    if (branch_done) return node;
  }
  node->kind = NodeKind::Failed;
  node->reason = "no variable admits a geometric vertex decomposition with "
                 "decomposable branches";
  return node;
}

std::shared_ptr<const GVDNode> certify(const Ideal& I, SearchContext& ctx) {
  const std::string key = node_key(I);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;
  auto node = certify_uncached(I, ctx);
  ctx.memo.emplace(key, node);
  return node;
}

void tree_stats(const std::shared_ptr<const GVDNode>& node, int& assumed,
                int& count) {
  if (!node) return;
  ++count;
  if (unmixed_counts_as_assumption(node->unmixed)) ++assumed;
  tree_stats(node->c_child, assumed, count);
  tree_stats(node->n_child, assumed, count);
}

GVDTree run_search(const Ideal& I, const GvdOptions& opts, bool c_saturated) {
  SearchContext ctx;
  ctx.opts = opts;
  ctx.c_saturated = c_saturated;
  GVDTree tree;
  tree.root = certify(I, ctx);
  tree.certified = tree.root->ok();
  tree_stats(tree.root, tree.assumed_nodes, tree.node_count);
  return tree;
}

struct RecursionValues {
  IntPoly h;
  int reg = 0;
  Int e = 1;
  int a = 0;
  int dim = 0;
};

RecursionValues eval_recursion(const std::shared_ptr<const GVDNode>& node) {
  switch (node->kind) {
    case NodeKind::BaseVariables: {
      const int n = node->ideal.ring()->size();
      const int k =
          static_cast<int>(generated_variables(node->ideal).size());
      RecursionValues v;
      v.h = IntPoly::one();
      v.reg = 0;
      v.e = 1;
      v.dim = n - k;
      v.a = -(n - k);
      return v;
    }
    case NodeKind::Decomposed: {
      RecursionValues nv = eval_recursion(node->n_child);
      switch (node->split->degeneracy) {
        case Degeneracy::Nondegenerate: {
          RecursionValues cv = eval_recursion(node->c_child);
          // A genuine nondegenerate decomposition of an unmixed ideal has
          // codim C = codim N + 1 in the contracted ring; a violation means
          // an unmixedness assumption along the tree is false.
          if (nv.dim != cv.dim + 1)
            throw std::domain_error(
                "decomposition dimensions are inconsistent; an assumed "
                "unmixedness hypothesis does not hold");
          RecursionValues v;
          v.h = nv.h + cv.h.shifted(1);
          v.reg = std::max(nv.reg, cv.reg + 1);
          v.e = nv.e + cv.e;
          v.a = std::max(nv.a, cv.a);
          v.dim = nv.dim;
          return v;
        }
        case Degeneracy::UnitC:
          // R/I is isomorphic to R'/N.
          return nv;
        case Degeneracy::EqualRadicals: {
          // I = in_y(I) = C = N as ideals of R; only the ambient ring grows.
          RecursionValues v = nv;
          v.a = nv.a - 1;
          v.dim = nv.dim + 1;
          return v;
        }
      }
      break;
    }
    case NodeKind::BaseUnit:
      throw std::logic_error("recursion reached a unit node");
    case NodeKind::Failed:
      throw std::domain_error("recursion over a failed node");
  }
  throw std::logic_error("unreachable");
}

InvariantReport report_from_values(const RecursionValues& v, int ambient,
                                   CmStatus cm, int assumed_nodes) {
  InvariantReport r;
  r.h = v.h;
  r.dim = v.dim;
  r.ambient = ambient;
  r.reg = v.reg;
  r.e = v.e;
  r.a = v.a;
  r.cm = cm;
  r.provenance = Provenance::Recursion;
  r.order_used = "y-block grevlex";
  if (v.a < 0)
    r.hilbertian = HilbertianClass::Hilbertian;
  else if (v.a == 0)
    r.hilbertian = HilbertianClass::AlmostHilbertian;
  else
    r.hilbertian = HilbertianClass::Neither;
  if (assumed_nodes > 0)
    r.notes.push_back("unmixedness assumed at " +
                      std::to_string(assumed_nodes) + " node(s)");
  return r;
}

}  // namespace

std::string to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Nondegenerate:
      return "nondegenerate";
    case Degeneracy::UnitC:
      return "degenerate-unit-C";
    case Degeneracy::EqualRadicals:
      return "degenerate-equal-radicals";
  }
  return "?";
}

std::string to_string(UnmixedOutcome u) {
  switch (u) {
    case UnmixedOutcome::CertifiedUnit:
      return "certified(unit)";
    case UnmixedOutcome::CertifiedVariables:
      return "certified(variables)";
    case UnmixedOutcome::CertifiedPrincipal:
      return "certified(principal)";
    case UnmixedOutcome::CertifiedCompleteIntersection:
      return "certified(complete-intersection)";
    case UnmixedOutcome::CertifiedSquarefreePure:
      return "certified(pure-squarefree)";
    case UnmixedOutcome::CertifiedPrime:
      return "certified(prime)";
    case UnmixedOutcome::RefutedNonPure:
      return "refuted(non-pure)";
    case UnmixedOutcome::Assumed:
      return "assumed";
    case UnmixedOutcome::Skipped:
      return "assumed(skipped)";
  }
  return "?";
}

bool unmixed_counts_as_assumption(UnmixedOutcome u) {
  return u == UnmixedOutcome::Assumed || u == UnmixedOutcome::Skipped;
}

GVDSplit one_step_split(const Ideal& I, int y) {
  return one_step_split(
      I, y, MonomialOrder::y_block_grevlex(y, I.ring()->size()));
}

GVDSplit one_step_split(const Ideal& I, int y, const MonomialOrder& order) {
  if (y < 0 || y >= I.ring()->size())
    throw std::invalid_argument("one_step_split: variable not in ring");
  if (!order.is_y_compatible(y))
    throw std::invalid_argument("one_step_split: order is not y-compatible");

  GVDSplit s;
  s.y = y;
  s.order = order;

  const GroebnerBasis& gb = I.groebner(order);
  std::vector<Polynomial> in_gens, c_gens, n_gens;
  for (const auto& g : gb.elements) {
    auto [d, q] = initial_y_factor(g, y);
    in_gens.push_back(initial_y_form(g, y));
    c_gens.push_back(q);
    if (d == 0) n_gens.push_back(q);
  }
  const RingPtr& ring = I.ring();
  s.in_y = Ideal(ring, std::move(in_gens));
  s.C = Ideal(ring, std::move(c_gens));
  s.N = Ideal(ring, std::move(n_gens));

  Ideal n_plus_y = sum(s.N, Polynomial::variable(ring, y));
  s.valid = ideals_equal(s.in_y, intersect(s.C, n_plus_y));

  if (is_unit_ideal(s.C))
    s.degeneracy = Degeneracy::UnitC;
  else if (equal_radicals(s.C, s.N))
    s.degeneracy = Degeneracy::EqualRadicals;
  else
    s.degeneracy = Degeneracy::Nondegenerate;
  return s;
}

std::optional<GVDSplit> first_valid_split(const Ideal& I) {
  for (int y = 0; y < I.ring()->size(); ++y) {
    GVDSplit s = one_step_split(I, y);
    if (s.valid) return s;
  }
  return std::nullopt;
}

GVDTree is_gvd(const Ideal& I, const GvdOptions& opts) {
  return run_search(I, opts, /*c_saturated=*/false);
}

CSatResult is_c_saturated(const Ideal& I, const GvdOptions& opts) {
  require_homogeneous(I, "is_c_saturated");
  CSatResult r;
  r.tree = run_search(I, opts, /*c_saturated=*/true);
  r.certified = r.tree.certified;
  return r;
}

bool verify_series_identity(const Ideal& I, const GVDSplit& split) {
  if (!split.valid)
    throw std::invalid_argument("verify_series_identity: invalid split");
  require_homogeneous(I, "verify_series_identity");
  const RingPtr& ring = I.ring();
  Ideal n_plus_y = sum(split.N, Polynomial::variable(ring, split.y));
  IntPoly num_i = hilbert_data(I).numerator;
  IntPoly num_n = hilbert_data(n_plus_y).numerator;
  IntPoly num_c = hilbert_data(split.C).numerator;
  return num_i == num_n + num_c.shifted(1);
}

bool verify_h_identity(const Ideal& I, const GVDSplit& split) {
  if (!split.valid)
    throw std::invalid_argument("verify_h_identity: invalid split");
  require_homogeneous(I, "verify_h_identity");
  IntPoly h_i = hilbert_data(I).h;
  IntPoly h_n = hilbert_data(split.N).h;
  IntPoly h_c = hilbert_data(split.C).h;
  return h_i == h_n + h_c.shifted(1);
}

InvariantReport invariants_via_recursion(const GVDTree& tree) {
  if (!tree.certified)
    throw std::domain_error(
        "invariants_via_recursion: tree is not certified");
  require_homogeneous(tree.root->ideal, "invariants_via_recursion");
  RecursionValues v = eval_recursion(tree.root);
  return report_from_values(v, tree.root->ideal.ring()->size(),
                            CmStatus::Certified, tree.assumed_nodes);
}

InvariantReport invariants_recursion_asserted(const Ideal& I) {
  require_homogeneous(I, "invariants_recursion_asserted");
  std::optional<GVDSplit> split = first_valid_split(I);
  if (!split)
    throw std::domain_error(
        "no variable admits a geometric vertex decomposition");
  Ideal Nc = contract(split->N, split->y);
  RecursionValues v;
  if (split->degeneracy == Degeneracy::UnitC) {
    InvariantReport n = invariants_direct(Nc, CmStatus::Asserted);
    v.h = n.h;
    v.reg = *n.reg;
    v.e = n.e;
    v.a = n.a;
    v.dim = n.dim;
  } else if (split->degeneracy == Degeneracy::EqualRadicals) {
    InvariantReport n = invariants_direct(Nc, CmStatus::Asserted);
    v.h = n.h;
    v.reg = *n.reg;
    v.e = n.e;
    v.a = n.a - 1;
    v.dim = n.dim + 1;
  } else {
    Ideal Cc = contract(split->C, split->y);
    InvariantReport n = invariants_direct(Nc, CmStatus::Asserted);
    InvariantReport c = invariants_direct(Cc, CmStatus::Asserted);
    if (n.dim != c.dim + 1)
      throw std::domain_error(
          "decomposition dimensions are inconsistent with the asserted "
          "Cohen-Macaulay hypotheses");
    v.h = n.h + c.h.shifted(1);
    v.reg = std::max(*n.reg, *c.reg + 1);
    v.e = n.e + c.e;
    v.a = std::max(n.a, c.a);
    v.dim = n.dim;
  }
  InvariantReport r =
      report_from_values(v, I.ring()->size(), CmStatus::Asserted, 0);
  r.notes.push_back("one-step recursion at " +
                    I.ring()->variable(split->y) + " (" +
                    to_string(split->degeneracy) +
                    "), Cohen-Macaulayness asserted");
  return r;
}

AuditReport nonpositivity_audit(
    const std::vector<std::pair<std::string, Ideal>>& corpus,
    const GvdOptions& opts) {
  AuditReport report;
  for (const auto& [name, ideal] : corpus) {
    AuditRow row;
    row.name = name;
    GVDTree tree = is_gvd(ideal, opts);
    row.gvd_certified = tree.certified;
    row.c_saturated = is_c_saturated(ideal, opts).certified;
    if (is_unit_ideal(ideal)) {
      row.detail = "unit ideal skipped";
      report.rows.push_back(row);
      continue;
    }
    InvariantReport direct = invariants_direct(ideal, CmStatus::Unknown);
    row.a = direct.a;
    if (row.gvd_certified && row.a > 0) {
      row.ok = false;
      row.detail = "a > 0 on a certified ideal";
    }
    if (row.c_saturated && row.a >= 0) {
      row.ok = false;
      row.detail = "a >= 0 on a C-saturated ideal";
    }
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gvd
