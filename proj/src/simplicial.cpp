#include "gvd/simplicial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gvd {

namespace {

std::vector<std::vector<int>> minimalize_facets(
    std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<std::vector<int>> kept;
  for (const auto& f : faces) {
    bool contained = false;
    for (const auto& big : kept) {
      if (std::includes(big.begin(), big.end(), f.begin(), f.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<std::vector<int>> facets)
    : vertices_(std::move(vertices)) {
  const int n = static_cast<int>(vertices_.size());
  for (const auto& f : facets)
    for (int v : f)
      if (v < 0 || v >= n)
        throw std::invalid_argument("facet vertex out of range");
  facets_ = minimalize_facets(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_names(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& facets) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> fs;
  for (const auto& f : facets) {
    std::vector<int> g;
    for (const auto& name : f) {
      auto it = index.find(name);
      if (it == index.end())
        throw std::invalid_argument("unknown vertex '" + name + "'");
      g.push_back(it->second);
    }
    fs.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(vertices), std::move(fs));
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  std::size_t best = 0;
  for (const auto& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  std::size_t size = facets_[0].size();
  for (const auto& f : facets_)
    if (f.size() != size) return false;
  return true;
}

bool SimplicialComplex::is_cone_vertex(int v) const {
  if (facets_.empty()) return false;
  for (const auto& f : facets_)
    if (!std::binary_search(f.begin(), f.end(), v)) return false;
  return true;
}

bool SimplicialComplex::is_face(const std::vector<int>& face) const {
  std::vector<int> s(face);
  std::sort(s.begin(), s.end());
  for (const auto& f : facets_)
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  return false;
}

int SimplicialComplex::require_vertex(const std::string& v) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == v) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex '" + v + "'");
}

SimplicialComplex SimplicialComplex::link(int v) const {
  std::vector<std::string> verts;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (static_cast<int>(i) != v) verts.push_back(vertices_[i]);
  std::vector<std::vector<int>> faces;
  for (const auto& f : facets_) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    std::vector<int> g;
    for (int x : f)
      if (x != v) g.push_back(x > v ? x - 1 : x);
    faces.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(verts), std::move(faces));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
  std::vector<std::string> verts;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (static_cast<int>(i) != v) verts.push_back(vertices_[i]);
  std::vector<std::vector<int>> faces;
  for (const auto& f : facets_) {
    std::vector<int> g;
    for (int x : f)
      if (x != v) g.push_back(x > v ? x - 1 : x);
    faces.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(verts), std::move(faces));
}

SimplicialComplex SimplicialComplex::link(const std::string& v) const {
  return link(require_vertex(v));
}

SimplicialComplex SimplicialComplex::deletion(const std::string& v) const {
  return deletion(require_vertex(v));
}

std::string SimplicialComplex::signature() const {
  std::string s;
  for (const auto& v : vertices_) {
    s += v;
    s += ',';
  }
  s += '|';
  for (const auto& f : facets_) {
    for (int x : f) {
      s += std::to_string(x);
      s += ' ';
    }
    s += ';';
  }
  return s;
}

Ideal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const int n = static_cast<int>(complex.vertices().size());
  if (n > 24) throw std::invalid_argument("complex too large");
  RingPtr ring = make_ring(complex.vertices());
  std::vector<unsigned> facet_masks;
  for (const auto& f : complex.facets()) {
    unsigned m = 0;
    for (int v : f) m |= 1u << v;
    facet_masks.push_back(m);
  }
  std::vector<Polynomial> gens;
  const unsigned total = n == 0 ? 1u : (1u << n);
  std::vector<bool> face(total, false);
  for (unsigned s = 0; s < total; ++s) {
    for (unsigned fm : facet_masks) {
      if ((s & fm) == s) {
        face[s] = true;
        break;
      }
    }
  }
  for (unsigned s = 0; s < total; ++s) {
    if (face[s]) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if ((s & (1u << v)) && !face[s & ~(1u << v)]) minimal = false;
    }
    if (!minimal) continue;
    Monomial m(n);
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) m.e[v] = 1;
    gens.push_back(Polynomial::monomial(ring, std::move(m)));
  }
  return Ideal(ring, std::move(gens));
}

namespace {

struct VDContext {
  std::map<std::string, std::shared_ptr<const VDNode>> memo;
};

std::shared_ptr<const VDNode> vd_search(const SimplicialComplex& c,
                                        VDContext& ctx) {
  const std::string key = c.signature();
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  auto node = std::make_shared<VDNode>();
  node->complex = c;
  auto done = [&](std::shared_ptr<VDNode> n) {
    ctx.memo.emplace(key, n);
    return n;
  };

  if (c.is_void()) {
    node->kind = VDKind::Failed;
    node->reason = "void complex";
    return done(node);
  }
  if (!c.is_pure()) {
    node->kind = VDKind::Failed;
    node->reason = "not pure";
    return done(node);
  }
  if (c.is_simplex()) {
    node->kind = VDKind::Base;
    return done(node);
  }

  const int n = static_cast<int>(c.vertices().size());
  // Cone points peel off without affecting decomposability.
  for (int v = 0; v < n; ++v) {
    if (!c.is_cone_vertex(v)) continue;
    auto base = vd_search(c.deletion(v), ctx);
    if (base->ok()) {
      node->kind = VDKind::Cone;
      node->vertex = v;
      node->base_child = base;
      return done(node);
    }
  }
  for (int v = 0; v < n; ++v) {
    SimplicialComplex lk = c.link(v);
    SimplicialComplex del = c.deletion(v);
    if (lk.is_void()) continue;  // vertex absent from every facet
    bool sheds = true;
    for (const auto& f : lk.facets()) {
      // Vertex indices of link and deletion agree (both drop v).
      bool facet_of_del = false;
      for (const auto& g : del.facets()) {
        if (f == g) {
          facet_of_del = true;
          break;
        }
      }
      if (facet_of_del) {
        sheds = false;
        break;
      }
    }
    if (!sheds) continue;
    if (!lk.is_pure() || !del.is_pure()) continue;
    auto dn = vd_search(del, ctx);
    if (!dn->ok()) continue;
    auto ln = vd_search(lk, ctx);
    if (!ln->ok()) continue;
    node->kind = VDKind::Shed;
    node->vertex = v;
    node->del_child = dn;
    node->link_child = ln;
    return done(node);
  }
  node->kind = VDKind::Failed;
  node->reason = "no shedding vertex with decomposable link and deletion";
  return done(node);
}

int eval_reg(const std::shared_ptr<const VDNode>& node) {
  switch (node->kind) {
    case VDKind::Base:
      return 0;
    case VDKind::Cone:
      return eval_reg(node->base_child);
    case VDKind::Shed:
      return std::max(eval_reg(node->del_child),
                      eval_reg(node->link_child) + 1);
    case VDKind::Failed:
      throw std::domain_error("regularity recursion over a failed trace");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

VDTrace is_vertex_decomposable_pure(const SimplicialComplex& complex) {
  if (complex.is_void())
    throw std::invalid_argument("void complex is not a valid input");
  if (!complex.is_pure())
    throw std::invalid_argument("complex is not pure");
  VDContext ctx;
  VDTrace trace;
  trace.root = vd_search(complex, ctx);
  trace.decomposable = trace.root->ok();
  return trace;
}

int reg_via_vd_recursion(const VDTrace& trace) {
  if (!trace.decomposable)
    throw std::domain_error("trace is not a vertex decomposition");
  return eval_reg(trace.root);
}

}  // namespace gvd
