#include "gvd/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gvd/parse.hpp"

namespace gvd {

Graph::Graph(std::vector<std::string> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != vertices_.size())
    throw std::invalid_argument("duplicate vertex names");
  std::set<std::string> labels;
  std::set<std::pair<int, int>> ends;
  const int n = vertex_count();
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loop edge " + e.label);
    if (!labels.insert(e.label).second)
      throw std::invalid_argument("duplicate edge label " + e.label);
    auto key = std::minmax(e.u, e.v);
    if (!ends.insert({key.first, key.second}).second)
      throw std::invalid_argument("multi-edge at " + e.label);
  }
}

Graph Graph::from_ends(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string,
                                std::pair<std::string, std::string>>>&
        labelled_ends) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[vertices[i]] = static_cast<int>(i);
  std::vector<GraphEdge> edges;
  for (const auto& [label, ends] : labelled_ends) {
    auto a = index.find(ends.first);
    auto b = index.find(ends.second);
    if (a == index.end() || b == index.end())
      throw std::invalid_argument("edge " + label + " uses unknown vertex");
    edges.push_back({label, a->second, b->second});
  }
  return Graph(std::move(vertices), std::move(edges));
}

int Graph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex '" + name + "'");
}

std::optional<int> Graph::edge_index(const std::string& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].label == label) return static_cast<int>(i);
  return std::nullopt;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

bool Graph::adjacent(int u, int v) const {
  for (const auto& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  const int n = vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!adj[v].empty()) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<bool> seen(n, false);
  seen[start] = true;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < n; ++v)
    if (!adj[v].empty() && !seen[v]) return false;
  return true;
}

std::vector<std::vector<int>> Graph::simple_cycles() const {
  const int n = vertex_count();
  std::map<std::pair<int, int>, int> edge_of;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adj[e.u].push_back({e.v, static_cast<int>(i)});
    adj[e.v].push_back({e.u, static_cast<int>(i)});
    edge_of[{std::min(e.u, e.v), std::max(e.u, e.v)}] = static_cast<int>(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  // Each cycle is rooted at its smallest vertex and traversed in the
  // direction that makes the second vertex smaller than the last.
  auto dfs = [&](auto&& self, int root, int current) -> void {
    for (const auto& [nb, eidx] : adj[current]) {
      if (nb == root && path.size() >= 3) {
        if (path[1] < path.back()) {
          std::vector<int> cyc;
          for (std::size_t i = 0; i + 1 < path.size(); ++i)
            cyc.push_back(edge_of.at({std::min(path[i], path[i + 1]),
                                      std::max(path[i], path[i + 1])}));
          cyc.push_back(eidx);
          cycles.push_back(std::move(cyc));
        }
      } else if (nb > root && !on_path[nb]) {
        path.push_back(nb);
        on_path[nb] = true;
        self(self, root, nb);
        on_path[nb] = false;
        path.pop_back();
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    dfs(dfs, s, s);
  }
  return cycles;
}

RingPtr Graph::edge_ring() const {
  std::vector<std::string> vars;
  vars.reserve(edges_.size());
  for (const auto& e : edges_) vars.push_back(e.label);
  return make_ring(std::move(vars));
}

Polynomial cycle_binomial(const std::vector<int>& cycle_edges,
                          const RingPtr& ring) {
  if (cycle_edges.size() % 2 != 0)
    throw std::invalid_argument("cycle of odd length has no binomial");
  Monomial odd(ring->size()), even(ring->size());
  for (std::size_t i = 0; i < cycle_edges.size(); ++i) {
    Monomial& side = (i % 2 == 0) ? odd : even;
    side.e[cycle_edges[i]] += 1;
  }
  return Polynomial::monomial(ring, odd) - Polynomial::monomial(ring, even);
}

namespace {

std::string binomial_key(const Polynomial& f) { return to_string(f); }

// Sign-normalized nonzero binomial, or nullopt when the two sides match.
std::optional<Polynomial> normalize_binomial(Polynomial f) {
  if (f.is_zero()) return std::nullopt;
  if (f.terms()[0].c < 0) f = -f;
  return f;
}

// Closed even walks with distinct edges, as edge sequences up to the given
// length; sound but not complete generators for non-bipartite graphs.
std::vector<std::vector<int>> closed_even_walks(const Graph& g, int bound) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::vector<int>> walks;
  std::vector<int> walk;
  std::vector<bool> used(g.edge_count(), false);

  auto dfs = [&](auto&& self, int root, int current) -> void {
    if (static_cast<int>(walk.size()) > bound) return;
    for (const auto& [nb, eidx] : adj[current]) {
      if (used[eidx]) continue;
      if (nb == root && walk.size() % 2 == 1 && walk.size() >= 3) {
        walk.push_back(eidx);
        walks.push_back(walk);
        walk.pop_back();
      }
      if (static_cast<int>(walk.size()) + 1 < bound) {
        used[eidx] = true;
        walk.push_back(eidx);
        self(self, root, nb);
        walk.pop_back();
        used[eidx] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    walk.clear();
    std::fill(used.begin(), used.end(), false);
    dfs(dfs, s, s);
  }
  return walks;
}

}  // namespace

ToricIdealResult toric_ideal(const Graph& g, std::optional<int> walk_bound) {
  RingPtr ring = g.edge_ring();
  if (g.is_bipartite()) {
    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    for (const auto& cyc : g.simple_cycles()) {
      auto f = normalize_binomial(cycle_binomial(cyc, ring));
      if (f && seen.insert(binomial_key(*f)).second) gens.push_back(*f);
    }
    return {Ideal(ring, std::move(gens)), true};
  }
  if (!walk_bound)
    throw std::invalid_argument(
        "non-bipartite graph requires a walk bound (generators will not be "
        "certified)");
  std::vector<Polynomial> gens;
  std::set<std::string> seen;
  for (const auto& walk : closed_even_walks(g, *walk_bound)) {
    auto f = normalize_binomial(cycle_binomial(walk, ring));
    if (f && seen.insert(binomial_key(*f)).second) gens.push_back(*f);
  }
  return {Ideal(ring, std::move(gens)), false};
}

EdgeSplitResult edge_split(const Graph& g, const std::string& edge_label) {
  auto eidx = g.edge_index(edge_label);
  if (!eidx) throw std::invalid_argument("unknown edge " + edge_label);
  if (!g.is_bipartite())
    throw std::invalid_argument("edge_split requires a bipartite graph");

  RingPtr ring = g.edge_ring();

  // I_{G minus e}, expressed in the full ring: cycles avoiding e.
  std::vector<Polynomial> n_gens;
  std::vector<Polynomial> m_monomials;
  std::set<std::string> seen_n, seen_m;
  for (const auto& cyc : g.simple_cycles()) {
    auto pos = std::find(cyc.begin(), cyc.end(), *eidx);
    if (pos == cyc.end()) {
      auto f = normalize_binomial(cycle_binomial(cyc, ring));
      if (f && seen_n.insert(binomial_key(*f)).second) n_gens.push_back(*f);
    } else {
      // m with m*e - n the cycle binomial: edges at the parity of e.
      std::size_t p = static_cast<std::size_t>(pos - cyc.begin());
      Monomial m(ring->size());
      for (std::size_t k = 2; k < cyc.size(); k += 2)
        m.e[cyc[(p + k) % cyc.size()]] += 1;
      Polynomial mono = Polynomial::monomial(ring, m);
      if (seen_m.insert(binomial_key(mono)).second)
        m_monomials.push_back(std::move(mono));
    }
  }
  std::vector<Polynomial> c_gens = n_gens;
  for (const auto& m : m_monomials) c_gens.push_back(m);
  return {Ideal(ring, std::move(n_gens)), Ideal(ring, std::move(c_gens)),
          std::move(m_monomials)};
}

Graph ferrers_graph(const std::vector<int>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("empty partition");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1)
      throw std::invalid_argument("partition entries must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
  const int n = static_cast<int>(lambda.size());
  const int m = lambda[0];
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  for (int j = 1; j <= m; ++j) vertices.push_back("u" + std::to_string(j));
  std::vector<GraphEdge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j),
                       i - 1, n + j - 1});
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

InvariantReport ferrers_invariants(const std::vector<int>& lambda) {
  Graph check = ferrers_graph(lambda);  // validates the partition
  const int n = static_cast<int>(lambda.size());
  const int m = lambda[0];

  int reg = 0;
  if (n > 1 && lambda[1] >= 2) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      if (lambda[i] >= 2) s = i + 1;
    reg = s - 1;
    for (int j = 2; j <= s; ++j) reg = std::min(reg, lambda[j - 1] + j - 3);
  }

  // Nested-sum multiplicity; g(0, U) = U, g(k, U) = sum_{j=L_k}^{U} g(k-1, j)
  // with L_k = lambda_2 - lambda_{k+2} + 1.
  Int e;
  if (n == 1) {
    e = 1;
  } else {
    auto g_rec = [&](auto&& self, int k, int upper) -> Int {
      if (k == 0) return Int(upper);
      Int total = 0;
      int low = lambda[1] - lambda[k + 1] + 1;
      for (int j = low; j <= upper; ++j) total += self(self, k - 1, j);
      return total;
    };
    e = g_rec(g_rec, n - 2, lambda[1]);
  }

  InvariantReport r;
  r.ambient = check.edge_count();
  r.dim = n + m - 1;
  r.reg = reg;
  r.e = e;
  r.a = -(n + m - 1) + reg;
  r.cm = CmStatus::Certified;
  r.provenance = Provenance::Recursion;
  r.order_used = "closed-form";
  r.hilbertian = r.a < 0 ? HilbertianClass::Hilbertian
                         : (r.a == 0 ? HilbertianClass::AlmostHilbertian
                                     : HilbertianClass::Neither);
  r.notes.push_back("Ferrers closed-form invariants");
  return r;
}

Graph glue_cycle(const Graph& g, const std::string& edge_label,
                 int cycle_length) {
  if (cycle_length < 4 || cycle_length % 2 != 0)
    throw std::invalid_argument("cycle length must be even and at least 4");
  auto eidx = g.edge_index(edge_label);
  if (!eidx) throw std::invalid_argument("unknown edge " + edge_label);
  const GraphEdge& e = g.edges()[*eidx];

  std::set<std::string> vnames(g.vertices().begin(), g.vertices().end());
  std::set<std::string> lnames;
  for (const auto& ed : g.edges()) lnames.insert(ed.label);
  auto fresh = [](std::set<std::string>& used, const std::string& stem) {
    for (int k = 1;; ++k) {
      std::string name = stem + std::to_string(k);
      if (used.insert(name).second) return name;
    }
  };

  std::vector<std::string> vertices = g.vertices();
  std::vector<GraphEdge> edges = g.edges();
  // Path of new vertices joining the two endpoints of the glued edge; the
  // identified cycle edge f_{2d} is the existing edge e.
  std::vector<int> chain{e.v};
  for (int i = 0; i < cycle_length - 2; ++i) {
    std::string w = fresh(vnames, "w");
    vertices.push_back(w);
    chain.push_back(static_cast<int>(vertices.size()) - 1);
  }
  chain.push_back(e.u);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    std::string label = fresh(lnames, "f");
    edges.push_back({label, chain[i], chain[i + 1]});
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph grd_graph(int r, int d) {
  if (r < 3 || d < 1) throw std::invalid_argument("need r >= 3 and d >= 1");
  std::vector<std::string> vertices{"x1", "x2"};
  for (int i = 1; i <= d; ++i) vertices.push_back("y" + std::to_string(i));
  for (int i = 1; i <= 2 * r - 3; ++i)
    vertices.push_back("z" + std::to_string(i));
  auto vid = [&](const std::string& name) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return static_cast<int>(i);
    throw std::logic_error("grd vertex");
  };
  std::vector<GraphEdge> edges;
  for (int i = 1; i <= d; ++i)
    edges.push_back(
        {"a" + std::to_string(i), vid("x1"), vid("y" + std::to_string(i))});
  for (int i = 1; i <= d; ++i)
    edges.push_back(
        {"b" + std::to_string(i), vid("x2"), vid("y" + std::to_string(i))});
  edges.push_back({"e1", vid("x1"), vid("z1")});
  for (int j = 2; j <= 2 * r - 3; ++j)
    edges.push_back({"e" + std::to_string(j),
                     vid("z" + std::to_string(j - 1)),
                     vid("z" + std::to_string(j))});
  edges.push_back({"e" + std::to_string(2 * r - 2),
                   vid("z" + std::to_string(2 * r - 3)), vid("x2")});
  return Graph(std::move(vertices), std::move(edges));
}

int bipartite_a(const Graph& g, int reg_of_quotient) {
  if (!g.is_bipartite())
    throw std::invalid_argument("bipartite_a requires a bipartite graph");
  return reg_of_quotient - (g.vertex_count() - 1);
}

bool is_chordal_bipartite(const Graph& g) {
  for (const auto& cyc : g.simple_cycles()) {
    if (cyc.size() < 6) continue;
    // Recover the vertex sequence of the cycle.
    std::vector<int> verts;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const GraphEdge& a = edges[cyc[i]];
      const GraphEdge& b = edges[cyc[(i + 1) % cyc.size()]];
      int shared = (a.u == b.u || a.u == b.v) ? a.u : a.v;
      verts.push_back(shared);
    }
    bool chord = false;
    const int len = static_cast<int>(verts.size());
    for (int i = 0; i < len && !chord; ++i) {
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;  // consecutive around the cycle
        if (g.adjacent(verts[i], verts[j])) {
          chord = true;
          break;
        }
      }
    }
    if (!chord) return false;
  }
  return true;
}

StripResult strip_leaves(const Graph& g) {
  StripResult out;
  std::vector<std::string> vertices = g.vertices();
  std::vector<GraphEdge> edges = g.edges();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(vertices.size(), 0);
    for (const auto& e : edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (degree[edges[i].u] == 1 || degree[edges[i].v] == 1) {
        out.removed_edges.push_back(edges[i].label);
        edges.erase(edges.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  // Drop isolated vertices.
  std::vector<bool> used(vertices.size(), false);
  for (const auto& e : edges) {
    used[e.u] = true;
    used[e.v] = true;
  }
  std::vector<std::string> kept;
  std::vector<int> remap(vertices.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (used[i]) {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(vertices[i]);
    } else {
      out.removed_vertices.push_back(vertices[i]);
    }
  }
  for (auto& e : edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  out.graph = Graph(std::move(kept), std::move(edges));
  return out;
}

ToricInvariantsResult toric_invariants(const Graph& g,
                                       std::optional<int> walk_bound) {
  ToricInvariantsResult out;
  out.strip = strip_leaves(g);
  ToricIdealResult stripped = toric_ideal(out.strip.graph, walk_bound);
  ToricIdealResult full = toric_ideal(g, walk_bound);
  out.ideal = full.ideal;
  out.generators_certified = full.certified;

  CmStatus cm = g.is_bipartite() ? CmStatus::Certified : CmStatus::Unknown;
  InvariantReport r = invariants_direct(stripped.ideal, cm);
  const int removed = static_cast<int>(out.strip.removed_edges.size());
  r.ambient += removed;
  r.dim += removed;
  r.a -= removed;
  if (cm != CmStatus::Unknown) {
    // Quotients by toric ideals of bipartite graphs are Cohen-Macaulay.
    r.hilbertian = r.a < 0 ? HilbertianClass::Hilbertian
                           : (r.a == 0 ? HilbertianClass::AlmostHilbertian
                                       : HilbertianClass::Neither);
    r.notes.push_back("Cohen-Macaulay: toric ideal of a bipartite graph");
  }
  if (removed > 0) {
    std::string note = "leaf edges stripped:";
    for (const auto& l : out.strip.removed_edges) note += " " + l;
    r.notes.push_back(note);
  }
  out.report = r;
  return out;
}

}  // namespace gvd
