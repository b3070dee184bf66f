#include "gvd/json_io.hpp"

#include <fstream>

#include "gvd/parse.hpp"

namespace gvd {

namespace {

Json poly_list(const std::vector<Polynomial>& polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(to_string(p));
  return arr;
}

Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json node_to_json(const std::shared_ptr<const GVDNode>& node) {
  if (!node) return nullptr;
  Json j;
  const Ideal& I = node->ideal;
  j["ring"] = I.ring()->variables();
  j["ideal"] = poly_list(I.generators());
  j["unmixed"] = to_string(node->unmixed);
  switch (node->kind) {
    case NodeKind::BaseUnit:
      j["verdict"] = "base-unit";
      break;
    case NodeKind::BaseVariables:
      j["verdict"] = "base-variables";
      break;
    case NodeKind::Decomposed: {
      j["verdict"] = "decomposed";
      const GVDSplit& s = *node->split;
      j["y"] = I.ring()->variable(s.y);
      j["degeneracy"] = to_string(s.degeneracy);
      j["C"] = poly_list(s.C.generators());
      j["N"] = poly_list(s.N.generators());
      j["cBranch"] = node_to_json(node->c_child);
      j["nBranch"] = node_to_json(node->n_child);
      break;
    }
    case NodeKind::Failed: {
      j["verdict"] = "failed";
      j["reason"] = node->reason;
      Json attempts = Json::array();
      for (const auto& [y, why] : node->attempts) {
        attempts.push_back(
            Json{{"y", I.ring()->variable(y)}, {"reason", why}});
      }
      j["attempts"] = attempts;
      break;
    }
  }
  return j;
}

Json vd_node_to_json(const std::shared_ptr<const VDNode>& node) {
  if (!node) return nullptr;
  Json j;
  Json facets = Json::array();
  for (const auto& f : node->complex.facets()) {
    Json facet = Json::array();
    for (int v : f) facet.push_back(node->complex.vertices()[v]);
    facets.push_back(facet);
  }
  j["facets"] = facets;
  switch (node->kind) {
    case VDKind::Base:
      j["verdict"] = "base";
      break;
    case VDKind::Cone:
      j["verdict"] = "cone";
      j["vertex"] = node->complex.vertices()[node->vertex];
      j["base"] = vd_node_to_json(node->base_child);
      break;
    case VDKind::Shed:
      j["verdict"] = "shed";
      j["vertex"] = node->complex.vertices()[node->vertex];
      j["deletion"] = vd_node_to_json(node->del_child);
      j["link"] = vd_node_to_json(node->link_child);
      break;
    case VDKind::Failed:
      j["verdict"] = "failed";
      j["reason"] = node->reason;
      break;
  }
  return j;
}

}  // namespace

Json ideal_to_json(const Ideal& ideal) {
  Json j;
  j["ring"] = ideal.ring()->variables();
  j["generators"] = poly_list(ideal.generators());
  return j;
}

Ideal ideal_from_json(const Json& j) {
  if (!j.contains("ring") || !j.contains("generators"))
    throw std::runtime_error("ideal file needs 'ring' and 'generators'");
  RingPtr ring = make_ring(j.at("ring").get<std::vector<std::string>>());
  std::vector<Polynomial> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(parse_polynomial(s.get<std::string>(), ring));
  return Ideal(ring, std::move(gens));
}

Json graph_to_json(const Graph& graph) {
  Json j;
  j["vertices"] = graph.vertices();
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(Json{{"label", e.label},
                         {"ends", Json::array({graph.vertices()[e.u],
                                               graph.vertices()[e.v]})}});
  }
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::runtime_error("graph file needs 'vertices' and 'edges'");
  std::vector<std::string> vertices =
      j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      edges;
  for (const auto& e : j.at("edges")) {
    auto ends = e.at("ends").get<std::vector<std::string>>();
    if (ends.size() != 2)
      throw std::runtime_error("edge must have exactly two ends");
    edges.push_back({e.at("label").get<std::string>(), {ends[0], ends[1]}});
  }
  return Graph::from_ends(std::move(vertices), edges);
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json j;
  j["vertices"] = complex.vertices();
  Json facets = Json::array();
  for (const auto& f : complex.facets()) {
    Json facet = Json::array();
    for (int v : f) facet.push_back(complex.vertices()[v]);
    facets.push_back(facet);
  }
  j["facets"] = facets;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("facets"))
    throw std::runtime_error("complex file needs 'vertices' and 'facets'");
  std::vector<std::string> vertices =
      j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j.at("facets"))
    facets.push_back(f.get<std::vector<std::string>>());
  return SimplicialComplex::from_names(std::move(vertices), facets);
}

Json report_to_json(const InvariantReport& report) {
  Json j;
  Json h = Json::array();
  for (const auto& c : report.h.c) h.push_back(int_to_json(c));
  j["hPoly"] = h;
  j["dim"] = report.dim;
  j["ambient"] = report.ambient;
  if (report.reg)
    j["reg"] = *report.reg;
  else
    j["reg"] = nullptr;
  j["e"] = int_to_json(report.e);
  j["a"] = report.a;
  j["hilbertian"] = to_string(report.hilbertian);
  j["provenance"] = to_string(report.provenance);
  j["cmStatus"] = to_string(report.cm);
  j["order"] = report.order_used;
  j["notes"] = report.notes;
  return j;
}

Json split_to_json(const GVDSplit& split) {
  Json j;
  const RingPtr& ring = split.C.ring();
  j["y"] = ring->variable(split.y);
  j["valid"] = split.valid;
  j["degeneracy"] = to_string(split.degeneracy);
  j["inY"] = poly_list(split.in_y.generators());
  j["C"] = poly_list(split.C.generators());
  j["N"] = poly_list(split.N.generators());
  return j;
}

Json tree_to_json(const GVDTree& tree) {
  Json j;
  j["certified"] = tree.certified;
  j["assumedUnmixedNodes"] = tree.assumed_nodes;
  j["nodes"] = tree.node_count;
  j["tree"] = node_to_json(tree.root);
  return j;
}

Json trace_to_json(const VDTrace& trace) {
  Json j;
  j["decomposable"] = trace.decomposable;
  j["trace"] = vd_node_to_json(trace.root);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace gvd
