#ifndef GVD_JSON_IO_HPP
#define GVD_JSON_IO_HPP

#include <json.hpp>

#include "gvd/decompose.hpp"
#include "gvd/simplicial.hpp"
#include "gvd/toric.hpp"

namespace gvd {

using Json = nlohmann::json;

// {"ring": ["x","y",...], "generators": ["y*z - x*w", ...]}
Json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

// {"vertices": [...], "edges": [{"label":"e1","ends":["x1","y1"]}, ...]}
Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& j);

// {"vertices": [...], "facets": [["1","2"], ...]}
Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

Json report_to_json(const InvariantReport& report);

Json split_to_json(const GVDSplit& split);
Json tree_to_json(const GVDTree& tree);
Json trace_to_json(const VDTrace& trace);

Json load_json_file(const std::string& path);

}  // namespace gvd

#endif
