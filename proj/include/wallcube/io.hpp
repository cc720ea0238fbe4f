#ifndef WALLCUBE_IO_HPP
#define WALLCUBE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wallcube/cubecomplex.hpp"
#include "wallcube/cubulation.hpp"
#include "wallcube/graph.hpp"
#include "wallcube/morphism.hpp"
#include "wallcube/report.hpp"
#include "wallcube/wallspace.hpp"

namespace wallcube::io {

using Json = nlohmann::ordered_json;

// Wall-space documents:
//   {"points": ["a", "b", "c"], "walls": [["a"], ["a", "b"]]}
// One side per wall; the complement and the trivial wall are implied.

/// Throws ParseError for malformed documents or unknown point names.
WallSpaceDraft draft_from_json(const Json& doc);
WallSpaceDraft parse_wallspace_draft(std::string_view text);
/// Parses and builds; validation errors propagate from WallSpace::build.
SpacePtr parse_wallspace(std::string_view text);
/// Emits side0 of every nontrivial wall.
Json export_wallspace(const WallSpace& space);

// Graph documents:
//   {"vertices": ["u", "v", "w"] | 3, "edges": [["u", "v"], ["v", "w"]]}
Graph parse_graph(std::string_view text);
Json export_raw_graph(const Graph& g);

/// "σ_<name>" for principal vertices, the orientation bitstring otherwise.
std::string vertex_label(const MedianGraph& g, int v);

Json export_graph(const MedianGraph& g);
std::string graph_dot(const MedianGraph& g);
std::string graph_table(const MedianGraph& g);

Json export_complex(const CubeComplex& c);
std::string complex_table(const CubeComplex& c);

Json export_report(const VerificationReport& r);
std::string reports_table(const std::vector<VerificationReport>& reports);

/// {"a": "x", "b": "y"} or [["a", "x"], ["b", "y"]], total on source points.
PointMap parse_point_map(std::string_view text, const WallSpace& source, const WallSpace& target);

/// Cycle notation over point names, e.g. "(0 1 2 3 4 5)" or "(a c)(b)".
/// Points not mentioned are fixed; "()" is the identity.
PointMap parse_cycles(std::string_view text, const WallSpace& space);

}  // namespace wallcube::io

#endif  // WALLCUBE_IO_HPP
