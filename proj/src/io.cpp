#include "wallcube/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wallcube::io {
namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& detail) {
  throw Error(ErrorKind::ParseError, where, detail);
}

Json parse_json(std::string_view text, const char* where) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(where, e.what());
  }
}

std::string string_of(const Json& value, const char* where, const char* what) {
  if (!value.is_string()) parse_error(where, std::string(what) + " must be a string, got " + value.dump());
  return value.get<std::string>();
}

Json names_of(const WallSpace& space, Mask side) {
  Json out = Json::array();
  for (int x : bit_indices(side)) out.push_back(space.names()[static_cast<std::size_t>(x)]);
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  // width counts code points so "σ_" lines up
  std::size_t cps = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++cps;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

}  // namespace

WallSpaceDraft draft_from_json(const Json& doc) {
  const char* where = "cli::parse_wallspace";
  if (!doc.is_object()) parse_error(where, "top level must be an object");
  if (!doc.contains("points") || !doc.at("points").is_array())
    parse_error(where, "missing \"points\" array");
  if (!doc.contains("walls") || !doc.at("walls").is_array())
    parse_error(where, "missing \"walls\" array");

  WallSpaceDraft draft;
  std::map<std::string, int> index;
  for (const auto& p : doc.at("points")) {
    auto name = string_of(p, where, "point name");
    if (!index.emplace(name, static_cast<int>(draft.names.size())).second)
      parse_error(where, "duplicate point name '" + name + "'");
    draft.names.push_back(std::move(name));
  }
  if (draft.names.size() > static_cast<std::size_t>(kMaxPoints))
    throw Error(ErrorKind::TooManyPoints, where, std::to_string(draft.names.size()) + " points");
  const Mask all = low_bits(static_cast<int>(draft.names.size()));
  for (const auto& wall : doc.at("walls")) {
    if (!wall.is_array()) parse_error(where, "each wall must be a list of point names");
    Mask side = 0;
    for (const auto& token : wall) {
      const auto name = string_of(token, where, "point name");
      auto it = index.find(name);
      if (it == index.end()) parse_error(where, "unknown point name '" + name + "'");
      side |= bit(it->second);
    }
    draft.walls.push_back({side, all & ~side});
  }
  return draft;
}

WallSpaceDraft parse_wallspace_draft(std::string_view text) {
  return draft_from_json(parse_json(text, "cli::parse_wallspace"));
}

SpacePtr parse_wallspace(std::string_view text) { return WallSpace::build(parse_wallspace_draft(text)); }

Json export_wallspace(const WallSpace& space) {
  Json walls = Json::array();
  for (int i = 1; i < space.wall_count(); ++i) walls.push_back(names_of(space, space.walls()[static_cast<std::size_t>(i)].side0));
  return Json{{"points", space.names()}, {"walls", walls}};
}

Graph parse_graph(std::string_view text) {
  const char* where = "cli::parse_graph";
  const Json doc = parse_json(text, where);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") || !doc.at("edges").is_array())
    parse_error(where, "expected {\"vertices\": ..., \"edges\": [...]}");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  const auto& vertices = doc.at("vertices");
  if (vertices.is_number_integer()) {
    const int n = vertices.get<int>();
    if (n < 0) parse_error(where, "negative vertex count");
    for (int v = 0; v < n; ++v) {
      names.push_back(std::to_string(v));
      index.emplace(names.back(), v);
    }
  } else if (vertices.is_array()) {
    for (const auto& v : vertices) {
      auto name = string_of(v, where, "vertex name");
      if (!index.emplace(name, static_cast<int>(names.size())).second)
        parse_error(where, "duplicate vertex name '" + name + "'");
      names.push_back(std::move(name));
    }
  } else {
    parse_error(where, "\"vertices\" must be a count or a list of names");
  }
  auto lookup = [&](const Json& token) {
    const std::string name = token.is_number_integer() ? std::to_string(token.get<int>())
                                                        : string_of(token, where, "vertex name");
    auto it = index.find(name);
    if (it == index.end()) parse_error(where, "unknown vertex '" + name + "'");
    return it->second;
  };
  Graph g(static_cast<int>(names.size()), names);
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) parse_error(where, "each edge must be a pair");
    g.add_edge(lookup(e[0]), lookup(e[1]));
  }
  return g;
}

Json export_raw_graph(const Graph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::string vertex_label(const MedianGraph& g, int v) {
  const int x = g.principal_point(v);
  if (x >= 0) return "σ_" + g.space()->names()[static_cast<std::size_t>(x)];
  return to_bitstring(g.bits(v), g.space()->wall_count());
}

Json export_graph(const MedianGraph& g) {
  const WallSpace& s = *g.space();
  Json walls = Json::array();
  for (int i = 0; i < s.wall_count(); ++i) {
    const Wall& w = s.walls()[static_cast<std::size_t>(i)];
    walls.push_back(Json{{"index", i}, {"side0", names_of(s, w.side0)}, {"side1", names_of(s, w.side1)}});
  }
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int x = g.principal_point(v);
    vertices.push_back(Json{{"index", v},
                            {"bits", to_bitstring(g.bits(v), s.wall_count())},
                            {"principal", x >= 0 ? Json(s.names()[static_cast<std::size_t>(x)]) : Json(nullptr)}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"wall", e.wall}});
  Json sigma = Json::array();
  for (int x = 0; x < s.point_count(); ++x)
    sigma.push_back(Json{{"point", s.names()[static_cast<std::size_t>(x)]}, {"vertex", g.sigma(x)}});
  return Json{{"points", s.names()}, {"walls", walls}, {"vertices", vertices}, {"edges", edges}, {"sigma", sigma}};
}

std::string graph_dot(const MedianGraph& g) {
  std::ostringstream out;
  out << "graph cubulation {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << vertex_label(g, v) << "\"];\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << " [label=\"" << e.wall << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string graph_table(const MedianGraph& g) {
  const int w = g.space()->wall_count();
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "  edges: " << g.edges().size() << "  walls: " << w << '\n';
  std::size_t width = 6;
  for (int v = 0; v < g.vertex_count(); ++v) width = std::max(width, vertex_label(g, v).size());
  out << pad("vertex", 7) << pad("label", width + 2) << "bits\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << pad(std::to_string(v), 7) << pad(vertex_label(g, v), width + 2) << to_bitstring(g.bits(v), w) << '\n';
  out << "edges (u v wall):\n";
  for (const auto& e : g.edges()) out << "  " << e.u << ' ' << e.v << ' ' << e.wall << '\n';
  return out.str();
}

Json export_complex(const CubeComplex& c) {
  const int w = c.graph().space()->wall_count();
  auto cube_json = [w](const Cube& cube) {
    return Json{{"base", to_bitstring(cube.base, w)}, {"walls", bit_indices(cube.walls)}};
  };
  Json dims = Json::array();
  for (int k = 2; k <= c.dimension(); ++k) {
    Json list = Json::array();
    for (const Cube& cube : c.cubes(k)) list.push_back(cube_json(cube));
    dims.push_back(Json{{"dimension", k}, {"cubes", list}});
  }
  Json maximal = Json::array();
  for (const Cube& cube : maximal_cubes(c)) maximal.push_back(cube_json(cube));
  return Json{{"f_vector", c.f_vector()},
              {"euler_characteristic", euler_characteristic(c)},
              {"cubes", dims},
              {"maximal", maximal}};
}

std::string complex_table(const CubeComplex& c) {
  const int w = c.graph().space()->wall_count();
  std::ostringstream out;
  out << "f-vector: (";
  const auto f = c.f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) out << (k ? ", " : "") << f[k];
  out << ")\neuler characteristic: " << euler_characteristic(c) << '\n';
  for (int k = 2; k <= c.dimension(); ++k) {
    out << "dimension " << k << ":\n";
    for (const Cube& cube : c.cubes(k)) {
      out << "  " << to_bitstring(cube.base, w) << " {";
      const auto walls = bit_indices(cube.walls);
      for (std::size_t i = 0; i < walls.size(); ++i) out << (i ? ", " : "") << walls[i];
      out << "}\n";
    }
  }
  out << "maximal cubes: " << maximal_cubes(c).size() << '\n';
  return out.str();
}

Json export_report(const VerificationReport& r) {
  return Json{{"check", r.check},
              {"status", r.passed ? "pass" : "fail"},
              {"counterexample", r.passed ? Json(nullptr) : Json(r.counterexample)},
              {"detail", r.detail},
              {"coverage", r.coverage()},
              {"seed", r.seed ? Json(*r.seed) : Json(nullptr)}};
}

std::string reports_table(const std::vector<VerificationReport>& reports) {
  std::size_t check_width = 5;
  std::size_t coverage_width = 8;
  for (const auto& r : reports) {
    check_width = std::max(check_width, r.check.size());
    coverage_width = std::max(coverage_width, r.coverage().size());
  }
  std::ostringstream out;
  out << pad("check", check_width + 2) << pad("status", 8) << pad("coverage", coverage_width + 2) << "detail\n";
  for (const auto& r : reports) {
    std::string detail = r.detail;
    if (!r.passed && !r.counterexample.empty()) {
      detail += " [counterexample:";
      for (int v : r.counterexample) detail += " " + std::to_string(v);
      detail += "]";
    }
    out << pad(r.check, check_width + 2) << pad(r.passed ? "PASS" : "FAIL", 8)
        << pad(r.coverage(), coverage_width + 2) << detail << '\n';
  }
  return out.str();
}

PointMap parse_point_map(std::string_view text, const WallSpace& source, const WallSpace& target) {
  const char* where = "cli::parse_point_map";
  const Json doc = parse_json(text, where);
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) pairs.emplace_back(key, string_of(value, where, "target point"));
  } else if (doc.is_array()) {
    for (const auto& e : doc) {
      if (!e.is_array() || e.size() != 2) parse_error(where, "each entry must be a [source, target] pair");
      pairs.emplace_back(string_of(e[0], where, "source point"), string_of(e[1], where, "target point"));
    }
  } else {
    parse_error(where, "expected an object or a list of pairs");
  }
  PointMap map(static_cast<std::size_t>(source.point_count()), -1);
  for (const auto& [from, to] : pairs) {
    const auto x = source.point_index(from);
    if (!x) parse_error(where, "unknown source point '" + from + "'");
    const auto y = target.point_index(to);
    if (!y) parse_error(where, "unknown target point '" + to + "'");
    if (map[static_cast<std::size_t>(*x)] >= 0) parse_error(where, "source point '" + from + "' mapped twice");
    map[static_cast<std::size_t>(*x)] = *y;
  }
  for (int x = 0; x < source.point_count(); ++x)
    if (map[static_cast<std::size_t>(x)] < 0)
      parse_error(where, "source point '" + source.names()[static_cast<std::size_t>(x)] + "' is not mapped");
  return map;
}

PointMap parse_cycles(std::string_view text, const WallSpace& space) {
  const char* where = "cli::parse_cycles";
  PointMap perm(static_cast<std::size_t>(space.point_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<int> seen;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  skip_space();
  if (pos == text.size()) parse_error(where, "empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') parse_error(where, "expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size()) parse_error(where, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != ')' && text[pos] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(')
        ++pos;
      const std::string token(text.substr(start, pos - start));
      if (token.empty()) parse_error(where, "unexpected '(' inside a cycle");
      const auto x = space.point_index(token);
      if (!x) parse_error(where, "unknown point name '" + token + "'");
      if (!seen.insert(*x).second) parse_error(where, "point '" + token + "' appears twice");
      cycle.push_back(*x);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      perm[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return perm;
}

}  // namespace wallcube::io
