// wallcube: build and check cubulations of finite spaces with walls.
//
//   wallcube validate  FILE
//   wallcube cubulate  FILE [--format json|dot|table]
//   wallcube dist      FILE X Y
//   wallcube median    FILE X Y Z
//   wallcube path      FILE X Y
//   wallcube cubes     FILE [--format json|table]
//   wallcube verify    FILE [--graph] [--seed N]
//   wallcube act       FILE [--gen CYCLES]... [--map MAP --target FILE]
//   wallcube roundtrip GRAPH
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wallcube/cubecomplex.hpp"
#include "wallcube/cubulation.hpp"
#include "wallcube/fixtures.hpp"
#include "wallcube/io.hpp"
#include "wallcube/morphism.hpp"
#include "wallcube/verify.hpp"

namespace {

using namespace wallcube;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string format = "table";
  std::vector<std::string> points;
  std::optional<std::uint64_t> seed;
  bool raw_graph = false;
  std::vector<std::string> generators;
  std::string map_file;
  std::string target_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cli::read", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpacePtr load_space(const std::string& path) {
  auto space = io::parse_wallspace(read_file(path));
  for (const auto& note : space->notes()) std::cerr << "note: " << note << '\n';
  return space;
}

int point_arg(const WallSpace& s, const std::string& name) {
  if (auto x = s.point_index(name)) return *x;
  throw Error(ErrorKind::ParseError, "cli::run", "unknown point name '" + name + "'");
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(io::export_report(r));
    emit(Json{{"reports", list}});
  } else {
    std::cout << io::reports_table(reports);
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return all_pass ? kExitOk : kExitFailed;
}

int run_validate(const Options& o) {
  const auto draft = io::parse_wallspace_draft(read_file(o.input));
  const auto report = validate(draft);
  if (o.format == "json") {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      Json entry{{"kind", std::string(to_string(v.kind))}, {"message", v.message}};
      if (v.wall >= 0) entry["wall"] = v.wall;
      if (v.x >= 0) entry["x"] = draft.names[static_cast<std::size_t>(v.x)];
      if (v.y >= 0) entry["y"] = draft.names[static_cast<std::size_t>(v.y)];
      violations.push_back(entry);
    }
    emit(Json{{"ok", report.ok()}, {"violations", violations}, {"notes", report.notes}});
  } else {
    for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
    for (const auto& v : report.violations) std::cout << to_string(v.kind) << ": " << v.message << '\n';
    std::cout << (report.ok() ? "ok" : "invalid") << '\n';
  }
  return report.ok() ? kExitOk : kExitFailed;
}

int run_cubulate(const Options& o) {
  const MedianGraph g = cubulate(load_space(o.input));
  if (o.format == "json") emit(io::export_graph(g));
  else if (o.format == "dot") std::cout << io::graph_dot(g);
  else std::cout << io::graph_table(g);
  return kExitOk;
}

int run_dist(const Options& o) {
  const auto space = load_space(o.input);
  const int d = wall_metric(*space, point_arg(*space, o.points.at(0)), point_arg(*space, o.points.at(1)));
  if (o.format == "json") emit(Json{{"distance", d}});
  else std::cout << d << '\n';
  return kExitOk;
}

Json vertex_json(const MedianGraph& g, int v) {
  return Json{{"index", v}, {"label", io::vertex_label(g, v)}, {"bits", to_bitstring(g.bits(v), g.space()->wall_count())}};
}

int run_median(const Options& o) {
  const auto space = load_space(o.input);
  const MedianGraph g = cubulate(space);
  const int m = median_vertex(g, g.sigma(point_arg(*space, o.points.at(0))), g.sigma(point_arg(*space, o.points.at(1))),
                              g.sigma(point_arg(*space, o.points.at(2))));
  if (o.format == "json") emit(Json{{"median", vertex_json(g, m)}});
  else std::cout << io::vertex_label(g, m) << ' ' << to_bitstring(g.bits(m), space->wall_count()) << '\n';
  return kExitOk;
}

int run_path(const Options& o) {
  const auto space = load_space(o.input);
  const MedianGraph g = cubulate(space);
  const auto path = geodesic_path(g, g.sigma(point_arg(*space, o.points.at(0))), g.sigma(point_arg(*space, o.points.at(1))));
  if (o.format == "json") {
    Json list = Json::array();
    for (int v : path) list.push_back(vertex_json(g, v));
    emit(Json{{"length", path.size() - 1}, {"path", list}});
  } else {
    for (std::size_t k = 0; k < path.size(); ++k) std::cout << (k ? " -> " : "") << io::vertex_label(g, path[k]);
    std::cout << '\n';
  }
  return kExitOk;
}

int run_cubes(const Options& o) {
  const CubeComplex c = fill_cubes(cubulate(load_space(o.input)));
  if (o.format == "json") emit(io::export_complex(c));
  else std::cout << io::complex_table(c);
  return kExitOk;
}

std::vector<VerificationReport> space_checks(const MedianGraph& g) {
  std::vector<VerificationReport> out;
  out.push_back(verify_median_graph(g.underlying()));
  out.push_back(verify_metric_coincidence(g));
  out.push_back(verify_span(g));
  if (g.vertex_count() <= 16) out.push_back(verify_halfspace_bijection(g));
  out.push_back(verify_interval_bound(g));
  out.push_back(verify_square_crossing(fill_cubes(g)));
  return out;
}

int run_verify(const Options& o) {
  if (o.raw_graph) {
    const Graph g = io::parse_graph(read_file(o.input));
    return emit_reports({verify_median_graph(g)}, o.format);
  }
  const MedianGraph g = cubulate(load_space(o.input));
  if (g.vertex_count() > 16)
    std::cerr << "note: halfspace-bijection skipped (" << g.vertex_count() << " vertices > 16)\n";
  auto reports = space_checks(g);
  if (o.seed) {
    constexpr int kCorpus = 20;
    std::mt19937_64 rng(*o.seed);
    std::vector<VerificationReport> merged;
    for (int k = 0; k < kCorpus; ++k) {
      const MedianGraph r = cubulate(fixtures::random_wallspace(rng));
      for (auto& rep : space_checks(r)) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.check == rep.check; });
        if (it == merged.end()) {
          rep.detail = "random corpus";
          merged.push_back(rep);
          it = merged.end() - 1;
        } else if (it->passed && !rep.passed) {
          *it = rep;
        }
        if (!rep.passed) it->detail = "random instance " + std::to_string(k) + ": " + rep.detail;
      }
    }
    for (auto& m : merged) {
      m.seed = *o.seed;
      if (m.passed) m.detail = std::to_string(kCorpus) + " random wall spaces";
      m.check = "random/" + m.check;
      reports.push_back(m);
    }
  }
  return emit_reports(reports, o.format);
}

int run_act(const Options& o) {
  const auto space = load_space(o.input);
  const MedianGraph g = cubulate(space);
  bool ok = true;
  Json doc = Json::object();
  std::ostringstream table;

  if (!o.map_file.empty() || !o.target_file.empty()) {
    if (o.map_file.empty() || o.target_file.empty())
      throw Error(ErrorKind::ParseError, "cli::act", "--map and --target must be given together");
    const auto target = load_space(o.target_file);
    const WallMap m{space, target, io::parse_point_map(read_file(o.map_file), *space, *target)};
    const auto check = validate_morphism(m);
    Json mj{{"morphism", check.ok}};
    if (!check.ok) {
      const auto& off = *check.offending;
      Json side = Json::array();
      for (int y : bit_indices(target->walls()[static_cast<std::size_t>(off.wall)].side(off.side)))
        side.push_back(target->names()[static_cast<std::size_t>(y)]);
      Json pre = Json::array();
      for (int x : bit_indices(off.preimage)) pre.push_back(space->names()[static_cast<std::size_t>(x)]);
      mj["offending"] = Json{{"wall", off.wall}, {"side", side}, {"preimage", pre}};
      table << "not a morphism: preimage of " << side.dump() << " is " << pre.dump() << ", not a halfspace\n";
      ok = false;
    } else {
      const MedianGraph h = cubulate(target);
      const InducedMap f = induced_graph_map(m, g, h);
      Json image = Json::array();
      table << "induced map (" << f.label() << "):\n";
      for (int v = 0; v < g.vertex_count(); ++v) {
        const int u = f.image[static_cast<std::size_t>(v)];
        image.push_back(Json{{"source", io::vertex_label(g, v)}, {"target", io::vertex_label(h, u)}});
        table << "  " << io::vertex_label(g, v) << " -> " << io::vertex_label(h, u) << '\n';
      }
      mj["label"] = f.label();
      mj["commutes_with_sigma"] = f.commutes_with_sigma;
      mj["median_preserving"] = f.median_preserving;
      mj["adjacency_preserving"] = f.adjacency_preserving;
      mj["image"] = image;
      table << "commutes with sigma: " << (f.commutes_with_sigma ? "yes" : "no")
            << "\nmedian preserving: " << (f.median_preserving ? "yes" : "no")
            << "\nadjacency preserving: " << (f.adjacency_preserving ? "yes" : "no") << '\n';
      ok = ok && f.commutes_with_sigma && f.median_preserving;
    }
    doc["map"] = mj;
  }

  if (!o.generators.empty()) {
    GroupAction action{space, {}};
    for (const auto& gen : o.generators) action.generators.push_back(io::parse_cycles(gen, *space));
    const auto extensions = extend_action(action, g);
    Json gens = Json::array();
    for (std::size_t k = 0; k < extensions.size(); ++k) {
      const auto& f = extensions[k];
      const bool good = f.is_graph_automorphism() && f.median_preserving && f.commutes_with_sigma;
      ok = ok && good;
      Json image = Json::array();
      for (int u : f.image) image.push_back(u);
      gens.push_back(Json{{"generator", o.generators[k]},
                          {"point_order", permutation_order(action.generators[k])},
                          {"vertex_order", permutation_order(f.image)},
                          {"label", f.label()},
                          {"equivariant", f.commutes_with_sigma},
                          {"median_preserving", f.median_preserving},
                          {"vertex_map", image}});
      table << "generator " << o.generators[k] << ": " << f.label() << ", order "
            << permutation_order(f.image) << ", equivariant " << (f.commutes_with_sigma ? "yes" : "no") << '\n';
      for (int v = 0; v < g.vertex_count(); ++v)
        table << "  " << io::vertex_label(g, v) << " -> " << io::vertex_label(g, f.image[static_cast<std::size_t>(v)]) << '\n';
    }
    const auto composition = verify_action_composition(action, g);
    ok = ok && composition.passed;
    doc["generators"] = gens;
    doc["composition"] = io::export_report(composition);
    table << io::reports_table({composition});
  }

  if (o.generators.empty() && o.map_file.empty())
    throw Error(ErrorKind::ParseError, "cli::act", "give at least one --gen or a --map/--target pair");
  if (o.format == "json") emit(doc);
  else std::cout << table.str();
  return ok ? kExitOk : kExitFailed;
}

int run_roundtrip(const Options& o) {
  const Graph g = io::parse_graph(read_file(o.input));
  if (g.vertex_count() > 64)
    throw Error(ErrorKind::GraphTooLarge, "cli::roundtrip", std::to_string(g.vertex_count()) + " vertices");
  std::vector<VerificationReport> reports{verify_median_graph(g)};
  if (reports.front().passed) {
    const MedianGraph c = cubulate(derive_wallspace(g));
    const auto iso = graphs_isomorphic(g, c.underlying());
    reports.push_back(iso ? VerificationReport::pass("isomorphic", std::to_string(g.vertex_count()) + " vertices")
                          : VerificationReport::fail("isomorphic", {}, "cubulation is not isomorphic to the input"));
    reports.push_back(verify_idempotence(g));
  }
  return emit_reports(reports, o.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubulations of finite spaces with walls"};
  app.require_subcommand(1, 1);
  Options o;
  const std::vector<std::string> graph_formats{"json", "dot", "table"};
  const std::vector<std::string> formats{"json", "table"};

  auto add = [&](const char* name, const char* help, const std::vector<std::string>& allowed) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.input, "input document")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    return sub;
  };
  auto* validate_cmd = add("validate", "check a wall-space document", formats);
  auto* cubulate_cmd = add("cubulate", "build the median graph of ultrafilters", graph_formats);
  auto* dist_cmd = add("dist", "wall metric between two points", formats);
  dist_cmd->add_option("points", o.points, "two point names")->expected(2)->required();
  auto* median_cmd = add("median", "median vertex of three principal ultrafilters", formats);
  median_cmd->add_option("points", o.points, "three point names")->expected(3)->required();
  auto* path_cmd = add("path", "geodesic between two principal ultrafilters", formats);
  path_cmd->add_option("points", o.points, "two point names")->expected(2)->required();
  auto* cubes_cmd = add("cubes", "fill cubes and report the f-vector", formats);
  auto* verify_cmd = add("verify", "run the structural checks", formats);
  verify_cmd->add_flag("--graph", o.raw_graph, "input is a raw graph; check the median property only");
  verify_cmd->add_option("--seed", o.seed, "also check a random corpus drawn from this seed");
  auto* act_cmd = add("act", "extend a group action or a morphism to the cubulation", formats);
  act_cmd->add_option("--gen", o.generators, "generator in cycle notation, e.g. \"(0 1 2 3 4 5)\"");
  act_cmd->add_option("--map", o.map_file, "point map document");
  act_cmd->add_option("--target", o.target_file, "target wall-space document");
  auto* roundtrip_cmd = add("roundtrip", "derive walls from a median graph and cubulate again", formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(o);
    if (cubulate_cmd->parsed()) return run_cubulate(o);
    if (dist_cmd->parsed()) return run_dist(o);
    if (median_cmd->parsed()) return run_median(o);
    if (path_cmd->parsed()) return run_path(o);
    if (cubes_cmd->parsed()) return run_cubes(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (act_cmd->parsed()) return run_act(o);
    if (roundtrip_cmd->parsed()) return run_roundtrip(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
