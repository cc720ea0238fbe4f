#include <functional>
#include <random>

#include "doctest.h"
#include "wallcube/fixtures.hpp"
#include "wallcube/io.hpp"

using namespace wallcube;
namespace fx = wallcube::fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("parse wall spaces") {
  const auto p3 = io::parse_wallspace(R"({"points": ["a", "b", "c"], "walls": [["a"], ["a", "b"]]})");
  CHECK(*p3 == *fx::p3());
  // the complement names the same wall
  CHECK(*io::parse_wallspace(R"({"points": ["a", "b", "c"], "walls": [["b", "c"], ["c"]]})") == *fx::p3());

  const auto dup = io::parse_wallspace(R"({"points": ["a", "b"], "walls": [["a"], ["b"]]})");
  CHECK(dup->wall_count() == 2);
  CHECK(dup->notes().size() == 2);

  CHECK(kind_of([] { io::parse_wallspace(R"({"points": ["a", "b"], "walls": [["z"]]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_wallspace(R"({"points": ["a", "a"], "walls": []})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_wallspace(R"({"points": ["a"]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_wallspace(R"({"points": ["a", "b"], "walls": ["a"]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_wallspace("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_wallspace(R"({"points": [], "walls": []})"); }) == ErrorKind::EmptyPointSet);
  CHECK(kind_of([] { io::parse_wallspace(R"({"points": ["a", "b", "c"], "walls": [["a"]]})"); }) ==
        ErrorKind::UnseparatedPair);
}

TEST_CASE("export round trip") {
  for (const auto& s : {fx::pt(), fx::two(), fx::p3(), fx::hex6()})
    CHECK(*io::parse_wallspace(io::export_wallspace(*s).dump()) == *s);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = fx::random_wallspace(rng);
    const auto text = io::export_wallspace(*s).dump();
    const auto back = io::parse_wallspace(text);
    CHECK(*back == *s);
    CHECK(io::export_wallspace(*back).dump() == text);
  }
}

TEST_CASE("exports are deterministic") {
  const auto a = cubulate(fx::hex6());
  const auto b = cubulate(io::parse_wallspace(io::export_wallspace(*fx::hex6()).dump()));
  CHECK(io::export_graph(a).dump(2) == io::export_graph(b).dump(2));
  CHECK(io::graph_dot(a) == io::graph_dot(b));
  CHECK(io::graph_table(a) == io::graph_table(b));
  CHECK(io::export_complex(fill_cubes(a)).dump() == io::export_complex(fill_cubes(b)).dump());

  const auto doc = io::export_graph(a);
  CHECK(doc.at("vertices").size() == 8);
  CHECK(doc.at("edges").size() == 12);
  CHECK(doc.at("walls").at(0).at("side1").empty());
  CHECK(doc.at("vertices").at(0).at("bits") == "0000");
  CHECK(io::export_complex(fill_cubes(a)).at("f_vector") == io::Json::array({8, 12, 6, 1}));
}

TEST_CASE("vertex labels") {
  const auto g = cubulate(fx::hex6());
  for (int x = 0; x < 6; ++x) CHECK(io::vertex_label(g, g.sigma(x)) == "σ_" + std::to_string(x));
  const int m = median_vertex(g, g.sigma(0), g.sigma(2), g.sigma(4));
  CHECK(io::vertex_label(g, m) == "0001");
}

TEST_CASE("parse graphs") {
  const auto named = io::parse_graph(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})");
  CHECK(named.vertex_count() == 3);
  CHECK(named.has_edge(0, 1));
  CHECK_FALSE(named.has_edge(0, 2));
  CHECK(named.name(2) == "c");

  const auto counted = io::parse_graph(R"({"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]})");
  CHECK(counted.edges().size() == 4);
  CHECK(io::parse_graph(io::export_raw_graph(counted).dump()).edges() == counted.edges());

  CHECK(kind_of([] { io::parse_graph(R"({"vertices": 2, "edges": [[0, 5]]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_graph(R"({"vertices": 2, "edges": [[0]]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_graph(R"({"edges": []})"); }) == ErrorKind::ParseError);
}

TEST_CASE("parse point maps") {
  const auto p3 = fx::p3();
  const auto two = fx::two();
  CHECK(io::parse_point_map(R"({"a": "a", "b": "a", "c": "b"})", *p3, *two) == PointMap{0, 0, 1});
  CHECK(io::parse_point_map(R"([["c", "a"], ["b", "b"], ["a", "b"]])", *p3, *two) == PointMap{1, 1, 0});
  CHECK(kind_of([&] { io::parse_point_map(R"({"a": "a", "b": "a"})", *p3, *two); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { io::parse_point_map(R"({"a": "q", "b": "a", "c": "a"})", *p3, *two); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([&] { io::parse_point_map(R"([["a", "a"], ["a", "b"]])", *p3, *two); }) == ErrorKind::ParseError);
}

TEST_CASE("parse cycles") {
  const auto hex = fx::hex6();
  CHECK(io::parse_cycles("(0 1 2 3 4 5)", *hex) == PointMap{1, 2, 3, 4, 5, 0});
  CHECK(io::parse_cycles("(0 1)(5 2)(4 3)", *hex) == PointMap{1, 0, 5, 4, 3, 2});
  CHECK(io::parse_cycles("(0,1) (2)", *hex) == PointMap{1, 0, 2, 3, 4, 5});
  CHECK(io::parse_cycles("()", *hex) == PointMap{0, 1, 2, 3, 4, 5});
  CHECK(io::parse_cycles("(a c)", *fx::p3()) == PointMap{2, 1, 0});
  for (const char* bad : {"", "(0 1", "0 1", "(0 0)", "(0 9)", "(0 (1))"})
    CHECK_MESSAGE(kind_of([&] { io::parse_cycles(bad, *hex); }) == ErrorKind::ParseError, bad);
}

TEST_CASE("report export") {
  const auto pass = VerificationReport::pass("median", "exhaustive detail");
  const auto j = io::export_report(pass);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("coverage") == "exhaustive");
  CHECK(j.at("counterexample").is_null());
  const auto table = io::reports_table({pass});
  CHECK(table.find("median") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
}
