#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "prook/bratteli.hpp"

using namespace prook;

namespace {

std::string name(const BratteliGraph& g, const VertexRef& v) { return join_bar(g.label(v).parts); }

std::set<std::pair<std::string, std::string>> edge_names(const BratteliGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges) out.insert({name(g, e.parent), name(g, e.child)});
  return out;
}

}  // namespace

TEST_CASE("two colors up to level 2") {
  const BratteliGraph g = build(2, 2);
  REQUIRE(g.levels.size() == 3);
  CHECK(g.levels[0].size() == 1);
  CHECK(g.levels[1].size() == 3);
  CHECK(g.levels[2].size() == 6);
  CHECK(g.edges.size() == 12);
  const std::set<std::pair<std::string, std::string>> expected{
      {"1|0|0", "0|0|0"}, {"0|1|0", "0|0|0"}, {"0|0|1", "0|0|0"},
      {"2|0|0", "1|0|0"}, {"1|1|0", "1|0|0"}, {"1|0|1", "1|0|0"},
      {"1|0|1", "0|0|1"}, {"0|0|2", "0|0|1"}, {"0|1|1", "0|0|1"},
      {"1|1|0", "0|1|0"}, {"0|2|0", "0|1|0"}, {"0|1|1", "0|1|0"}};
  CHECK(edge_names(g) == expected);
  CHECK(verify_structure(g).passed);
  CHECK(verify_multinomial_recursion(g).passed);
}

TEST_CASE("level sizes form Pascal's simplex") {
  const int table[5][5] = {
      {1, 1, 1, 1, 1}, {1, 2, 3, 4, 5}, {1, 3, 6, 10, 15}, {1, 4, 10, 20, 35}, {1, 5, 15, 35, 70}};
  for (int n = 0; n <= 4; ++n)
    for (int c = 0; c <= 4; ++c) CHECK(vertex_count(n, c) == table[n][c]);
  for (int c = 1; c <= 4; ++c) {
    const BratteliGraph g = build(c, 4);
    for (int n = 0; n <= 4; ++n) CHECK(BigInt(g.levels[n].size()) == table[n][c]);
  }
}

TEST_CASE("degree histogram") {
  CHECK(adjacency_count(2, 2, 1) == 3);
  CHECK(adjacency_count(2, 2, 2) == 3);
  CHECK(adjacency_count(2, 2, 3) == 0);
  CHECK(adjacency_count(3, 1, 1) == 2);
  CHECK(adjacency_count(3, 1, 2) == 2);
  CHECK_THROWS_AS(adjacency_count(2, 2, 0), Error);
  for (int c = 1; c <= 4; ++c) {
    const BratteliGraph g = build(c, 6);
    for (int n = 1; n <= 6; ++n) {
      const auto deg = g.down_degrees(n);
      CHECK(*std::min_element(deg.begin(), deg.end()) >= 1);
      for (int x = 1; x <= c + 1; ++x) {
        const auto count = std::count(deg.begin(), deg.end(), static_cast<std::size_t>(x));
        REQUIRE(BigInt(count) == adjacency_count(n, c, x));
      }
    }
    CHECK(verify_structure(g).passed);
  }
}

TEST_CASE("multinomial recursion") {
  for (int c = 1; c <= 4; ++c) CHECK(verify_multinomial_recursion(build(c, 8)).passed);
  // A graph with a missing edge breaks both checks.
  BratteliGraph g = build(2, 3);
  g.edges.pop_back();
  CHECK_FALSE(verify_multinomial_recursion(g).passed);
  CHECK_FALSE(verify_structure(g).passed);
}

TEST_CASE("dot output") {
  const std::string dot = emit_dot(build(2, 2));
  CHECK(dot.rfind("digraph bratteli {", 0) == 0);
  std::size_t edges = 0, nodes = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) ++edges, ++pos;
  pos = 0;
  while ((pos = dot.find("dimension=", pos)) != std::string::npos) ++nodes, ++pos;
  CHECK(edges == 12);
  CHECK(nodes == 10);
}

TEST_CASE("json output") {
  const auto root = nlohmann::json::parse(emit_json(build(3, 0)));
  CHECK(root["c"] == 3);
  CHECK(root["n_max"] == 0);
  CHECK(root["levels"].size() == 1);
  CHECK(root["edges"].empty());

  const BratteliGraph g = build(2, 3);
  const BratteliGraph back = parse_json(emit_json(g));
  CHECK(back.c == g.c);
  CHECK(back.n_max == g.n_max);
  CHECK(back.levels == g.levels);
  CHECK(back.edges == g.edges);
  CHECK(emit_json(back) == emit_json(g));
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_json("[1,2]"), ParseError);
}

TEST_CASE("formats") {
  CHECK(parse_graph_format("dot") == GraphFormat::dot);
  CHECK(parse_graph_format("json") == GraphFormat::json);
  CHECK_THROWS_AS(parse_graph_format("xml"), Error);
  CHECK(emit(build(1, 2), GraphFormat::json) == emit_json(build(1, 2)));
}
