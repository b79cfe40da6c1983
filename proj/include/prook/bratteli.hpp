#pragma once

// The Bratteli diagram of the tower of planar rook algebras on 0, 1, 2, ...
// vertices: level n holds the irreducible labels of level n, and a label is
// joined to each label it restricts to one level down.

#include <string>
#include <string_view>
#include <vector>

#include "prook/check.hpp"
#include "prook/repr.hpp"

namespace prook {

/// Position of a vertex: (level, index within the level).
struct VertexRef {
  int level = 0;
  std::size_t index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct BratteliEdge {
  VertexRef parent;  // level n
  VertexRef child;   // level n-1

  friend auto operator<=>(const BratteliEdge&, const BratteliEdge&) = default;
};

struct BratteliGraph {
  int c = 1;
  int n_max = 0;
  std::vector<std::vector<IrrepLabel>> levels;
  /// Downward edges, grouped by parent in level order.
  std::vector<BratteliEdge> edges;

  const IrrepLabel& label(const VertexRef& v) const { return levels.at(v.level).at(v.index); }
  std::size_t vertex_count() const;
  /// Number of children of each vertex of a level.
  std::vector<std::size_t> down_degrees(int level) const;
};

BratteliGraph build(int c, int n_max);

/// C(n + c, n), the number of compositions of n into c + 1 parts.
BigInt vertex_count(int n, int c);

/// Number of level-n vertices with exactly x children: C(c+1, x) C(n-1, x-1).
BigInt adjacency_count(int n, int c, int x);

/// The dimension of every non-root vertex is the sum of its children's.
CheckResult verify_multinomial_recursion(const BratteliGraph& graph);

/// Level sizes, the edge rule, and the degree histogram of every level
/// against adjacency_count.
CheckResult verify_structure(const BratteliGraph& graph);

enum class GraphFormat { dot, json };

/// Throws Error for anything but "dot" or "json".
GraphFormat parse_graph_format(std::string_view name);

std::string emit(const BratteliGraph& graph, GraphFormat format);
std::string emit_dot(const BratteliGraph& graph);
std::string emit_json(const BratteliGraph& graph);

/// Reads the JSON form back. Throws ParseError on malformed input.
BratteliGraph parse_json(std::string_view text);

}  // namespace prook
