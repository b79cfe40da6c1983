#include "prook/bratteli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace prook {

std::size_t BratteliGraph::vertex_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

std::vector<std::size_t> BratteliGraph::down_degrees(int level) const {
  std::vector<std::size_t> degrees(levels.at(level).size(), 0);
  for (const auto& e : edges)
    if (e.parent.level == level) ++degrees[e.parent.index];
  return degrees;
}

BratteliGraph build(int c, int n_max) {
  if (c < 1) throw ValidationError("bratteli needs c >= 1");
  if (n_max < 0) throw ValidationError("bratteli needs n_max >= 0");
  BratteliGraph graph;
  graph.c = c;
  graph.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) graph.levels.push_back(irrep_labels(n, c));
  for (int n = 1; n <= n_max; ++n) {
    const auto& below = graph.levels[n - 1];
    for (std::size_t p = 0; p < graph.levels[n].size(); ++p) {
      for (const auto& child : restriction_labels(graph.levels[n][p])) {
        const auto it = std::find(below.begin(), below.end(), child);
        graph.edges.push_back({{n, p}, {n - 1, static_cast<std::size_t>(it - below.begin())}});
      }
    }
  }
  return graph;
}

BigInt vertex_count(int n, int c) {
  if (n < 0 || c < 0) throw ValidationError("vertex_count needs n, c >= 0");
  return binomial(n + c, n);
}

BigInt adjacency_count(int n, int c, int x) {
  if (n < 1 || x < 1) throw ValidationError("adjacency_count needs n, x >= 1");
  return binomial(c + 1, x) * binomial(n - 1, x - 1);
}

CheckResult verify_multinomial_recursion(const BratteliGraph& graph) {
  CheckResult check;
  std::map<VertexRef, BigInt> child_sum;
  for (const auto& e : graph.edges) child_sum[e.parent] += graph.label(e.child).dimension();
  for (int n = 1; n <= graph.n_max; ++n) {
    for (std::size_t i = 0; i < graph.levels[n].size(); ++i) {
      ++check.cases;
      const VertexRef v{n, i};
      const BigInt dim = graph.label(v).dimension();
      if (dim != child_sum[v]) {
        check.fail({"dimension of " + to_string(graph.label(v)) + " at level " +
                        std::to_string(n) + " is " + dim.str() + " but its children sum to " +
                        child_sum[v].str(),
                    {},
                    {}});
        return check;
      }
    }
  }
  return check;
}

CheckResult verify_structure(const BratteliGraph& graph) {
  CheckResult check;
  for (int n = 0; n <= graph.n_max; ++n) {
    ++check.cases;
    if (BigInt(graph.levels[n].size()) != vertex_count(n, graph.c)) {
      check.fail({"level " + std::to_string(n) + " has the wrong number of vertices", {}, {}});
      return check;
    }
  }
  for (const auto& e : graph.edges) {
    ++check.cases;
    const auto& parent = graph.label(e.parent);
    const auto& child = graph.label(e.child);
    int diffs = 0, drop = 0;
    for (std::size_t j = 0; j < parent.parts.size(); ++j) {
      if (parent.parts[j] != child.parts[j]) {
        ++diffs;
        drop = parent.parts[j] - child.parts[j];
      }
    }
    if (e.child.level != e.parent.level - 1 || diffs != 1 || drop != 1) {
      check.fail({"edge " + to_string(parent) + " -> " + to_string(child) +
                      " is not a single-part decrement",
                  {},
                  {}});
      return check;
    }
  }
  for (int n = 1; n <= graph.n_max; ++n) {
    const auto degrees = graph.down_degrees(n);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const auto& parts = graph.levels[n][i].parts;
      const auto nonzero = static_cast<std::size_t>(
          std::count_if(parts.begin(), parts.end(), [](int p) { return p > 0; }));
      if (degrees[i] != nonzero) {
        check.fail({"vertex " + to_string(graph.levels[n][i]) + " has the wrong down-degree", {}, {}});
        return check;
      }
    }
    for (int x = 1; x <= graph.c + 1; ++x) {
      ++check.cases;
      const auto observed = std::count(degrees.begin(), degrees.end(), static_cast<std::size_t>(x));
      if (BigInt(observed) != adjacency_count(n, graph.c, x)) {
        check.fail({"level " + std::to_string(n) + " has " + std::to_string(observed) +
                        " vertices of down-degree " + std::to_string(x),
                    {},
                    {}});
        return check;
      }
    }
  }
  return check;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw Error("unknown graph format '" + std::string(name) + "' (expected dot or json)");
}

std::string emit(const BratteliGraph& graph, GraphFormat format) {
  return format == GraphFormat::dot ? emit_dot(graph) : emit_json(graph);
}

namespace {

std::string node_name(int level, const IrrepLabel& label) {
  std::string out = "W_" + std::to_string(level) + "_(";
  for (std::size_t i = 0; i < label.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(label.parts[i]);
  }
  return out + ")";
}

}  // namespace

std::string emit_dot(const BratteliGraph& graph) {
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  for (int n = 0; n <= graph.n_max; ++n) {
    os << "  subgraph level_" << n << " {\n";
    os << "    rank=same;\n";
    for (const auto& label : graph.levels[n]) {
      const std::string dim = label.dimension().str();
      os << "    \"" << node_name(n, label) << "\" [label=\"" << node_name(n, label)
         << "\\ndim=" << dim << "\", dimension=" << dim << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& e : graph.edges)
    os << "  \"" << node_name(e.parent.level, graph.label(e.parent)) << "\" -> \""
       << node_name(e.child.level, graph.label(e.child)) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const BratteliGraph& graph) {
  nlohmann::ordered_json doc;
  doc["c"] = graph.c;
  doc["n_max"] = graph.n_max;
  auto levels = nlohmann::ordered_json::array();
  for (const auto& level : graph.levels) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& label : level) row.push_back(label.parts);
    levels.push_back(std::move(row));
  }
  doc["levels"] = std::move(levels);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges)
    edges.push_back({{e.parent.level, e.parent.index}, {e.child.level, e.child.index}});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

BratteliGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    BratteliGraph graph;
    graph.c = doc.at("c").get<int>();
    graph.n_max = doc.at("n_max").get<int>();
    for (const auto& level : doc.at("levels")) {
      std::vector<IrrepLabel> row;
      for (const auto& label : level) row.push_back({label.get<std::vector<int>>()});
      graph.levels.push_back(std::move(row));
    }
    if (static_cast<int>(graph.levels.size()) != graph.n_max + 1)
      throw ParseError("level count does not match n_max", 0);
    for (const auto& e : doc.at("edges")) {
      BratteliEdge edge{{e.at(0).at(0).get<int>(), e.at(0).at(1).get<std::size_t>()},
                        {e.at(1).at(0).get<int>(), e.at(1).at(1).get<std::size_t>()}};
      for (const auto& v : {edge.parent, edge.child})
        if (v.level < 0 || v.level > graph.n_max || v.index >= graph.levels[v.level].size())
          throw ParseError("edge endpoint out of range", 0);
      graph.edges.push_back(edge);
    }
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Bratteli JSON: ") + e.what(), 0);
  }
}

}  // namespace prook
