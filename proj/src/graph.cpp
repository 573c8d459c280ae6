#include "ogc/graph.hpp"

#include <istream>
#include <numeric>
#include <sstream>

namespace ogc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRangeEndpoint: return "OutOfRangeEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::InadmissibleInput: return "InadmissibleInput";
    case ErrorKind::ResourceLimitExceeded: return "ResourceLimitExceeded";
    case ErrorKind::CorruptCache: return "CorruptCache";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::MissingBasis: return "MissingBasis";
    case ErrorKind::ContainsEE: return "ContainsEE";
    case ErrorKind::UnsupportedLoopOrder: return "UnsupportedLoopOrder";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WrongStage: return "WrongStage";
    case ErrorKind::PrimeDisagreement: return "PrimeDisagreement";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::IncompleteRange: return "IncompleteRange";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

LabeledGraph LabeledGraph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1 || vertex_count > 255) {
    throw Error(ErrorKind::OutOfRangeEndpoint, "vertex count must be in [1, 255]");
  }
  for (const Edge& e : edges) {
    if (e.tail >= vertex_count || e.head >= vertex_count) {
      throw Error(ErrorKind::OutOfRangeEndpoint, "edge endpoint outside [1, v]");
    }
    if (e.tail == e.head) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.tail + 1));
    }
  }
  return LabeledGraph(vertex_count, std::move(edges));
}

std::vector<int> LabeledGraph::in_valence() const {
  std::vector<int> in(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) ++in[e.head];
  return in;
}

std::vector<int> LabeledGraph::out_valence() const {
  std::vector<int> out(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) ++out[e.tail];
  return out;
}

LabeledGraph new_graph(int vertex_count, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [t, h] : edges) {
    if (t < 1 || h < 1 || t > vertex_count || h > vertex_count) {
      throw Error(ErrorKind::OutOfRangeEndpoint,
                  "edge (" + std::to_string(t) + "," + std::to_string(h) + ") outside [1, " +
                      std::to_string(vertex_count) + "]");
    }
    out.push_back({static_cast<Vertex>(t - 1), static_cast<Vertex>(h - 1)});
  }
  return LabeledGraph::from_edges(vertex_count, std::move(out));
}

std::string Violation::describe() const {
  std::string w = vertex >= 0 ? " at vertex " + std::to_string(vertex + 1) : "";
  switch (rule) {
    case Rule::Disconnected: return "disconnected";
    case Rule::DirectedCycle: return "directed cycle";
    case Rule::PassingVertex: return "passing vertex" + w;
    case Rule::LowValence: return "valence below minimum" + w;
  }
  return "unknown";
}

bool is_connected(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (const Edge& e : edges) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool has_directed_cycle(int vertex_count, std::span<const Edge> edges) {
  std::vector<int> indeg(static_cast<std::size_t>(vertex_count), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count));
  for (const Edge& e : edges) {
    if (e.tail == e.head) return true;
    ++indeg[e.head];
    out[e.tail].push_back(e.head);
  }
  std::vector<int> stack;
  for (int i = 0; i < vertex_count; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++seen;
    for (int y : out[x])
      if (--indeg[y] == 0) stack.push_back(y);
  }
  return seen != vertex_count;
}

std::optional<Violation> check_admissible(const LabeledGraph& g, const AdmissibilityRules& rules) {
  using Rule = Violation::Rule;
  if (rules.require_connected && !is_connected(g.vertex_count(), g.edges())) {
    return Violation{Rule::Disconnected};
  }
  if (rules.forbid_directed_cycles && has_directed_cycle(g.vertex_count(), g.edges())) {
    return Violation{Rule::DirectedCycle};
  }
  auto in = g.in_valence();
  auto out = g.out_valence();
  if (rules.forbid_passing) {
    for (int x = 0; x < g.vertex_count(); ++x)
      if (in[x] == 1 && out[x] == 1) return Violation{Rule::PassingVertex, x};
  }
  for (int x = 0; x < g.vertex_count(); ++x)
    if (in[x] + out[x] < rules.min_valence) return Violation{Rule::LowValence, x};
  return std::nullopt;
}

LabeledGraph reverse_all(const LabeledGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) std::swap(e.tail, e.head);
  return GraphBuilder::make(g.vertex_count(), std::move(edges));
}

LabeledGraph relabel(const LabeledGraph& g, std::span<const int> vertex_map, std::span<const int> edge_map) {
  std::vector<Edge> edges(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    edges[static_cast<std::size_t>(edge_map[i])] = {static_cast<Vertex>(vertex_map[e.tail]),
                                                    static_cast<Vertex>(vertex_map[e.head])};
  }
  return GraphBuilder::make(g.vertex_count(), std::move(edges));
}

std::string to_text(const LabeledGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.tail + 1 << ' ' << e.head + 1 << '\n';
  return os.str();
}

std::optional<LabeledGraph> read_text_record(std::istream& in) {
  int v = 0, e = 0;
  if (!(in >> v)) return std::nullopt;
  if (!(in >> e) || e < 0) throw Error(ErrorKind::ParseError, "expected edge count");
  std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(e));
  for (auto& [t, h] : edges) {
    if (!(in >> t >> h)) throw Error(ErrorKind::ParseError, "truncated edge list");
  }
  return new_graph(v, edges);
}

std::vector<LabeledGraph> read_text_records(std::istream& in) {
  std::vector<LabeledGraph> out;
  while (auto g = read_text_record(in)) out.push_back(std::move(*g));
  return out;
}

nlohmann::json to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail + 1, e.head + 1});
  return {{"v", g.vertex_count()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  try {
    int v = j.at("v").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return new_graph(v, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

}  // namespace ogc
