#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ogc/error.hpp"

namespace ogc {

using Vertex = std::uint8_t;

/// Directed edge between 0-based vertex indices.
struct Edge {
  Vertex tail;
  Vertex head;

  auto operator<=>(const Edge&) const = default;
};

/// Directed multigraph with labelled vertices 0..v-1 and labelled edges
/// 0..e-1. The order of the edge list is the edge labelling. Self-loops are
/// never stored.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Validating constructor over 0-based endpoints.
  static LabeledGraph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int loop_order() const noexcept { return edge_count() - vertex_count() + 1; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  std::vector<int> in_valence() const;
  std::vector<int> out_valence() const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  friend class GraphBuilder;
  LabeledGraph(int vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {}

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Unchecked construction for internal hot paths whose output is valid by
/// construction (relabelings, contractions, insertions).
class GraphBuilder {
 public:
  static LabeledGraph make(int vertex_count, std::vector<Edge> edges) {
    return LabeledGraph(vertex_count, std::move(edges));
  }
};

/// Builds a graph from 1-based endpoint pairs, as in the text format.
LabeledGraph new_graph(int vertex_count, std::span<const std::pair<int, int>> edges);

struct AdmissibilityRules {
  int min_valence = 2;
  bool forbid_passing = true;
  bool forbid_directed_cycles = true;
  bool require_connected = true;

  bool operator==(const AdmissibilityRules&) const = default;
};

struct Violation {
  enum class Rule { Disconnected, DirectedCycle, PassingVertex, LowValence };
  Rule rule;
  int vertex = -1;  // 0-based witness, -1 when not vertex-specific

  std::string describe() const;
};

/// Rules are checked in the order connectivity, directed cycles, passing
/// vertices, valence; the first failure is reported.
std::optional<Violation> check_admissible(const LabeledGraph& g, const AdmissibilityRules& rules = {});

bool is_connected(int vertex_count, std::span<const Edge> edges);
bool has_directed_cycle(int vertex_count, std::span<const Edge> edges);

LabeledGraph reverse_all(const LabeledGraph& g);

/// Relabels: vertex i becomes vertex_map[i], edge i moves to position edge_map[i].
LabeledGraph relabel(const LabeledGraph& g, std::span<const int> vertex_map, std::span<const int> edge_map);

// Text format: `v e` then e lines `tail head`, 1-based.
std::string to_text(const LabeledGraph& g);
std::optional<LabeledGraph> read_text_record(std::istream& in);
std::vector<LabeledGraph> read_text_records(std::istream& in);

// JSON mirror: {"v": v, "edges": [[t,h], ...]}, 1-based.
nlohmann::json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

}  // namespace ogc
