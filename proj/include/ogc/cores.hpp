#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ogc/canon.hpp"

namespace ogc {

/// Undirected connected multigraph, self-loops allowed; the shape left over
/// after forgetting edge types and directions of a skeleton graph. Edges are
/// stored with a <= b.
struct CoreGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int loop_order() const { return edge_count() - vertex_count + 1; }
  std::vector<int> valence() const;
  bool operator==(const CoreGraph&) const = default;
};

TypedGraph to_typed(const CoreGraph& c);
std::string core_key(const CoreGraph& c);
bool is_connected(const CoreGraph& c);

/// Canonical representative of the core's isomorphism class.
CoreGraph canonical_core(const CoreGraph& c);

/// Isomorphism classes of connected cores with the given vertex and edge
/// counts in which every vertex has valence >= min_valence (a loop counts
/// twice). Results are memoised per (n, m); safe to share between threads.
class CoreCatalog {
 public:
  explicit CoreCatalog(int min_valence = 3) : min_valence_(min_valence) {}

  const std::vector<CoreGraph>& cores(int vertex_count, int edge_count);

 private:
  std::vector<CoreGraph> generate(int n, int m) const;

  int min_valence_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<CoreGraph>> memo_;
};

CoreGraph core_from_text(const std::string& text);
std::string to_text(const CoreGraph& c);

}  // namespace ogc
