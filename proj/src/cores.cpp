#include "ogc/cores.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ogc {

std::vector<int> CoreGraph::valence() const {
  std::vector<int> val(static_cast<std::size_t>(vertex_count), 0);
  for (auto [a, b] : edges) {
    ++val[a];
    ++val[b];
  }
  return val;
}

TypedGraph to_typed(const CoreGraph& c) {
  TypedGraph t;
  t.vertex_count = c.vertex_count;
  for (auto [a, b] : c.edges)
    t.edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), 0, EdgeKind::Undirected});
  return t;
}

std::string core_key(const CoreGraph& c) { return canonical_form(to_typed(c), Orientation::None).key; }

bool is_connected(const CoreGraph& c) {
  std::vector<int> parent(static_cast<std::size_t>(c.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = c.vertex_count;
  for (auto [a, b] : c.edges) {
    int x = find(a), y = find(b);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components <= 1;
}

CoreGraph canonical_core(const CoreGraph& c) {
  CanonicalForm f = canonical_form(to_typed(c), Orientation::None);
  CoreGraph out;
  out.vertex_count = c.vertex_count;
  for (const TypedEdge& e : f.graph.edges) out.edges.emplace_back(e.a, e.b);
  return out;
}

const std::vector<CoreGraph>& CoreCatalog::cores(int vertex_count, int edge_count) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(vertex_count, edge_count);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, generate(vertex_count, edge_count)).first;
  return it->second;
}

std::vector<CoreGraph> CoreCatalog::generate(int n, int m) const {
  std::vector<CoreGraph> out;
  if (n < 1 || m < 0 || 2 * m < min_valence_ * n) return out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) pairs.emplace_back(a, b);

  std::vector<int> deficit(static_cast<std::size_t>(n), min_valence_);
  std::vector<std::pair<int, int>> chosen;
  std::set<std::string> seen;

  auto total_deficit = [&] {
    int s = 0;
    for (int x : deficit) s += std::max(x, 0);
    return s;
  };

  // Multisets of m pairs in pair-index order.
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (total_deficit() > 2 * left) return;
    if (left == 0) {
      CoreGraph c{n, chosen};
      if (!is_connected(c)) return;
      CanonicalForm f = canonical_form(to_typed(c), Orientation::None);
      if (!seen.insert(f.key).second) return;
      CoreGraph canon;
      canon.vertex_count = n;
      for (const TypedEdge& e : f.graph.edges) canon.edges.emplace_back(e.a, e.b);
      out.push_back(std::move(canon));
      return;
    }
    for (std::size_t p = from; p < pairs.size(); ++p) {
      auto [a, b] = pairs[p];
      chosen.push_back(pairs[p]);
      --deficit[a];
      --deficit[b];
      self(self, p, left - 1);
      ++deficit[a];
      ++deficit[b];
      chosen.pop_back();
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(), [](const CoreGraph& x, const CoreGraph& y) { return core_key(x) < core_key(y); });
  return out;
}

std::string to_text(const CoreGraph& c) {
  std::ostringstream os;
  os << c.vertex_count << ' ' << c.edges.size() << '\n';
  for (auto [a, b] : c.edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

CoreGraph core_from_text(const std::string& text) {
  std::istringstream in(text);
  CoreGraph c;
  int m = 0;
  if (!(in >> c.vertex_count >> m) || c.vertex_count < 1 || m < 0) throw Error(ErrorKind::ParseError, "core header");
  for (int i = 0; i < m; ++i) {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw Error(ErrorKind::ParseError, "truncated core edge list");
    if (a < 1 || b < 1 || a > c.vertex_count || b > c.vertex_count)
      throw Error(ErrorKind::OutOfRangeEndpoint, "core edge outside [1, v]");
    if (a > b) std::swap(a, b);
    c.edges.emplace_back(a - 1, b - 1);
  }
  if (!is_connected(c)) throw Error(ErrorKind::Disconnected, "core graph must be connected");
  return c;
}

}  // namespace ogc
