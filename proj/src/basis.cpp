#include "ogc/basis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ogc {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Full: return "full";
    case Flavor::Skeleton1: return "skeleton1";
    case Flavor::CorePhi: return "corephi";
  }
  return "?";
}

const char* to_string(Part p) {
  switch (p) {
    case Part::All: return "all";
    case Part::Plus: return "plus";
    case Part::Minus: return "minus";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "full") return Flavor::Full;
  if (s == "skeleton1") return Flavor::Skeleton1;
  if (s == "corephi") return Flavor::CorePhi;
  throw Error(ErrorKind::ParseError, "unknown flavor '" + s + "'");
}

Part parse_part(const std::string& s) {
  if (s == "all") return Part::All;
  if (s == "plus") return Part::Plus;
  if (s == "minus") return Part::Minus;
  throw Error(ErrorKind::ParseError, "unknown part '" + s + "'");
}

namespace {

void charge(std::uint64_t& used, const EnumerationLimits& limits) {
  if (++used > limits.max_candidates) {
    throw Error(ErrorKind::ResourceLimitExceeded,
                "more than " + std::to_string(limits.max_candidates) + " candidate graphs");
  }
}

FullBasis finish(int d, int v, int e, std::vector<LabeledGraph> classes) {
  FullBasis b;
  b.d = d;
  b.v = v;
  b.e = e;
  std::vector<std::pair<std::string, LabeledGraph>> keyed;
  keyed.reserve(classes.size());
  for (auto& g : classes) keyed.emplace_back(graph_key(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, g] : keyed) b.classes.push_back(std::move(g));
  b.reindex();
  return b;
}

// A chain of length L replacing a core edge alternates direction at every
// internal vertex, so it is fixed by the direction of its first edge.
void add_chain(std::vector<Edge>& edges, int& next_vertex, int from, int to, int length, bool forward) {
  int prev = from;
  for (int k = 0; k < length; ++k) {
    int cur = (k + 1 == length) ? to : next_vertex++;
    bool fwd = (k % 2 == 0) == forward;
    edges.push_back(fwd ? Edge{static_cast<Vertex>(prev), static_cast<Vertex>(cur)}
                        : Edge{static_cast<Vertex>(cur), static_cast<Vertex>(prev)});
    prev = cur;
  }
}

}  // namespace

FullBasis enumerate_basis(int d, int v, int e, CoreCatalog& cores, const EnumerationLimits& limits) {
  const Parity parity = parity_of(d);
  const int b = e - v + 1;
  std::vector<LabeledGraph> found;
  if (v < 2 || b < 1) return finish(d, v, e, std::move(found));
  std::set<std::string> seen;
  std::uint64_t used = 0;

  auto consider = [&](int vc, std::vector<Edge> edges) {
    charge(used, limits);
    if (has_directed_cycle(vc, edges)) return;
    LabeledGraph g = GraphBuilder::make(vc, std::move(edges));
    FullCanon c = canonical_form(g, parity);
    if (c.zero || !seen.insert(c.key).second) return;
    found.push_back(std::move(c.graph));
  };

  if (b == 1) {
    // alternating polygon
    if (v == e && v % 2 == 0) {
      std::vector<Edge> edges;
      int next = 1;
      add_chain(edges, next, 0, 0, e, true);
      consider(v, std::move(edges));
    }
    return finish(d, v, e, std::move(found));
  }

  for (int n = 1; n <= std::min(v, 2 * (b - 1)); ++n) {
    const int m = n + b - 1;
    const int extra = v - n;
    for (const CoreGraph& core : cores.cores(n, m)) {
      // lengths L_j >= 1 (>= 2 on loops) with sum (L_j - 1) = extra
      std::vector<int> len(static_cast<std::size_t>(m), 1);
      int base = 0;
      for (int j = 0; j < m; ++j) {
        if (core.edges[j].first == core.edges[j].second) {
          len[j] = 2;
          ++base;
        }
      }
      if (base > extra) continue;
      auto distribute = [&](auto&& self, int j, int left) -> void {
        if (j == m - 1) {
          len[j] += left;
          for (std::uint32_t dirs = 0; dirs < (1u << m); ++dirs) {
            std::vector<Edge> edges;
            edges.reserve(static_cast<std::size_t>(e));
            int next = n;
            for (int t = 0; t < m; ++t)
              add_chain(edges, next, core.edges[t].first, core.edges[t].second, len[t], ((dirs >> t) & 1u) == 0);
            consider(v, std::move(edges));
          }
          len[j] -= left;
          return;
        }
        for (int x = 0; x <= left; ++x) {
          len[j] += x;
          self(self, j + 1, left - x);
          len[j] -= x;
        }
      };
      distribute(distribute, 0, extra - base);
    }
  }
  return finish(d, v, e, std::move(found));
}

LabeledGraph brute_canonical(const LabeledGraph& g) {
  const int v = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  do {
    std::vector<Edge> mapped;
    mapped.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& x : g.edges())
      mapped.push_back({static_cast<Vertex>(perm[x.tail]), static_cast<Vertex>(perm[x.head])});
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return GraphBuilder::make(v, std::move(best));
}

bool brute_is_zero(const LabeledGraph& g, Parity parity) {
  const int v = g.vertex_count();
  const int e = g.edge_count();
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end());
  if (parity == Parity::Even && std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Edge> mapped;
    for (const Edge& x : g.edges())
      mapped.push_back({static_cast<Vertex>(perm[x.tail]), static_cast<Vertex>(perm[x.head])});
    std::vector<Edge> ms = mapped;
    std::sort(ms.begin(), ms.end());
    if (ms != sorted) continue;
    if (parity == Parity::Odd) {
      if (permutation_sign(perm) < 0) return true;
      continue;
    }
    // no parallel edges here, so the induced edge permutation is unique
    std::vector<int> edge_perm(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < e; ++j) {
        if (g.edge(j) == mapped[static_cast<std::size_t>(i)]) {
          edge_perm[static_cast<std::size_t>(i)] = j;
          break;
        }
      }
    }
    if (permutation_sign(edge_perm) < 0) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

FullBasis brute_force_basis(int d, int v, int e, const EnumerationLimits& limits) {
  if (v > 5 || e > 8) throw Error(ErrorKind::ResourceLimitExceeded, "brute force guard is v <= 5, e <= 8");
  const Parity parity = parity_of(d);
  std::vector<Edge> pairs;
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (a != b) pairs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  std::set<std::vector<Edge>> seen;
  std::vector<LabeledGraph> found;
  std::vector<Edge> chosen;
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      charge(used, limits);
      LabeledGraph g = GraphBuilder::make(v, chosen);
      if (check_admissible(g)) return;
      LabeledGraph c = brute_canonical(g);
      std::vector<Edge> key(c.edges().begin(), c.edges().end());
      if (!seen.insert(key).second) return;
      if (brute_is_zero(c, parity)) return;
      found.push_back(std::move(c));
      return;
    }
    for (std::size_t p = from; p < pairs.size(); ++p) {
      chosen.push_back(pairs[p]);
      self(self, p, left - 1);
      chosen.pop_back();
    }
  };
  if (v >= 1) rec(rec, 0, e);
  return finish(d, v, e, std::move(found));
}

}  // namespace ogc
