#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ogc/canon.hpp"
#include "ogc/graph.hpp"

namespace oracle {

using namespace ogc;

inline std::vector<int> identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  auto p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

struct Automorphisms {
  long count = 0;
  bool odd = false;
};

/// Every (vertex permutation, edge permutation) pair fixing the labelled
/// graph, found by trying all v! * e! pairs.
inline Automorphisms all_automorphisms(const LabeledGraph& g, Parity parity) {
  Automorphisms out;
  auto vp = identity(g.vertex_count());
  do {
    auto ep = identity(g.edge_count());
    do {
      if (relabel(g, vp, ep) == g) {
        ++out.count;
        if (permutation_sign(parity == Parity::Even ? ep : vp) < 0) out.odd = true;
      }
    } while (std::next_permutation(ep.begin(), ep.end()));
  } while (std::next_permutation(vp.begin(), vp.end()));
  return out;
}

/// Contraction by the literal recipe: swap the chosen edge into the last
/// position and its head into the last vertex, delete the edge and merge the
/// last vertex into the tail. Returns (canonical graph, coefficient).
inline std::optional<std::pair<LabeledGraph, int>> literal_contraction(const LabeledGraph& g, int index, int d) {
  const Parity parity = parity_of(d);
  const int v = g.vertex_count(), e = g.edge_count();
  const Edge a = g.edge(index);
  auto vp = identity(v);
  std::swap(vp[a.head], vp[v - 1]);
  auto ep = identity(e);
  std::swap(ep[index], ep[e - 1]);
  int sign = permutation_sign(parity == Parity::Even ? ep : vp);
  LabeledGraph moved = relabel(g, vp, ep);
  const int tail = moved.edge(e - 1).tail;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < e; ++i) {
    Edge x = moved.edge(i);
    if (x.tail == v - 1) x.tail = static_cast<Vertex>(tail);
    if (x.head == v - 1) x.head = static_cast<Vertex>(tail);
    if (x.tail == x.head) return std::nullopt;
    edges.push_back(x);
  }
  LabeledGraph out = LabeledGraph::from_edges(v - 1, edges);
  if (check_admissible(out)) return std::nullopt;
  auto c = canonicalize(out, parity);
  if (!c) return std::nullopt;
  return std::make_pair(c->cls.canonical, sign * c->coefficient);
}

}  // namespace oracle
