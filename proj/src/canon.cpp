#include "ogc/canon.hpp"

#include <algorithm>
#include <numeric>

namespace ogc {

int permutation_sign(const std::vector<int>& perm) {
  // cycle decomposition; n - #cycles is the transposition count
  std::vector<char> seen(perm.size(), 0);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

namespace {

// Sign of the order change of a subsequence of positions.
int subsequence_sign(const std::vector<int>& images) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

int relabeling_sign(const TypedGraph& source, const Relabeling& r, Orientation o) {
  switch (o) {
    case Orientation::None:
      return 1;
    case Orientation::EdgeOrder:
      return permutation_sign(r.edge);
    case Orientation::VertexOrder:
      return permutation_sign(r.vertex);
    case Orientation::SkeletonEven: {
      std::vector<int> single;
      int flips = 0;
      for (std::size_t i = 0; i < source.edges.size(); ++i) {
        if (source.edges[i].color == kColorEss) {
          if (r.flipped[i]) ++flips;
        } else {
          single.push_back(r.edge[i]);
        }
      }
      return subsequence_sign(single) * sign_pow(flips);
    }
    case Orientation::SkeletonOdd: {
      std::vector<int> ess;
      for (std::size_t i = 0; i < source.edges.size(); ++i)
        if (source.edges[i].color == kColorEss) ess.push_back(r.edge[i]);
      return permutation_sign(r.vertex) * subsequence_sign(ess);
    }
  }
  return 1;
}

std::string encode_key(const TypedGraph& g) {
  std::string key;
  key.reserve(2 + 4 * g.edges.size());
  key.push_back(static_cast<char>(g.vertex_count));
  key.push_back(static_cast<char>(g.edges.size()));
  for (const TypedEdge& e : g.edges) {
    key.push_back(static_cast<char>(e.a));
    key.push_back(static_cast<char>(e.b));
    key.push_back(static_cast<char>(e.color));
    key.push_back(static_cast<char>(e.kind));
  }
  return key;
}

TypedGraph to_typed(const LabeledGraph& g) {
  TypedGraph t;
  t.vertex_count = g.vertex_count();
  t.edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) t.edges.push_back({e.tail, e.head, 0, EdgeKind::Directed});
  return t;
}

namespace {

class Search {
 public:
  Search(const TypedGraph& g, Orientation o) : g_(g), o_(o), n_(g.vertex_count), m_(static_cast<int>(g.edges.size())) {
    incident_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i) {
      const TypedEdge& e = g_.edges[static_cast<std::size_t>(i)];
      incident_[e.a].push_back(i);
      if (e.b != e.a) incident_[e.b].push_back(i);
    }
  }

  CanonicalForm run() {
    std::vector<int> colors(static_cast<std::size_t>(n_), 0);
    refine(colors);
    descend(colors);
    return finish();
  }

 private:
  // Incidence code seen from vertex x: (role, colour, neighbour colour).
  std::uint32_t incidence_code(int x, const TypedEdge& e, const std::vector<int>& colors) const {
    std::uint32_t role;
    int other;
    if (e.kind == EdgeKind::Directed) {
      role = (e.a == x) ? 0u : 1u;
      other = (e.a == x) ? e.b : e.a;
    } else if (e.a == e.b) {
      role = 3u;
      other = x;
    } else {
      role = 2u;
      other = (e.a == x) ? e.b : e.a;
    }
    return (role << 28) | (static_cast<std::uint32_t>(e.color) << 20) | static_cast<std::uint32_t>(colors[other]);
  }

  // Equitable refinement; colours are ranks 0..k-1 ordered by signature.
  void refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    std::vector<std::pair<std::vector<std::uint32_t>, int>> sigs(static_cast<std::size_t>(n_));
    while (true) {
      for (int x = 0; x < n_; ++x) {
        auto& s = sigs[static_cast<std::size_t>(x)];
        s.first.clear();
        s.first.push_back(static_cast<std::uint32_t>(colors[x]));
        for (int i : incident_[x]) s.first.push_back(incidence_code(x, g_.edges[static_cast<std::size_t>(i)], colors));
        std::sort(s.first.begin() + 1, s.first.end());
        s.second = x;
      }
      std::sort(sigs.begin(), sigs.end());
      int rank = -1;
      for (std::size_t k = 0; k < sigs.size(); ++k) {
        if (k == 0 || sigs[k].first != sigs[k - 1].first) ++rank;
        colors[sigs[k].second] = rank;
      }
      int now = rank + 1;
      if (now == classes) break;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    int mx = -1;
    for (int c : colors) mx = std::max(mx, c);
    return mx + 1;
  }

  void descend(const std::vector<int>& colors) {
    // first non-singleton cell
    std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int x = 0; x < n_; ++x) {
      if (colors[x] != target) continue;
      std::vector<int> next(colors);
      for (int y = 0; y < n_; ++y) next[y] = 2 * colors[y] + ((colors[y] == target && y != x) ? 1 : 0);
      // compress to ranks
      std::vector<int> sorted(next);
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int& c : next) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
      refine(next);
      descend(next);
    }
  }

  void leaf(const std::vector<int>& perm) {
    scratch_.clear();
    for (int i = 0; i < m_; ++i) {
      const TypedEdge& e = g_.edges[static_cast<std::size_t>(i)];
      std::uint32_t x = static_cast<std::uint32_t>(perm[e.a]);
      std::uint32_t y = static_cast<std::uint32_t>(perm[e.b]);
      if (e.kind == EdgeKind::Undirected && x > y) std::swap(x, y);
      std::uint32_t code = (x << 24) | (y << 16) | (static_cast<std::uint32_t>(e.color) << 8) |
                           static_cast<std::uint32_t>(e.kind);
      scratch_.push_back((static_cast<std::uint64_t>(code) << 16) | static_cast<std::uint64_t>(i));
    }
    std::sort(scratch_.begin(), scratch_.end());
    int cmp = 0;
    if (!have_best_) {
      cmp = -1;
    } else {
      for (int k = 0; k < m_ && cmp == 0; ++k) {
        std::uint64_t a = scratch_[static_cast<std::size_t>(k)] >> 16;
        std::uint64_t b = best_codes_[static_cast<std::size_t>(k)] >> 16;
        if (a != b) cmp = a < b ? -1 : 1;
      }
    }
    if (cmp > 0) return;
    Relabeling r = relabeling_from(perm);
    int s = relabeling_sign(g_, r, o_);
    if (cmp < 0) {
      have_best_ = true;
      best_codes_ = scratch_;
      best_map_ = std::move(r);
      best_sign_ = s;
      leaves_equal_ = 1;
      odd_ = false;
    } else {
      ++leaves_equal_;
      if (s != best_sign_) odd_ = true;
    }
  }

  Relabeling relabeling_from(const std::vector<int>& perm) const {
    Relabeling r;
    r.vertex = perm;
    r.edge.assign(static_cast<std::size_t>(m_), 0);
    r.flipped.assign(static_cast<std::size_t>(m_), false);
    for (int k = 0; k < m_; ++k) {
      int i = static_cast<int>(scratch_[static_cast<std::size_t>(k)] & 0xFFFFu);
      r.edge[static_cast<std::size_t>(i)] = k;
      const TypedEdge& e = g_.edges[static_cast<std::size_t>(i)];
      r.flipped[static_cast<std::size_t>(i)] = e.kind == EdgeKind::Undirected && perm[e.a] > perm[e.b];
    }
    return r;
  }

  CanonicalForm finish() {
    CanonicalForm out;
    out.graph.vertex_count = n_;
    out.graph.edges.reserve(static_cast<std::size_t>(m_));
    for (std::uint64_t c : best_codes_) {
      std::uint32_t code = static_cast<std::uint32_t>(c >> 16);
      out.graph.edges.push_back({static_cast<Vertex>(code >> 24), static_cast<Vertex>((code >> 16) & 0xFFu),
                                 static_cast<std::uint8_t>((code >> 8) & 0xFFu),
                                 static_cast<EdgeKind>(code & 0xFFu)});
    }
    out.map = std::move(best_map_);
    out.sign = best_sign_;
    out.odd_automorphism = odd_;
    std::uint64_t count = leaves_equal_;

    // Edge-level automorphisms of the canonical graph: permutations of
    // identical parallel edges and flips of undirected self-loops.
    Relabeling id;
    id.vertex.resize(static_cast<std::size_t>(n_));
    std::iota(id.vertex.begin(), id.vertex.end(), 0);
    id.edge.resize(static_cast<std::size_t>(m_));
    std::iota(id.edge.begin(), id.edge.end(), 0);
    id.flipped.assign(static_cast<std::size_t>(m_), false);
    const auto& ce = out.graph.edges;
    auto same = [](const TypedEdge& x, const TypedEdge& y) {
      return x.a == y.a && x.b == y.b && x.color == y.color && x.kind == y.kind;
    };
    int run = 1;
    for (int k = 0; k < m_; ++k) {
      if (k + 1 < m_ && same(ce[static_cast<std::size_t>(k)], ce[static_cast<std::size_t>(k + 1)])) {
        Relabeling t = id;
        std::swap(t.edge[static_cast<std::size_t>(k)], t.edge[static_cast<std::size_t>(k + 1)]);
        if (relabeling_sign(out.graph, t, o_) < 0) out.odd_automorphism = true;
        ++run;
        count *= static_cast<std::uint64_t>(run);
      } else {
        run = 1;
      }
      const TypedEdge& e = ce[static_cast<std::size_t>(k)];
      if (e.kind == EdgeKind::Undirected && e.a == e.b) {
        Relabeling f = id;
        f.flipped[static_cast<std::size_t>(k)] = true;
        if (relabeling_sign(out.graph, f, o_) < 0) out.odd_automorphism = true;
        count *= 2;
      }
    }
    out.automorphism_count = count;
    out.key = encode_key(out.graph);
    return out;
  }

  const TypedGraph& g_;
  Orientation o_;
  int n_;
  int m_;
  std::vector<std::vector<int>> incident_;

  std::vector<std::uint64_t> scratch_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_codes_;
  Relabeling best_map_;
  int best_sign_ = 1;
  std::uint64_t leaves_equal_ = 0;
  bool odd_ = false;
};

}  // namespace

CanonicalForm canonical_form(const TypedGraph& g, Orientation o) {
  if (g.vertex_count == 0) {
    CanonicalForm out;
    out.graph = g;
    out.key = encode_key(g);
    return out;
  }
  return Search(g, o).run();
}

std::string graph_key(const LabeledGraph& g) { return encode_key(to_typed(g)); }

FullCanon canonical_form(const LabeledGraph& g, Parity parity) {
  CanonicalForm c = canonical_form(to_typed(g), full_orientation(parity));
  std::vector<Edge> edges;
  edges.reserve(c.graph.edges.size());
  for (const TypedEdge& e : c.graph.edges) edges.push_back({e.a, e.b});
  return FullCanon{GraphBuilder::make(g.vertex_count(), std::move(edges)), c.sign, c.odd_automorphism,
                   c.automorphism_count, std::move(c.key)};
}

std::optional<SignedClass> canonicalize(const LabeledGraph& g, Parity parity) {
  if (auto v = check_admissible(g)) throw Error(ErrorKind::InadmissibleInput, v->describe());
  FullCanon c = canonical_form(g, parity);
  if (c.zero) return std::nullopt;
  return SignedClass{GraphClass{std::move(c.graph), parity, ClassStatus::Nonzero}, c.sign};
}

AutomorphismReport automorphism_report(const LabeledGraph& g, Parity parity) {
  if (auto v = check_admissible(g)) throw Error(ErrorKind::InadmissibleInput, v->describe());
  FullCanon c = canonical_form(g, parity);
  return {c.automorphism_count, c.zero};
}

}  // namespace ogc
