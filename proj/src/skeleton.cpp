#include "ogc/skeleton.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

namespace ogc {

int SkeletonGraph::count(SkEdgeType t) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [t](const SkeletonEdge& x) { return x.type == t; }));
}

TypedGraph to_typed(const SkeletonGraph& s) {
  TypedGraph t;
  t.vertex_count = s.vertex_count;
  t.edges.reserve(s.edges.size());
  for (const SkeletonEdge& x : s.edges) {
    auto a = static_cast<Vertex>(x.tail), b = static_cast<Vertex>(x.head);
    switch (x.type) {
      case SkEdgeType::Ed: t.edges.push_back({a, b, kColorEd, EdgeKind::Directed}); break;
      case SkEdgeType::dE: t.edges.push_back({b, a, kColorEd, EdgeKind::Directed}); break;
      case SkEdgeType::Ess: t.edges.push_back({a, b, kColorEss, EdgeKind::Undirected}); break;
      case SkEdgeType::EE: t.edges.push_back({a, b, kColorEE, EdgeKind::Undirected}); break;
    }
  }
  return t;
}

SkeletonGraph skeleton_from_typed(const TypedGraph& t) {
  SkeletonGraph s;
  s.vertex_count = t.vertex_count;
  for (const TypedEdge& x : t.edges) {
    SkEdgeType type = x.color == kColorEd ? SkEdgeType::Ed : x.color == kColorEss ? SkEdgeType::Ess : SkEdgeType::EE;
    s.edges.push_back({x.a, x.b, type});
  }
  return s;
}

bool has_cycle(const SkeletonGraph& s) {
  // collapse EE components, then look for a directed cycle among Ed edges
  std::vector<int> parent(static_cast<std::size_t>(s.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const SkeletonEdge& x : s.edges) {
    if (x.type != SkEdgeType::EE) continue;
    int a = find(x.tail), b = find(x.head);
    if (a == b) return true;  // EE cycle
    parent[a] = b;
  }
  std::vector<Edge> directed;
  for (const SkeletonEdge& x : s.edges) {
    if (x.type == SkEdgeType::Ed) directed.push_back({static_cast<Vertex>(find(x.tail)), static_cast<Vertex>(find(x.head))});
    if (x.type == SkEdgeType::dE) directed.push_back({static_cast<Vertex>(find(x.head)), static_cast<Vertex>(find(x.tail))});
  }
  return has_directed_cycle(s.vertex_count, directed);
}

SkeletonCanon canonical_form(const SkeletonGraph& s, Parity parity) {
  CanonicalForm c = canonical_form(to_typed(s), skeleton_orientation(parity));
  return {skeleton_from_typed(c.graph), std::move(c.key), c.sign, c.odd_automorphism, c.automorphism_count};
}

Chain expand(const SkeletonGraph& s, int d) {
  if (s.count(SkEdgeType::EE) > 0) throw Error(ErrorKind::ContainsEE, "EE edges have no expansion");
  const Parity parity = parity_of(d);
  const int n = s.vertex_count;
  const int ess = s.ess_count();
  Chain out;
  for (std::uint32_t choice = 0; choice < (1u << ess); ++choice) {
    std::vector<Edge> edges;
    int r = 0;
    int coefficient = 1;
    for (const SkeletonEdge& x : s.edges) {
      auto a = static_cast<Vertex>(x.tail), b = static_cast<Vertex>(x.head);
      if (x.type == SkEdgeType::Ed) {
        edges.push_back({a, b});
      } else if (x.type == SkEdgeType::dE) {
        edges.push_back({b, a});
      } else {
        auto w = static_cast<Vertex>(n + r);
        if (((choice >> r) & 1u) == 0) {
          edges.push_back({a, w});
          edges.push_back({b, w});
        } else {
          edges.push_back({w, a});
          edges.push_back({w, b});
          coefficient = -coefficient;
        }
        ++r;
      }
    }
    LabeledGraph g = GraphBuilder::make(n + ess, std::move(edges));
    if (auto t = to_term(g, parity, coefficient)) out.add(t->key, t->graph, t->coefficient);
  }
  return out;
}

namespace {

void add_canonical(SkChain& out, const SkeletonGraph& g, Parity parity, std::int64_t coefficient) {
  if (has_cycle(g)) return;
  SkeletonCanon c = canonical_form(g, parity);
  if (c.zero) return;
  out.add(c.key, c.graph, coefficient * c.sign);
}

// Number of edges after position j that count as a single edge of the
// expansion (everything except Ess).
int singles_after(const SkeletonGraph& s, int j) {
  int k = 0;
  for (int i = j + 1; i < s.edge_count(); ++i)
    if (s.edges[i].type != SkEdgeType::Ess) ++k;
  return k;
}

}  // namespace

SkeletonDifferential skeleton_differential(const SkeletonGraph& s, int d) {
  const Parity parity = parity_of(d);
  const int n = s.vertex_count;
  const int ess = s.ess_count();
  SkeletonDifferential out;
  int ess_rank = 0;
  for (int j = 0; j < s.edge_count(); ++j) {
    const SkeletonEdge& a = s.edges[j];
    if (a.type == SkEdgeType::Ed || a.type == SkEdgeType::dE) {
      int x = a.type == SkEdgeType::Ed ? a.tail : a.head;
      int y = a.type == SkEdgeType::Ed ? a.head : a.tail;
      int eps = parity == Parity::Even ? sign_pow(singles_after(s, j)) : sign_pow(n + ess - 1 - y);
      auto shift = [&](int z) {
        if (z == y) z = x;
        return z > y ? z - 1 : z;
      };
      SkeletonGraph g;
      g.vertex_count = n - 1;
      for (int i = 0; i < s.edge_count(); ++i) {
        if (i == j) continue;
        const SkeletonEdge& b = s.edges[i];
        g.edges.push_back({shift(b.tail), shift(b.head), b.type});
      }
      bool self_loop_ed = std::any_of(g.edges.begin(), g.edges.end(), [](const SkeletonEdge& b) {
        return b.tail == b.head && (b.type == SkEdgeType::Ed || b.type == SkEdgeType::dE);
      });
      if (!self_loop_ed) add_canonical(out.core, g, parity, eps);
    } else if (a.type == SkEdgeType::Ess) {
      int eps = parity == Parity::Even ? sign_pow(singles_after(s, j)) : sign_pow(ess - 1 - ess_rank);
      ++ess_rank;
      if (a.tail == a.head) continue;  // both substitutes are directed self-loops
      SkeletonGraph fwd = s, bwd = s;
      fwd.edges[j].type = SkEdgeType::Ed;
      bwd.edges[j].type = SkEdgeType::dE;
      add_canonical(out.edge, fwd, parity, eps);
      add_canonical(out.edge, bwd, parity, -eps * (parity == Parity::Even ? 1 : -1));
    }
  }
  return out;
}

std::optional<std::pair<SkeletonGraph, int>> iota_skeleton(const SkeletonGraph& s, int d) {
  const Parity parity = parity_of(d);
  SkeletonGraph r = s;
  for (SkeletonEdge& x : r.edges) {
    if (x.type == SkEdgeType::Ed) x.type = SkEdgeType::dE;
    else if (x.type == SkEdgeType::dE) x.type = SkEdgeType::Ed;
  }
  const int n = s.vertex_count, m = s.edge_count(), ess = s.ess_count();
  int sign = parity == Parity::Even ? sign_pow(m + n + ess + 1) : sign_pow(n + 1);
  SkeletonCanon c = canonical_form(r, parity);
  if (c.zero) return std::nullopt;
  return std::make_pair(std::move(c.graph), sign * c.sign);
}

void SkeletonBasis::reindex() {
  const Parity parity = parity_of(d);
  IndexedBasis::reindex([parity](const SkeletonGraph& g) { return canonical_form(g, parity).key; });
}

const SkeletonBasis& SkeletonComplexBases::at_edges(int e) const {
  auto it = slices.find(e);
  if (it == slices.end()) throw Error(ErrorKind::MissingBasis, "no skeleton slice with e = " + std::to_string(e));
  return it->second;
}

SkeletonBasis SkeletonComplexBases::slice_or_empty(int e) const {
  auto it = slices.find(e);
  if (it != slices.end()) return it->second;
  SkeletonBasis b;
  b.d = d;
  b.e = e;
  b.v = e - loop_order + 1;
  return b;
}

SkeletonComplexBases o1_basis_by_loop_order(int d, int b, CoreCatalog& cores) {
  if (b < 2) throw Error(ErrorKind::UnsupportedLoopOrder, "reduced skeleton complex needs loop order >= 2");
  const Parity parity = parity_of(d);
  std::map<int, std::vector<std::pair<std::string, SkeletonGraph>>> buckets;
  std::set<std::string> seen;
  for (int n = 1; n <= 2 * (b - 1); ++n) {
    const int m = n + b - 1;
    for (const CoreGraph& core : cores.cores(n, m)) {
      std::vector<int> options(static_cast<std::size_t>(m));
      std::uint64_t total = 1;
      for (int j = 0; j < m; ++j) {
        options[j] = core.edges[j].first == core.edges[j].second ? 1 : 3;
        total *= static_cast<std::uint64_t>(options[j]);
      }
      for (std::uint64_t code = 0; code < total; ++code) {
        SkeletonGraph s;
        s.vertex_count = n;
        std::uint64_t rest = code;
        for (int j = 0; j < m; ++j) {
          int pick = static_cast<int>(rest % static_cast<std::uint64_t>(options[j]));
          rest /= static_cast<std::uint64_t>(options[j]);
          auto [x, y] = core.edges[j];
          SkEdgeType t = options[j] == 1 ? SkEdgeType::Ess
                         : pick == 0     ? SkEdgeType::Ed
                         : pick == 1     ? SkEdgeType::dE
                                         : SkEdgeType::Ess;
          s.edges.push_back({x, y, t});
        }
        if (has_cycle(s)) continue;
        SkeletonCanon c = canonical_form(s, parity);
        if (c.zero || !seen.insert(c.key).second) continue;
        buckets[c.graph.total_edges()].emplace_back(c.key, std::move(c.graph));
      }
    }
  }
  SkeletonComplexBases out;
  out.d = d;
  out.loop_order = b;
  for (auto& [e, items] : buckets) {
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SkeletonBasis sb;
    sb.d = d;
    sb.e = e;
    sb.v = e - b + 1;
    for (auto& [k, g] : items) sb.classes.push_back(std::move(g));
    sb.reindex();
    out.slices.emplace(e, std::move(sb));
  }
  return out;
}

SparseMatrix skeleton_differential_matrix(const SkeletonBasis& source, const SkeletonBasis& target, int edge_weight,
                                          bool core_part, bool edge_part) {
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < source.size(); ++j) {
    SkeletonDifferential dd = skeleton_differential(source.classes[j], source.d);
    auto put = [&](const SkChain& c, std::int64_t w) {
      for (const auto& [key, term] : c.terms()) {
        int row = target.find(key);
        if (row < 0) throw Error(ErrorKind::MissingBasis, "skeleton differential leaves the target slice");
        entries.push_back({row, static_cast<int>(j), w * term.second});
      }
    };
    if (core_part) put(dd.core, 1);
    if (edge_part) put(dd.edge, edge_weight);
  }
  return SparseMatrix::from_entries(static_cast<int>(target.size()), static_cast<int>(source.size()),
                                    std::move(entries));
}

SparseMatrix inclusion_matrix(const SkeletonBasis& source, const FullBasis& target) {
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < source.size(); ++j) {
    Chain c = expand(source.classes[j], source.d);
    for (const auto& [key, term] : c.terms()) {
      int row = target.find(key);
      if (row < 0) throw Error(ErrorKind::MissingBasis, "expansion leaves the full slice");
      entries.push_back({row, static_cast<int>(j), term.second});
    }
  }
  return SparseMatrix::from_entries(static_cast<int>(target.size()), static_cast<int>(source.size()),
                                    std::move(entries));
}

std::string to_text(const SkeletonGraph& s) {
  std::ostringstream os;
  os << s.vertex_count << ' ' << s.edges.size() << '\n';
  for (const SkeletonEdge& x : s.edges) {
    char t = x.type == SkEdgeType::Ed ? '>' : x.type == SkEdgeType::dE ? '<' : x.type == SkEdgeType::Ess ? 'S' : 'E';
    os << x.tail + 1 << ' ' << x.head + 1 << ' ' << t << '\n';
  }
  return os.str();
}

std::optional<SkeletonGraph> read_skeleton_record(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n)) return std::nullopt;
  if (!(in >> m) || n < 1 || m < 0) throw Error(ErrorKind::ParseError, "skeleton header");
  SkeletonGraph s;
  s.vertex_count = n;
  for (int i = 0; i < m; ++i) {
    int a = 0, b = 0;
    char t = 0;
    if (!(in >> a >> b >> t)) throw Error(ErrorKind::ParseError, "truncated skeleton edge list");
    if (a < 1 || b < 1 || a > n || b > n) throw Error(ErrorKind::OutOfRangeEndpoint, "skeleton endpoint outside [1, v]");
    SkEdgeType type;
    switch (t) {
      case '>': type = SkEdgeType::Ed; break;
      case '<': type = SkEdgeType::dE; break;
      case 'S': type = SkEdgeType::Ess; break;
      case 'E': type = SkEdgeType::EE; break;
      default: throw Error(ErrorKind::ParseError, std::string("unknown skeleton edge type '") + t + "'");
    }
    s.edges.push_back({a - 1, b - 1, type});
  }
  return s;
}

}  // namespace ogc
